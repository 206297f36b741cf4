"""Define the "cubes" package: lifting square contacts into cube contacts."""
