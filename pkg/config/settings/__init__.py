"""Settings for the weak unit ball representation tools."""
