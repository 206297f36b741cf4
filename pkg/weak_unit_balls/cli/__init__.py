"""Define the "cli" package: file formats, drawings and the weakrep command."""
