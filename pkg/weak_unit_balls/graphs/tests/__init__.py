"""Provide unit tests for the `graphs` package."""
