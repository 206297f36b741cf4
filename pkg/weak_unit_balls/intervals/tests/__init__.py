"""Provide unit tests for the `intervals` package."""
