"""Provide unit tests for the `disks` package."""
