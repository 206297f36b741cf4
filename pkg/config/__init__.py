"""Configuration package for the weak unit ball representation tools."""
