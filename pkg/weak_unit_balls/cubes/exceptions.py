"""This module contains custom exceptions for the "cubes" app."""

from weak_unit_balls.graphs.exceptions import WeakRepError


class InvalidSquareRepError(WeakRepError, ValueError):
    """Exception raised when squares overlap or do not realize a required contact."""

    def __init__(self, message: str = "Invalid square contact representation") -> None:
        """Initialize the exception with a message.

        Args:
            message (str): A custom message describing the exception.
        """
        super().__init__(message)


class SideLengthMismatchError(WeakRepError, ValueError):
    """Exception raised when the square side is not the threshold plus epsilon."""

    def __init__(self, message: str = "Square side must equal t + epsilon") -> None:
        """Initialize the exception with a message.

        Args:
            message (str): A custom message describing the exception.
        """
        super().__init__(message)


class MissingCubeError(WeakRepError, ValueError):
    """Exception raised when a scene or square rep lacks a vertex of the graph."""

    def __init__(self, message: str = "Scene is missing a vertex") -> None:
        """Initialize the exception with a message.

        Args:
            message (str): A custom message describing the exception.
        """
        super().__init__(message)
