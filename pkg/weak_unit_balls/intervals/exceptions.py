"""This module contains custom exceptions for the "intervals" app."""

from weak_unit_balls.graphs.exceptions import WeakRepError


class MissingCoordinateError(WeakRepError, ValueError):
    """Exception raised when a representation lacks a vertex of the graph."""

    def __init__(self, message: str = "Representation is missing a vertex") -> None:
        """Initialize the exception with a message.

        Args:
            message (str): A custom message describing the exception.
        """
        super().__init__(message)


class InvalidColoringError(WeakRepError, ValueError):
    """Exception raised when a threshold coloring violates its invariants."""

    def __init__(self, message: str = "Invalid threshold coloring") -> None:
        """Initialize the exception with a message.

        Args:
            message (str): A custom message describing the exception.
        """
        super().__init__(message)


class EnumerationBoundExceededError(WeakRepError):
    """Exception raised when a labeling enumeration is larger than allowed."""

    def __init__(self, message: str = "Too many edges to enumerate labelings") -> None:
        """Initialize the exception with a message.

        Args:
            message (str): A custom message describing the exception.
        """
        super().__init__(message)


class InvalidDecompositionError(WeakRepError, ValueError):
    """Exception raised when an (I, F) decomposition is not valid for its graph."""

    def __init__(self, message: str = "Invalid decomposition") -> None:
        """Initialize the exception with a message.

        Args:
            message (str): A custom message describing the exception.
        """
        super().__init__(message)


class InfeasiblePairError(WeakRepError, ValueError):
    """Exception raised when path endpoints admit no representation."""

    def __init__(self, message: str = "Endpoint pair is not feasible") -> None:
        """Initialize the exception with a message.

        Args:
            message (str): A custom message describing the exception.
        """
        super().__init__(message)


class GirthTooSmallError(WeakRepError, ValueError):
    """Exception raised when a construction needs a larger girth."""

    def __init__(self, message: str = "Girth is too small") -> None:
        """Initialize the exception with a message.

        Args:
            message (str): A custom message describing the exception.
        """
        super().__init__(message)
