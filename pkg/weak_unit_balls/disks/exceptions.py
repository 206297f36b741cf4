"""This module contains custom exceptions for the "disks" app."""

from weak_unit_balls.graphs.exceptions import WeakRepError


class MissingPointError(WeakRepError, ValueError):
    """Exception raised when a disk representation lacks a vertex of the graph."""

    def __init__(self, message: str = "Representation is missing a vertex") -> None:
        """Initialize the exception with a message.

        Args:
            message (str): A custom message describing the exception.
        """
        super().__init__(message)


class InvalidDiskRepError(WeakRepError, ValueError):
    """Exception raised when a disk representation violates its invariants."""

    def __init__(self, message: str = "Invalid disk representation") -> None:
        """Initialize the exception with a message.

        Args:
            message (str): A custom message describing the exception.
        """
        super().__init__(message)


class CoincidentPointsError(WeakRepError, ValueError):
    """Exception raised when two points that must differ coincide."""

    def __init__(self, message: str = "Points coincide") -> None:
        """Initialize the exception with a message.

        Args:
            message (str): A custom message describing the exception.
        """
        super().__init__(message)


class TableDomainError(WeakRepError, ValueError):
    """Exception raised for a canonical position the placement table lacks."""

    def __init__(self, message: str = "Position outside the placement table") -> None:
        """Initialize the exception with a message.

        Args:
            message (str): A custom message describing the exception.
        """
        super().__init__(message)


class NotContractibleError(WeakRepError, ValueError):
    """Exception raised when a graph is not degree-2 contractible."""

    def __init__(self, message: str = "Graph is not degree-2 contractible") -> None:
        """Initialize the exception with a message.

        Args:
            message (str): A custom message describing the exception.
        """
        super().__init__(message)
