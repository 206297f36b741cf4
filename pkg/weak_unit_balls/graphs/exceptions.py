"""This module contains custom exceptions for the "graphs" app.

Every exception raised by the weak unit ball tools derives from WeakRepError, so the
command line surface can report all of them in one place.
"""


class WeakRepError(Exception):
    """Base class for all errors raised by the weak unit ball tools."""

    def __init__(self, message: str = "Weak representation error") -> None:
        """Initialize the exception with a message.

        Args:
            message (str): A custom message describing the exception.
        """
        super().__init__(message)


class InvalidGraphError(WeakRepError, ValueError):
    """Exception raised when a labeled graph violates its structural invariants."""

    def __init__(self, message: str = "Invalid labeled graph") -> None:
        """Initialize the exception with a message.

        Args:
            message (str): A custom message describing the exception.
        """
        super().__init__(message)


class GraphFormatError(WeakRepError, ValueError):
    """Exception raised when graph text cannot be parsed."""

    def __init__(
        self,
        message: str = "Malformed graph text",
        line_number: int | None = None,
    ) -> None:
        """Initialize the exception with a message and the offending line.

        Args:
            message (str): A custom message describing the exception.
            line_number (int | None): 1-based line number of the problem, if known.
        """
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class InvalidEmbeddingError(WeakRepError, ValueError):
    """Exception raised when an outer embedding does not fit its graph."""

    def __init__(self, message: str = "Inconsistent outer embedding") -> None:
        """Initialize the exception with a message.

        Args:
            message (str): A custom message describing the exception.
        """
        super().__init__(message)


class NotOuterplanarError(WeakRepError, ValueError):
    """Exception raised when an operation requires an outerplanar graph."""

    def __init__(self, message: str = "Graph is not outerplanar") -> None:
        """Initialize the exception with a message.

        Args:
            message (str): A custom message describing the exception.
        """
        super().__init__(message)


class WorkBoundExceededError(WeakRepError):
    """Exception raised when an exhaustive search would exceed its work bound."""

    def __init__(self, message: str = "Search space exceeds the work bound") -> None:
        """Initialize the exception with a message.

        Args:
            message (str): A custom message describing the exception.
        """
        super().__init__(message)


class LogicalError(WeakRepError):
    """Exception raised when a logical error is encountered."""

    def __init__(self, message: str = "A logical error occurred") -> None:
        """Initialize the exception with a message.

        Args:
            message (str): A custom message describing the exception.
        """
        super().__init__(message)
