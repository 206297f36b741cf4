"""This module contains custom exceptions for the "cli" app."""

from weak_unit_balls.graphs.exceptions import WeakRepError


class PayloadError(WeakRepError, ValueError):
    """Exception raised when a JSON document does not have the expected shape."""

    def __init__(
        self,
        message: str = "Malformed JSON document",
        field: str | None = None,
    ) -> None:
        """Initialize the exception with a message and the offending field.

        Args:
            message (str): A custom message describing the exception.
            field (str | None): Dotted path of the field at fault, if known.
        """
        self.field = field
        if field is not None:
            message = f"field {field!r}: {message}"
        super().__init__(message)


class UnverifiedRepresentationError(WeakRepError, ValueError):
    """Exception raised when asked to draw a representation that fails its graph."""

    def __init__(
        self,
        message: str = "Representation does not verify against the graph",
    ) -> None:
        """Initialize the exception with a message.

        Args:
            message (str): A custom message describing the exception.
        """
        super().__init__(message)
