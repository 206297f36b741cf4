"""Backports of standard-library names missing on older interpreters."""

import enum

if hasattr(enum, "StrEnum"):
    StrEnum = enum.StrEnum
else:  # Python < 3.11: same semantics as the stdlib class for explicit values.

    class StrEnum(str, enum.Enum):  # type: ignore[no-redef]
        __str__ = str.__str__
        __format__ = str.__format__
