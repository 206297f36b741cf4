"""Constants for cube contact representations."""

from fractions import Fraction

# Default slack added to the threshold to get the square side length.
DEFAULT_EPSILON = Fraction(1, 2)
