"""Fixtures for the "cubes" app tests."""

from fractions import Fraction

import pytest

from weak_unit_balls.cubes.models import SquareContactRep


@pytest.fixture()
def square_pair() -> SquareContactRep:
    """Return two squares of side 3/2 touching along a full side.

    Returns:
        SquareContactRep: Squares of vertices 0 and 1, side t + epsilon for t = 1.
    """
    return SquareContactRep({0: (0, 0), 1: (Fraction(3, 2), 0)}, Fraction(3, 2))
