"""Domain types for square and cube contact representations."""

from dataclasses import dataclass
from fractions import Fraction

from .exceptions import InvalidSquareRepError

Point2 = tuple[Fraction, Fraction]
Point3 = tuple[Fraction, Fraction, Fraction]


def _positive(side: Fraction) -> Fraction:
    side = Fraction(side)
    if side <= 0:
        msg = f"Side length must be positive, got {side}"
        raise InvalidSquareRepError(msg)
    return side


@dataclass(frozen=True)
class SquareContactRep:
    """Axis-aligned squares of one common side length, given by their centers."""

    centers: dict[int, Point2]
    side: Fraction

    def __post_init__(self) -> None:
        """Store centers and side as exact fractions.

        Raises:
            InvalidSquareRepError: If the side is not positive.
        """
        object.__setattr__(self, "side", _positive(self.side))
        object.__setattr__(
            self,
            "centers",
            {
                v: (Fraction(x), Fraction(y))
                for v, (x, y) in sorted(self.centers.items())
            },
        )

    def lower_corner(self, v: int) -> Point2:
        """Return the corner of v's square with the smallest coordinates."""
        x, y = self.centers[v]
        half = self.side / 2
        return (x - half, y - half)


@dataclass(frozen=True)
class CubeScene:
    """Axis-aligned cubes of one common side length, given by their base corners."""

    corners: dict[int, Point3]
    side: Fraction

    def __post_init__(self) -> None:
        """Store corners and side as exact fractions.

        Raises:
            InvalidSquareRepError: If the side is not positive.
        """
        object.__setattr__(self, "side", _positive(self.side))
        object.__setattr__(
            self,
            "corners",
            {
                v: (Fraction(x), Fraction(y), Fraction(z))
                for v, (x, y, z) in sorted(self.corners.items())
            },
        )
