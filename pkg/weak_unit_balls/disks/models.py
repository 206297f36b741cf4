"""Domain types for weak unit disk representations on the integer lattice."""

import itertools
from dataclasses import dataclass

from .constants import DISK_DIAMETER
from .exceptions import InvalidDiskRepError

Point = tuple[int, int]
Matrix = tuple[tuple[int, int], tuple[int, int]]


def squared_distance(p: Point, q: Point) -> int:
    """Return the squared Euclidean distance between two lattice points."""
    return (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2


@dataclass(frozen=True)
class DiskRep:
    """Disk centers I(v) on the integer lattice with a common integer diameter."""

    points: dict[int, Point]
    diameter: int = DISK_DIAMETER

    def __post_init__(self) -> None:
        """Validate the centers and the diameter.

        Raises:
            InvalidDiskRepError: If a coordinate is not an integer or d < 1.
        """
        if not isinstance(self.diameter, int) or self.diameter < 1:
            msg = f"Diameter must be a positive integer, got {self.diameter!r}"
            raise InvalidDiskRepError(msg)
        points = {}
        for v, point in sorted(self.points.items()):
            if len(point) != 2 or not all(isinstance(c, int) for c in point):  # noqa: PLR2004
                msg = f"Point of vertex {v} must be two integers, got {point!r}"
                raise InvalidDiskRepError(msg)
            points[v] = (point[0], point[1])
        object.__setattr__(self, "points", points)


def _symmetries() -> tuple[Matrix, ...]:
    """Return the eight signed permutation matrices, identity first."""
    matrices: list[Matrix] = []
    for swap in (False, True):
        for sx, sy in itertools.product((1, -1), repeat=2):
            if swap:
                matrices.append(((0, sx), (sy, 0)))
            else:
                matrices.append(((sx, 0), (0, sy)))
    return tuple(matrices)


LATTICE_SYMMETRIES = _symmetries()


@dataclass(frozen=True)
class LatticeIsometry:
    """The map p -> M p + t for a lattice symmetry M and an integer translation t."""

    matrix: Matrix = ((1, 0), (0, 1))
    translation: Point = (0, 0)

    def __post_init__(self) -> None:
        """Reject matrices that are not lattice symmetries.

        Raises:
            InvalidDiskRepError: If the matrix is not a signed permutation.
        """
        if self.matrix not in LATTICE_SYMMETRIES:
            msg = f"{self.matrix} is not a symmetry of the integer lattice"
            raise InvalidDiskRepError(msg)

    def apply(self, p: Point) -> Point:
        """Return the image of p."""
        (a, b), (c, d) = self.matrix
        x, y = p
        tx, ty = self.translation
        return (a * x + b * y + tx, c * x + d * y + ty)

    def inverse(self) -> "LatticeIsometry":
        """Return the isometry undoing this one.

        The matrix is orthogonal, so its inverse is its transpose.
        """
        (a, b), (c, d) = self.matrix
        transpose = ((a, c), (b, d))
        tx, ty = self.translation
        back = LatticeIsometry(transpose)
        x, y = back.apply((tx, ty))
        return LatticeIsometry(transpose, (-x, -y))

    def compose(self, first: "LatticeIsometry") -> "LatticeIsometry":
        """Return the isometry applying ``first`` and then this one.

        Args:
            first (LatticeIsometry): The isometry applied first.

        Returns:
            LatticeIsometry: The composition.
        """
        (a, b), (c, d) = self.matrix
        (e, f), (g, h) = first.matrix
        matrix = ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))
        return LatticeIsometry(matrix, self.apply(first.translation))
