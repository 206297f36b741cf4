"""Domain types for weak unit interval representations and decompositions."""

import enum

from weak_unit_balls._compat import StrEnum
from collections.abc import Iterable
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction

from weak_unit_balls.graphs.models import Edge

from .exceptions import InvalidColoringError
from .exceptions import InvalidDecompositionError


@dataclass(frozen=True)
class IntervalRep:
    """Interval centers I(v) together with the common diameter d."""

    coords: dict[int, Fraction]
    diameter: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        """Store coordinates and diameter as exact fractions."""
        object.__setattr__(
            self,
            "coords",
            {v: Fraction(x) for v, x in sorted(self.coords.items())},
        )
        object.__setattr__(self, "diameter", Fraction(self.diameter))
        if self.diameter <= 0:
            msg = f"Diameter must be positive, got {self.diameter}"
            raise ValueError(msg)

    def scaled(self, factor: Fraction) -> "IntervalRep":
        """Return the representation with every coordinate and d multiplied.

        Args:
            factor (Fraction): A positive scale factor.

        Returns:
            IntervalRep: The scaled representation.
        """
        return IntervalRep(
            {v: x * factor for v, x in self.coords.items()},
            self.diameter * factor,
        )

    def restricted(self, vertices: Iterable[int]) -> "IntervalRep":
        """Return the representation restricted to ``vertices``."""
        return IntervalRep({v: self.coords[v] for v in vertices}, self.diameter)


@dataclass(frozen=True)
class ThresholdColoring:
    """An (r, t)-threshold coloring: colors in 1..r, NEAR iff |c(u) - c(v)| <= t."""

    colors: dict[int, int]
    color_range: int
    threshold: int

    def __post_init__(self) -> None:
        """Validate the coloring.

        Raises:
            InvalidColoringError: If r < 1, t < 0 or a color is outside 1..r.
        """
        if self.color_range < 1:
            msg = f"Color range must be positive, got {self.color_range}"
            raise InvalidColoringError(msg)
        if self.threshold < 0:
            msg = f"Threshold must be non-negative, got {self.threshold}"
            raise InvalidColoringError(msg)
        for v, color in self.colors.items():
            if not 1 <= color <= self.color_range:
                msg = f"Color {color} of vertex {v} outside 1..{self.color_range}"
                raise InvalidColoringError(msg)
        object.__setattr__(self, "colors", dict(sorted(self.colors.items())))


class Orientation(StrEnum):
    """Which endpoint of a FAR edge (u, v), u < v, lies further right."""

    U_ABOVE_V = "u_above_v"
    V_ABOVE_U = "v_above_u"


@dataclass(frozen=True)
class FarOrientation:
    """Orientation chosen for every FAR edge of a graph."""

    direction: dict[Edge, Orientation]


@dataclass(frozen=True, order=True)
class IPair:
    """Two I-set vertices at distance two, joined through ``middle``.

    The edges (u, middle) and (middle, v) are the bad edges of the pair.
    """

    u: int
    v: int
    middle: int

    def bad_edges(self) -> tuple[Edge, Edge]:
        """Return the two edges of the connecting path."""
        return (
            (min(self.u, self.middle), max(self.u, self.middle)),
            (min(self.middle, self.v), max(self.middle, self.v)),
        )


@dataclass(frozen=True)
class Decomposition:
    """Vertex bipartition into an I-set and a forest-inducing F-set.

    ``ipairs`` is empty for a 2-independent I-set, and lists the I-pairs when the
    I-set is only nearly 2-independent.
    """

    iset: frozenset[int]
    fset: frozenset[int]
    ipairs: tuple[IPair, ...] = field(default=())

    def __post_init__(self) -> None:
        """Normalize the sets and reject overlapping ones.

        Raises:
            InvalidDecompositionError: If the sets intersect.
        """
        object.__setattr__(self, "iset", frozenset(self.iset))
        object.__setattr__(self, "fset", frozenset(self.fset))
        object.__setattr__(self, "ipairs", tuple(sorted(self.ipairs)))
        overlap = self.iset & self.fset
        if overlap:
            msg = f"Vertices {sorted(overlap)} are in both I and F"
            raise InvalidDecompositionError(msg)


@dataclass(frozen=True)
class FeasiblePair:
    """Endpoint coordinates x, y for a labeled path on ``path_length`` vertices."""

    x: Fraction
    y: Fraction
    path_length: int

    @property
    def gap(self) -> Fraction:
        """Return |x - y|."""
        return abs(Fraction(self.x) - Fraction(self.y))
