"""Exact contact predicates for axis-aligned squares and cubes of one side length.

Boxes are given by their lower corners. Two boxes are in contact when they touch
along exactly one axis and overlap with positive length along every other axis, so
the shared boundary has positive area.
"""

import itertools
import logging
from collections.abc import Sequence
from fractions import Fraction

from weak_unit_balls.graphs.models import Edge
from weak_unit_balls.graphs.models import LabeledGraph

from .exceptions import InvalidSquareRepError
from .models import CubeScene
from .models import SquareContactRep

logger = logging.getLogger(__name__)


def contact_measure(
    p: Sequence[Fraction],
    q: Sequence[Fraction],
    side: Fraction,
) -> Fraction:
    """Return the length or area of the boundary shared by two boxes.

    Args:
        p (Sequence[Fraction]): Lower corner of the first box.
        q (Sequence[Fraction]): Lower corner of the second box.
        side (Fraction): The common side length.

    Returns:
        Fraction: The measure of the shared boundary, 0 when the boxes are apart,
            touch in a lower-dimensional set or have overlapping interiors.
    """
    gaps = [abs(a - b) for a, b in zip(p, q, strict=True)]
    touching = [axis for axis, gap in enumerate(gaps) if gap == side]
    if len(touching) != 1:
        return Fraction(0)
    measure = Fraction(1)
    for axis, gap in enumerate(gaps):
        if axis != touching[0]:
            measure *= max(Fraction(0), side - gap)
    return measure


def interiors_overlap(
    p: Sequence[Fraction],
    q: Sequence[Fraction],
    side: Fraction,
) -> bool:
    """Return True if the open boxes share a point."""
    return all(abs(a - b) < side for a, b in zip(p, q, strict=True))


def _corners(rep: SquareContactRep | CubeScene) -> dict[int, Sequence[Fraction]]:
    if isinstance(rep, SquareContactRep):
        return {v: rep.lower_corner(v) for v in rep.centers}
    return dict(rep.corners)


def contact_graph(rep: SquareContactRep | CubeScene) -> set[Edge]:
    """Return every pair (u, v), u < v, whose boxes share boundary of positive measure.

    Args:
        rep (SquareContactRep | CubeScene): Squares or cubes.

    Returns:
        set[Edge]: The contact pairs.
    """
    corners = _corners(rep)
    return {
        (u, v)
        for u, v in itertools.combinations(sorted(corners), 2)
        if contact_measure(corners[u], corners[v], rep.side) > 0
    }


def overlapping_pairs(rep: SquareContactRep | CubeScene) -> list[Edge]:
    """Return the pairs whose boxes have intersecting interiors."""
    corners = _corners(rep)
    return [
        (u, v)
        for u, v in itertools.combinations(sorted(corners), 2)
        if interiors_overlap(corners[u], corners[v], rep.side)
    ]


def validate_square_contacts(sq: SquareContactRep) -> None:
    """Check that no two squares have overlapping interiors.

    Equal side lengths hold by construction of SquareContactRep.

    Args:
        sq (SquareContactRep): The squares.

    Raises:
        InvalidSquareRepError: If two interiors overlap.
    """
    overlapping = overlapping_pairs(sq)
    if overlapping:
        msg = f"Interiors of squares overlap for pairs {overlapping}"
        raise InvalidSquareRepError(msg)


def grid_strip_squares(
    rows: int,
    cols: int,
    side: Fraction,
) -> tuple[SquareContactRep, LabeledGraph]:
    """Return a rows x cols grid of touching squares and its contact graph.

    Vertex r * cols + c has its square centered at (c * side, r * side). Diagonal
    squares only share a corner, so the graph is the grid graph with NEAR labels.

    Args:
        rows (int): Number of rows, at least 1.
        cols (int): Number of columns, at least 1.
        side (Fraction): The common side length.

    Returns:
        tuple[SquareContactRep, LabeledGraph]: The squares and the grid graph.

    Raises:
        ValueError: If rows or cols is below 1.
    """
    if rows < 1 or cols < 1:
        msg = f"Grid needs at least one row and column, got {rows} x {cols}"
        raise ValueError(msg)
    side = Fraction(side)
    centers = {
        r * cols + c: (c * side, r * side)
        for r, c in itertools.product(range(rows), range(cols))
    }
    pairs = [(v, v + 1) for v in range(rows * cols) if (v + 1) % cols]
    pairs += [(v, v + cols) for v in range((rows - 1) * cols)]
    logger.debug("Built a %d x %d square grid with %d contacts", rows, cols, len(pairs))
    return SquareContactRep(centers, side), LabeledGraph.from_pairs(rows * cols, pairs)
