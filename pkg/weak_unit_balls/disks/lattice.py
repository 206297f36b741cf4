"""Canonical position of a vertex pair under the lattice symmetries."""

import logging

from weak_unit_balls.graphs.exceptions import LogicalError

from .exceptions import CoincidentPointsError
from .models import LATTICE_SYMMETRIES
from .models import LatticeIsometry
from .models import Point

logger = logging.getLogger(__name__)


def canonicalize_pair(p_u: Point, p_w: Point) -> tuple[LatticeIsometry, Point]:
    """Move p_u to the origin and p_w to some (a, b) with 0 <= b <= a.

    The first symmetry, in LATTICE_SYMMETRIES order, that lands in the canonical
    wedge is used, so the result is deterministic.

    Args:
        p_u (Point): The point sent to the origin.
        p_w (Point): The point sent into the canonical wedge.

    Returns:
        tuple[LatticeIsometry, Point]: The isometry and the image (a, b) of p_w.

    Raises:
        CoincidentPointsError: If the two points are equal.
    """
    if p_u == p_w:
        msg = f"Cannot canonicalize the coincident points {p_u} and {p_w}"
        raise CoincidentPointsError(msg)
    for matrix in LATTICE_SYMMETRIES:
        rotation = LatticeIsometry(matrix)
        x, y = rotation.apply(p_u)
        iso = LatticeIsometry(matrix, (-x, -y))
        a, b = iso.apply(p_w)
        if 0 <= b <= a:
            return iso, (a, b)
    msg = f"No lattice symmetry puts {p_w} in the canonical wedge around {p_u}"
    logger.critical(msg)
    raise LogicalError(msg)
