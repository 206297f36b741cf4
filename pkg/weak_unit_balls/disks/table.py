"""Placement table for reinserting a contracted degree-2 vertex.

With u at the origin and w at a canonical (a, b), the table gives a point for v that
satisfies both labels (u, v) and (v, w) at diameter 2. The label pair (F, N) is not
listed: it is the (N, F) row seen from w.
"""

import logging

from weak_unit_balls.graphs.models import EdgeLabel

from .constants import DISK_DIAMETER
from .exceptions import TableDomainError
from .lattice import canonicalize_pair
from .models import Point
from .models import squared_distance

logger = logging.getLogger(__name__)

N = EdgeLabel.NEAR
F = EdgeLabel.FAR

TABLE_DOMAIN: tuple[Point, ...] = (
    (1, 0),
    (2, 0),
    (3, 0),
    (4, 0),
    (1, 1),
    (2, 1),
    (3, 1),
    (2, 2),
)

PLACEMENT_TABLE: dict[tuple[EdgeLabel, EdgeLabel], dict[Point, Point]] = {
    (N, N): {
        (1, 0): (2, 0),
        (2, 0): (1, 0),
        (3, 0): (2, 0),
        (4, 0): (2, 0),
        (1, 1): (2, 0),
        (2, 1): (2, 0),
        (3, 1): (2, 0),
        (2, 2): (2, 0),
    },
    (N, F): {
        (1, 0): (0, 2),
        (2, 0): (0, 1),
        (3, 0): (0, 1),
        (4, 0): (1, 0),
        (1, 1): (-1, 0),
        (2, 1): (-1, 0),
        (3, 1): (1, 0),
        (2, 2): (1, 0),
    },
    (F, F): {
        (1, 0): (2, 2),
        (2, 0): (1, 2),
        (3, 0): (2, 2),
        (4, 0): (2, 2),
        (1, 1): (0, 3),
        (2, 1): (0, 3),
        (3, 1): (1, 2),
        (2, 2): (0, 3),
    },
}


def satisfies(
    p: Point,
    q: Point,
    label: EdgeLabel,
    diameter: int = DISK_DIAMETER,
) -> bool:
    """Return True if the points p, q are distinct and realize ``label``.

    Args:
        p (Point): One center.
        q (Point): The other center.
        label (EdgeLabel): The required relation.
        diameter (int): The disk diameter.

    Returns:
        bool: NEAR iff the squared distance is at most d^2, and p != q.
    """
    distance = squared_distance(p, q)
    return distance > 0 and (distance <= diameter**2) == (label is EdgeLabel.NEAR)


def place_from_table(
    canonical_w: Point,
    label_uv: EdgeLabel,
    label_vw: EdgeLabel,
) -> Point:
    """Return the table position of v for u at the origin and w at ``canonical_w``.

    Args:
        canonical_w (Point): The canonical position (a, b) of w.
        label_uv (EdgeLabel): Label of the edge (u, v).
        label_vw (EdgeLabel): Label of the edge (v, w).

    Returns:
        Point: The position of v in the same frame.

    Raises:
        TableDomainError: If ``canonical_w`` is not a table row.
    """
    if canonical_w not in TABLE_DOMAIN:
        msg = f"No table row for w at {canonical_w}"
        raise TableDomainError(msg)
    if (label_uv, label_vw) == (F, N):
        iso, seen_from_w = canonicalize_pair(canonical_w, (0, 0))
        point = iso.inverse().apply(PLACEMENT_TABLE[N, F][seen_from_w])
    else:
        point = PLACEMENT_TABLE[label_uv, label_vw][canonical_w]
    logger.debug(
        "Placed v at %s for w at %s with labels %s%s",
        point,
        canonical_w,
        label_uv,
        label_vw,
    )
    return point
