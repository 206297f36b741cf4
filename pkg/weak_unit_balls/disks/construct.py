"""Weak unit disk representations of degree-2 contractible graphs."""

import logging

from weak_unit_balls.graphs.contraction import find_degree2_contraction_sequence
from weak_unit_balls.graphs.contraction import iter_contractions
from weak_unit_balls.graphs.exceptions import LogicalError
from weak_unit_balls.graphs.models import EdgeLabel
from weak_unit_balls.graphs.models import LabeledGraph
from weak_unit_balls.graphs.models import VerificationResult

from .constants import DISK_DIAMETER
from .constants import MAX_EDGE_GAP_SQUARED
from .constants import PENDANT_OFFSET_FAR
from .constants import PENDANT_OFFSET_NEAR
from .exceptions import MissingPointError
from .exceptions import NotContractibleError
from .lattice import canonicalize_pair
from .models import DiskRep
from .models import Point
from .models import squared_distance
from .table import place_from_table

logger = logging.getLogger(__name__)


def verify_disk(g: LabeledGraph, rep: DiskRep) -> VerificationResult:
    """Check that NEAR edges have |I(u) - I(v)|^2 <= d^2 and FAR edges more.

    Endpoints of an edge sharing a point count as a violation whatever the label.

    Args:
        g (LabeledGraph): The labeled graph.
        rep (DiskRep): The representation; d is its own diameter.

    Returns:
        VerificationResult: The violated edges, if any.

    Raises:
        MissingPointError: If a vertex of g has no point.
    """
    missing = [v for v in g.vertices if v not in rep.points]
    if missing:
        msg = f"No point for vertices {missing}"
        raise MissingPointError(msg)
    bound = rep.diameter**2
    violations = []
    for u, v, label in g.edges:
        distance = squared_distance(rep.points[u], rep.points[v])
        if distance == 0 or (distance <= bound) != (label is EdgeLabel.NEAR):
            violations.append((u, v))
    return VerificationResult(tuple(violations))


def max_edge_gap_squared(g: LabeledGraph, rep: DiskRep) -> int:
    """Return the largest squared edge length, 0 for an edgeless graph."""
    return max(
        (squared_distance(rep.points[u], rep.points[v]) for u, v in g.pairs()),
        default=0,
    )


def _pendant_point(anchor: Point, label: EdgeLabel) -> Point:
    dx, dy = PENDANT_OFFSET_NEAR if label is EdgeLabel.NEAR else PENDANT_OFFSET_FAR
    return (anchor[0] + dx, anchor[1] + dy)


def represent_degree2_contractible(g: LabeledGraph) -> DiskRep:
    """Build a diameter-2 lattice disk representation by undoing contractions.

    The contraction sequence is replayed backwards from its roots, which sit at the
    origin. A vertex of degree one goes next to its neighbor at a fixed offset. A
    vertex of degree two is placed from the table after moving its two neighbors to
    canonical position, then mapped back. Edges the contraction invented carry the
    label NEAR, which never constrains the real graph.

    Args:
        g (LabeledGraph): A degree-2 contractible labeled graph.

    Returns:
        DiskRep: A verified representation with every edge at most 4 long.

    Raises:
        NotContractibleError: If g is not degree-2 contractible.
        LogicalError: If the construction fails verification.
    """
    sequence = find_degree2_contraction_sequence(g)
    if sequence is None:
        msg = "Graph is not degree-2 contractible: greedy contraction got stuck"
        raise NotContractibleError(msg)
    points: dict[int, Point] = dict.fromkeys(sequence.roots, (0, 0))
    for step, before in reversed(list(iter_contractions(g, sequence))):
        v = step.contracted
        kept = step.kept_neighbor
        if step.other_neighbor is None:
            points[v] = _pendant_point(points[kept], before.label(v, kept))
            continue
        other = step.other_neighbor
        iso, canonical_other = canonicalize_pair(points[kept], points[other])
        placed = place_from_table(
            canonical_other,
            before.label(kept, v),
            before.label(v, other),
        )
        points[v] = iso.inverse().apply(placed)
    rep = DiskRep(points, DISK_DIAMETER)
    result = verify_disk(g, rep)
    if not result or max_edge_gap_squared(g, rep) > MAX_EDGE_GAP_SQUARED:
        msg = f"Contraction replay failed on edges {list(result.violations)}"
        logger.critical(msg)
        raise LogicalError(msg)
    logger.info(
        "Represented %d vertices with %d contractions",
        g.vertex_count,
        len(sequence),
    )
    return rep
