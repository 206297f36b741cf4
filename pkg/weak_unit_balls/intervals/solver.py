"""Exact decision procedure for weak unit interval representations.

For a fixed orientation of the FAR edges the problem is a system of difference
constraints: |x_u - x_v| <= 1 for NEAR edges and x_low < x_high - 1 for oriented FAR
edges. Strict constraints are encoded by scaling every weight by K = n + 1 and
subtracting one, so a cycle is negative in the encoding exactly when its real weight
is negative, or zero with a strict arc on it. Bellman-Ford from a virtual source then
decides feasibility and yields the potentials for a witness.
"""

import logging
import math
from fractions import Fraction

import networkx as nx

from weak_unit_balls.graphs.exceptions import LogicalError
from weak_unit_balls.graphs.models import Edge
from weak_unit_balls.graphs.models import EdgeLabel
from weak_unit_balls.graphs.models import LabeledGraph
from weak_unit_balls.graphs.models import VerificationResult

from .exceptions import MissingCoordinateError
from .models import FarOrientation
from .models import IntervalRep
from .models import Orientation
from .models import ThresholdColoring

logger = logging.getLogger(__name__)

_SOURCE = -1

Arc = tuple[int, int, int]


def verify_interval(g: LabeledGraph, rep: IntervalRep) -> VerificationResult:
    """Check that NEAR edges have |I(u) - I(v)| <= d and FAR edges > d.

    Args:
        g (LabeledGraph): The labeled graph.
        rep (IntervalRep): The representation; d is its own diameter.

    Returns:
        VerificationResult: The violated edges, if any.

    Raises:
        MissingCoordinateError: If a vertex of g has no coordinate.
    """
    missing = [v for v in g.vertices if v not in rep.coords]
    if missing:
        msg = f"No coordinate for vertices {missing}"
        raise MissingCoordinateError(msg)
    violations = []
    for u, v, label in g.edges:
        near = abs(rep.coords[u] - rep.coords[v]) <= rep.diameter
        if near != (label is EdgeLabel.NEAR):
            violations.append((u, v))
    return VerificationResult(tuple(violations))


def verify_threshold_coloring(
    g: LabeledGraph,
    coloring: ThresholdColoring,
) -> VerificationResult:
    """Check that NEAR edges have |c(u) - c(v)| <= t and FAR edges > t.

    Args:
        g (LabeledGraph): The labeled graph.
        coloring (ThresholdColoring): The coloring.

    Returns:
        VerificationResult: The violated edges, if any.

    Raises:
        MissingCoordinateError: If a vertex of g has no color.
    """
    missing = [v for v in g.vertices if v not in coloring.colors]
    if missing:
        msg = f"No color for vertices {missing}"
        raise MissingCoordinateError(msg)
    colors = coloring.colors
    violations = [
        (u, v)
        for u, v, label in g.edges
        if (abs(colors[u] - colors[v]) <= coloring.threshold)
        != (label is EdgeLabel.NEAR)
    ]
    return VerificationResult(tuple(violations))


def _scale(g: LabeledGraph) -> int:
    return g.vertex_count + 1


def _near_arcs(g: LabeledGraph) -> list[Arc]:
    k = _scale(g)
    arcs: list[Arc] = []
    for u, v in g.near_edges():
        arcs.append((u, v, k))
        arcs.append((v, u, k))
    return arcs


def _far_arc(g: LabeledGraph, edge: Edge, orientation: Orientation) -> Arc:
    """Encode x_low < x_high - 1 as the strict arc high -> low of weight -1."""
    u, v = edge
    high, low = (u, v) if orientation is Orientation.U_ABOVE_V else (v, u)
    return (high, low, -_scale(g) - 1)


def _potentials(g: LabeledGraph, arcs: list[Arc]) -> dict[int, int] | None:
    """Return shortest-path potentials, or None on a negative cycle."""
    network = nx.DiGraph()
    network.add_edges_from((_SOURCE, v, {"weight": 0}) for v in g.vertices)
    network.add_weighted_edges_from(arcs)
    try:
        distances = nx.single_source_bellman_ford_path_length(network, _SOURCE)
    except nx.NetworkXUnbounded:
        return None
    return {v: int(distances[v]) for v in g.vertices}


def _decode(g: LabeledGraph, potentials: dict[int, int]) -> IntervalRep:
    """Turn encoded potentials into rational coordinates at d = 1.

    A potential D stands for W - k*delta with W = ceil(D / K) and 0 <= k <= n; the
    infinitesimal delta is realized as 1/(2n), so that n*delta stays below 1.
    """
    k_scale = _scale(g)
    epsilon = Fraction(1, 2 * max(g.vertex_count, 1))
    coords = {}
    for v, potential in potentials.items():
        whole = -((-potential) // k_scale)
        slack = whole * k_scale - potential
        coords[v] = whole - slack * epsilon
    lowest = min(coords.values(), default=Fraction(0))
    return IntervalRep({v: x - lowest for v, x in coords.items()}, Fraction(1))


def _checked(g: LabeledGraph, rep: IntervalRep) -> IntervalRep:
    result = verify_interval(g, rep)
    if not result:
        msg = f"Decoded witness violates edges {list(result.violations)}"
        logger.critical(msg)
        raise LogicalError(msg)
    return rep


def solve_orientation(
    g: LabeledGraph,
    orientation: FarOrientation,
) -> IntervalRep | None:
    """Solve the constraint system of one fixed FAR-edge orientation.

    Args:
        g (LabeledGraph): The labeled graph.
        orientation (FarOrientation): A direction for every FAR edge.

    Returns:
        IntervalRep | None: A witness at d = 1, or None if the system is infeasible.
    """
    arcs = _near_arcs(g) + [
        _far_arc(g, edge, orientation.direction[edge]) for edge in g.far_edges()
    ]
    potentials = _potentials(g, arcs)
    if potentials is None:
        return None
    return _checked(g, _decode(g, potentials))


def _branch_order(g: LabeledGraph) -> list[Edge]:
    """Return the FAR edges, highest endpoint degree sum first."""
    return sorted(g.far_edges(), key=lambda e: (-(g.degree(e[0]) + g.degree(e[1])), e))


def decide_orientation(
    g: LabeledGraph,
) -> tuple[IntervalRep, FarOrientation] | None:
    """Search FAR-edge orientations for a feasible one.

    Orientations are chosen depth first in branch order. After each choice the
    partial system (NEAR edges plus the FAR edges oriented so far) is checked, so an
    orientation that the NEAR chains already rule out is pruned, and when one side is
    infeasible the other is forced.

    Args:
        g (LabeledGraph): The labeled graph.

    Returns:
        tuple[IntervalRep, FarOrientation] | None: A witness at d = 1 with the
            orientation it realizes, or None if no orientation is feasible.
    """
    order = _branch_order(g)
    base = _near_arcs(g)
    visited = 0

    def search(
        index: int,
        arcs: list[Arc],
        chosen: dict[Edge, Orientation],
        potentials: dict[int, int],
    ) -> tuple[dict[int, int], dict[Edge, Orientation]] | None:
        nonlocal visited
        if index == len(order):
            return potentials, chosen
        edge = order[index]
        options = []
        for orientation in Orientation:
            visited += 1
            extended = [*arcs, _far_arc(g, edge, orientation)]
            found = _potentials(g, extended)
            if found is not None:
                options.append((orientation, extended, found))
        if len(options) == 1:
            logger.debug("Edge %s forced to %s", edge, options[0][0])
        for orientation, extended, found in options:
            result = search(index + 1, extended, {**chosen, edge: orientation}, found)
            if result is not None:
                return result
        return None

    start = _potentials(g, base)
    outcome = None if start is None else search(0, base, {}, start)
    logger.debug(
        "Orientation search over %d FAR edges checked %d branches",
        len(order),
        visited,
    )
    if outcome is None:
        return None
    potentials, chosen = outcome
    return _checked(g, _decode(g, potentials)), FarOrientation(chosen)


def decide_interval(g: LabeledGraph) -> IntervalRep | None:
    """Decide whether g has a weak unit interval representation.

    Args:
        g (LabeledGraph): The labeled graph.

    Returns:
        IntervalRep | None: A verified witness with d = 1 (SAT), or None (UNSAT).
    """
    if g.vertex_count == 0:
        return IntervalRep({}, Fraction(1))
    outcome = decide_orientation(g)
    return None if outcome is None else outcome[0]


def to_threshold_coloring(rep: IntervalRep, g: LabeledGraph) -> ThresholdColoring:
    """Scale a rational representation to an integer threshold coloring.

    Multiplying by the lcm L of all denominators makes every center an integer and
    t = d * L; colors are then shifted to start at 1.

    Args:
        rep (IntervalRep): A representation of g.
        g (LabeledGraph): The labeled graph, used to re-verify the result.

    Returns:
        ThresholdColoring: The coloring.

    Raises:
        LogicalError: If the scaled coloring does not represent g.
    """
    denominators = [x.denominator for x in rep.coords.values()]
    scale = math.lcm(rep.diameter.denominator, *denominators)
    integers = {v: int(x * scale) for v, x in rep.coords.items()}
    lowest = min(integers.values(), default=0)
    colors = {v: c - lowest + 1 for v, c in integers.items()}
    coloring = ThresholdColoring(
        colors=colors,
        color_range=max(colors.values(), default=1),
        threshold=int(rep.diameter * scale),
    )
    result = verify_threshold_coloring(g, coloring)
    if not result:
        msg = f"Scaled coloring violates edges {list(result.violations)}"
        logger.critical(msg)
        raise LogicalError(msg)
    return coloring
