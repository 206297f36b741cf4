"""Brute-force threshold coloring oracle used to cross-check the solver."""

import logging

import networkx as nx

from weak_unit_balls.graphs.models import EdgeLabel
from weak_unit_balls.graphs.models import LabeledGraph
from weak_unit_balls.graphs.utils import WORK_BOUND_BITS
from weak_unit_balls.graphs.utils import ensure_within_work_bound
from weak_unit_balls.graphs.utils import search_space_bits

from .models import ThresholdColoring

logger = logging.getLogger(__name__)


def _search_order(g: LabeledGraph) -> list[int]:
    """Return the vertices in BFS order, component by component."""
    graph = g.to_networkx()
    order: list[int] = []
    for component in sorted(nx.connected_components(graph), key=min):
        root = min(component)
        order.append(root)
        order.extend(v for _u, v in nx.bfs_edges(graph, root, sort_neighbors=sorted))
    return order


def _color(
    g: LabeledGraph,
    order: list[int],
    max_color: int,
    threshold: int,
) -> dict[int, int] | None:
    colors: dict[int, int] = {}

    def fits(v: int, color: int) -> bool:
        for w in g.neighbors(v):
            if w in colors:
                near = abs(color - colors[w]) <= threshold
                if near != (g.label(v, w) is EdgeLabel.NEAR):
                    return False
        return True

    def extend(index: int) -> bool:
        if index == len(order):
            return True
        v = order[index]
        for color in range(max_color + 1):
            if fits(v, color):
                colors[v] = color
                if extend(index + 1):
                    return True
                del colors[v]
        return False

    return dict(colors) if extend(0) else None


def grid_oracle_interval(
    g: LabeledGraph,
    max_color: int,
    *,
    work_bound: int = WORK_BOUND_BITS,
) -> ThresholdColoring | None:
    """Try every coloring V -> {0..max_color} under every threshold t in 0..max_color.

    The answer is one-sided: a coloring is a definite SAT witness, while None only
    means nothing was found within the color bound.

    Args:
        g (LabeledGraph): The labeled graph.
        max_color (int): Largest color tried, at least 1.
        work_bound (int): Largest permitted search space in bits.

    Returns:
        ThresholdColoring | None: The witness with colors shifted to 1..max_color+1,
            or None (unknown, possibly UNSAT).

    Raises:
        ValueError: If max_color < 1.
    """
    if max_color < 1:
        msg = f"max_color must be at least 1, got {max_color}"
        raise ValueError(msg)
    ensure_within_work_bound(
        search_space_bits(g.vertex_count + 1, max_color + 1),
        f"grid oracle on {g.vertex_count} vertices with colors 0..{max_color}",
        work_bound=work_bound,
    )
    order = _search_order(g)
    for threshold in range(max_color + 1):
        colors = _color(g, order, max_color, threshold)
        if colors is not None:
            logger.debug("Grid oracle found a coloring at t=%d", threshold)
            return ThresholdColoring(
                colors={v: c + 1 for v, c in colors.items()},
                color_range=max_color + 1,
                threshold=threshold,
            )
    return None
