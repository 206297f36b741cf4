"""Search for labelings without a weak unit interval representation."""

import logging

import networkx as nx

from weak_unit_balls.graphs.generators import iter_labelings
from weak_unit_balls.graphs.generators import small_connected_graphs
from weak_unit_balls.graphs.models import LabeledGraph
from weak_unit_balls.graphs.utils import HARD_LABELING_EDGE_BOUND

from .exceptions import EnumerationBoundExceededError
from .solver import decide_interval

logger = logging.getLogger(__name__)


def find_hard_labelings(
    structure: LabeledGraph,
    *,
    edge_bound: int = HARD_LABELING_EDGE_BOUND,
    first_only: bool = False,
) -> list[LabeledGraph]:
    """Return every labeling of ``structure`` that decide_interval rejects.

    Args:
        structure (LabeledGraph): The graph; its labels are ignored.
        edge_bound (int): Largest edge count whose 2^|E| labelings are enumerated.
        first_only (bool): Stop at the first hard labeling.

    Returns:
        list[LabeledGraph]: The hard labelings in enumeration order.

    Raises:
        EnumerationBoundExceededError: If the graph has more than ``edge_bound``
            edges.
    """
    if structure.edge_count > edge_bound:
        msg = (
            f"{structure.edge_count} edges exceed the enumeration bound of "
            f"{edge_bound} (set WEAKREP_HARD_LABELING_EDGE_BOUND to raise it)"
        )
        raise EnumerationBoundExceededError(msg)
    hard = []
    for labeled in iter_labelings(structure):
        if decide_interval(labeled) is None:
            hard.append(labeled)
            if first_only:
                break
    logger.debug(
        "%d of %d labelings have no interval representation",
        len(hard),
        2**structure.edge_count,
    )
    return hard


def is_weak_unit_interval_graph(
    structure: LabeledGraph,
    *,
    edge_bound: int = HARD_LABELING_EDGE_BOUND,
) -> bool:
    """Return True if every labeling of ``structure`` is representable."""
    return not find_hard_labelings(structure, edge_bound=edge_bound, first_only=True)


def edge_density_sweep(
    max_vertices: int,
    *,
    edge_bound: int = HARD_LABELING_EDGE_BOUND,
) -> dict[int, int]:
    """Find the densest planar graphs that are representable under every labeling.

    Connected planar graphs from the networkx atlas are checked vertex count by
    vertex count. The conjectured answer never exceeds 2n - 3.

    Args:
        max_vertices (int): Largest vertex count, at most 7.
        edge_bound (int): Enumeration bound passed to find_hard_labelings.

    Returns:
        dict[int, int]: For each n from 2, the largest edge count of a connected
            planar graph on n vertices all of whose labelings are representable.
    """
    best: dict[int, int] = {}
    for structure in small_connected_graphs(max_vertices, edge_bound):
        n = structure.vertex_count
        if structure.edge_count <= best.get(n, -1):
            continue
        is_planar, _embedding = nx.check_planarity(structure.to_networkx())
        if is_planar and is_weak_unit_interval_graph(structure, edge_bound=edge_bound):
            best[n] = structure.edge_count
            logger.info(
                "n=%d: every labeling of a graph with %d edges is representable",
                n,
                structure.edge_count,
            )
    return best
