"""Search for a planar girth-4 graph with a labeling that has no representation.

Candidates start from a fixed labeled core on u=0, v1=1, v2=2, w1=3, w2=4, x=5:
u is FAR from v2 and w2, x is NEAR both, v1 and w1 are NEAR one of them and FAR
from the other. Up to two connector vertices of degree two are then added between
non-adjacent core vertices, and only the connector edges are relabeled.
"""

import itertools
import logging
from collections.abc import Iterator

import networkx as nx

from weak_unit_balls.graphs.formats import parse_graph
from weak_unit_balls.graphs.models import Edge
from weak_unit_balls.graphs.models import EdgeLabel
from weak_unit_balls.graphs.models import LabeledGraph
from weak_unit_balls.graphs.structure import girth
from weak_unit_balls.graphs.utils import GIRTH4_CANDIDATE_BOUND
from weak_unit_balls.intervals.solver import decide_interval

from .constants import GIRTH4_FIXTURE

logger = logging.getLogger(__name__)

N = EdgeLabel.NEAR
F = EdgeLabel.FAR

CORE_SIZE = 6
CORE_EDGES: dict[Edge, EdgeLabel] = {
    (0, 2): F,
    (0, 4): F,
    (2, 5): N,
    (4, 5): N,
    (1, 2): N,
    (3, 4): N,
    (1, 4): F,
    (2, 3): F,
}
MAX_CONNECTORS = 2
TARGET_GIRTH = 4


def _open_pairs() -> list[Edge]:
    return [
        pair
        for pair in itertools.combinations(range(CORE_SIZE), 2)
        if pair not in CORE_EDGES
    ]


def _connector_sets() -> Iterator[tuple[Edge, ...]]:
    pairs = _open_pairs()
    for count in range(MAX_CONNECTORS + 1):
        yield from itertools.combinations(pairs, count)


def _candidate(connectors: tuple[Edge, ...]) -> LabeledGraph:
    labels = dict(CORE_EDGES)
    for index, (a, b) in enumerate(connectors):
        c = CORE_SIZE + index
        labels[a, c] = N
        labels[b, c] = N
    return LabeledGraph.from_labels(CORE_SIZE + len(connectors), labels)


def is_planar_girth4(g: LabeledGraph) -> bool:
    """Return True if g is planar with a shortest cycle of length exactly 4."""
    is_planar, _embedding = nx.check_planarity(g.to_networkx())
    return is_planar and girth(g) == TARGET_GIRTH


def search_girth4_counterexample(
    *,
    candidate_bound: int = GIRTH4_CANDIDATE_BOUND,
) -> LabeledGraph | None:
    """Return the first planar girth-4 candidate labeling that decide_interval rejects.

    Candidates are tried with fewer connectors first; connector labelings go from
    all NEAR upwards.

    Args:
        candidate_bound (int): Largest number of candidate structures examined.

    Returns:
        LabeledGraph | None: The labeled graph, or None if no candidate within the
            bound is a counterexample.
    """
    for examined, connectors in enumerate(_connector_sets()):
        if examined >= candidate_bound:
            logger.warning("Girth-4 search stopped after %d candidates", examined)
            return None
        structure = _candidate(connectors)
        if not is_planar_girth4(structure):
            continue
        added = [edge for edge in structure.pairs() if edge not in CORE_EDGES]
        for labels in itertools.product([N, F], repeat=len(added)):
            g = structure.with_labels(
                {**CORE_EDGES, **dict(zip(added, labels, strict=True))},
            )
            if decide_interval(g) is None:
                logger.info("Girth-4 counterexample with connectors %s", connectors)
                return g
    return None


def load_girth4_fixture() -> LabeledGraph:
    """Return the frozen girth-4 counterexample shipped with the package."""
    return parse_graph(GIRTH4_FIXTURE.read_text(encoding="utf-8"))
