"""Labeled complete graph used to show weak unit disk recognition is NP-hard."""

import itertools

from .models import EdgeLabel
from .models import LabeledGraph


def np_reduction(g: LabeledGraph) -> LabeledGraph:
    """Return K_n labeled NEAR exactly on the edges of g and FAR elsewhere.

    A weak unit disk representation of the result is a unit disk representation of
    g, so deciding the former is at least as hard as recognizing unit disk graphs.

    Args:
        g (LabeledGraph): Any graph; its labels are ignored.

    Returns:
        LabeledGraph: The labeled complete graph on the same vertex ids.
    """
    return LabeledGraph(
        g.vertex_count,
        tuple(
            (u, v, EdgeLabel.NEAR if g.has_edge(u, v) else EdgeLabel.FAR)
            for u, v in itertools.combinations(g.vertices, 2)
        ),
    )
