"""Fixtures for the "graphs" app tests."""

import pytest

from weak_unit_balls.graphs.generators import gen_complete
from weak_unit_balls.graphs.generators import gen_cycle
from weak_unit_balls.graphs.generators import gen_sungraph
from weak_unit_balls.graphs.models import LabeledGraph


@pytest.fixture()
def four_cycle() -> LabeledGraph:
    """Return C_4 with every edge NEAR.

    Returns:
        LabeledGraph: The 4-cycle.
    """
    return gen_cycle(4)


@pytest.fixture()
def k4() -> LabeledGraph:
    """Return K_4 with every edge NEAR.

    Returns:
        LabeledGraph: The complete graph on four vertices.
    """
    return gen_complete(4)


@pytest.fixture()
def sungraph() -> LabeledGraph:
    """Return the sungraph structure.

    Returns:
        LabeledGraph: The 3-sun.
    """
    return gen_sungraph()


@pytest.fixture()
def two_squares() -> LabeledGraph:
    """Return two 4-cycles sharing the edge (0, 3).

    Returns:
        LabeledGraph: The graph with outer cycle 0..5 and chord (0, 3).
    """
    pairs = [(i, (i + 1) % 6) for i in range(6)] + [(0, 3)]
    return LabeledGraph.from_pairs(6, pairs)


@pytest.fixture()
def three_pentagons() -> LabeledGraph:
    """Return a chain of three pentagons: the 11-cycle with chords (0, 4), (0, 7).

    Returns:
        LabeledGraph: An outerplanar graph of girth 5.
    """
    pairs = [(i, (i + 1) % 11) for i in range(11)] + [(0, 4), (0, 7)]
    return LabeledGraph.from_pairs(11, pairs)
