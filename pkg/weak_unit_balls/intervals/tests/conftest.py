"""Fixtures for the "intervals" app tests."""

import pytest

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
        LabeledGraph: The 6-cycle with chord (0, 3).
    """
    pairs = [(i, (i + 1) % 6) for i in range(6)] + [(0, 3)]
    return LabeledGraph.from_pairs(6, pairs)


@pytest.fixture()
def square_ladder() -> LabeledGraph:
    """Return three 4-cycles in a row.

    Returns:
        LabeledGraph: The 8-cycle with chords (1, 6) and (2, 5), 10 edges.
    """
    pairs = [(i, (i + 1) % 8) for i in range(8)] + [(1, 6), (2, 5)]
    return LabeledGraph.from_pairs(8, pairs)


@pytest.fixture()
def two_pentagons() -> LabeledGraph:
    """Return two 5-cycles sharing the edge (0, 4).

    Returns:
        LabeledGraph: The 8-cycle with chord (0, 4).
    """
    pairs = [(i, (i + 1) % 8) for i in range(8)] + [(0, 4)]
    return LabeledGraph.from_pairs(8, pairs)


@pytest.fixture()
def three_pentagons() -> LabeledGraph:
    """Return a chain of three pentagons: the 11-cycle with chords (0, 4), (0, 7).

    Returns:
        LabeledGraph: An outerplanar graph of girth 5.
    """
    pairs = [(i, (i + 1) % 11) for i in range(11)] + [(0, 4), (0, 7)]
    return LabeledGraph.from_pairs(11, pairs)
