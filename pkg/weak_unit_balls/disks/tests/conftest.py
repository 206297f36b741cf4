"""Fixtures for the "disks" app tests."""

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
