"""Fixtures for the "cli" app tests."""

from fractions import Fraction

import pytest

from weak_unit_balls.disks.models import DiskRep
from weak_unit_balls.graphs.generators import gen_path
from weak_unit_balls.graphs.models import EdgeLabel
from weak_unit_balls.graphs.models import LabeledGraph
from weak_unit_balls.intervals.models import IntervalRep


@pytest.fixture()
def near_far_path() -> LabeledGraph:
    """Return the path 0 - 1 - 2 with edge (0, 1) NEAR and (1, 2) FAR.

    Returns:
        LabeledGraph: The labeled path.
    """
    return gen_path(3).with_labels([EdgeLabel.NEAR, EdgeLabel.FAR])


@pytest.fixture()
def path_interval() -> IntervalRep:
    """Return a d = 1 interval representation of ``near_far_path``.

    Returns:
        IntervalRep: Centers 0, 1/2 and 2.
    """
    return IntervalRep({0: Fraction(0), 1: Fraction(1, 2), 2: Fraction(2)})


@pytest.fixture()
def path_disks() -> DiskRep:
    """Return a d = 2 disk representation of ``near_far_path``.

    Returns:
        DiskRep: Points on the x-axis at 0, 2 and 5.
    """
    return DiskRep({0: (0, 0), 1: (2, 0), 2: (5, 0)})
