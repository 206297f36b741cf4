"""Tests for labeled path placement at diameter 2."""

# pylint: disable=no-self-use, magic-value-comparison

import itertools
from fractions import Fraction

import pytest

from weak_unit_balls.graphs.models import EdgeLabel
from weak_unit_balls.intervals.exceptions import InfeasiblePairError
from weak_unit_balls.intervals.paths import assign_path
from weak_unit_balls.intervals.paths import grid_path
from weak_unit_balls.intervals.paths import step_fits
from weak_unit_balls.intervals.paths import three_vertex_middle

N = EdgeLabel.NEAR
F = EdgeLabel.FAR


def _fits(coords: list[Fraction], labels: tuple[EdgeLabel, ...]) -> bool:
    return all(
        step_fits(a, b, label)
        for (a, b), label in zip(itertools.pairwise(coords), labels, strict=True)
    )


class TestThreeVertexPaths:
    """Tests for the closed-form three-vertex placements."""

    def test_near_near_gap_two(self) -> None:
        """Endpoints 0 and 2 with two NEAR edges put the middle at 2."""
        assert assign_path(Fraction(0), Fraction(2), [N, N]) == [0, 2, 2]

    def test_near_near_gap_four(self) -> None:
        """Endpoints 0 and 4 with two NEAR edges put the middle at 2."""
        assert assign_path(Fraction(0), Fraction(4), [N, N])[1] == 2

    @pytest.mark.parametrize(
        ("labels", "middle"),
        [((N, F), 2), ((F, F), 3), ((F, N), 4)],
    )
    def test_gap_six(self, labels: tuple[EdgeLabel, ...], middle: int) -> None:
        """Endpoints 0 and 6 use the fixed middle offsets.

        Args:
            labels (tuple[EdgeLabel, ...]): The two labels.
            middle (int): Expected middle coordinate.
        """
        assert assign_path(Fraction(0), Fraction(6), labels)[1] == middle

    def test_mirrored(self) -> None:
        """Negative gaps mirror the placement."""
        assert assign_path(Fraction(0), Fraction(-6), [F, F])[1] == -3

    def test_translated(self) -> None:
        """Placement only depends on the gap."""
        assert assign_path(Fraction(10), Fraction(13), [F, N]) == [10, 13, 13]

    def test_uncovered_pair(self) -> None:
        """Endpoints 4 apart with a FAR edge are not a guaranteed pair."""
        with pytest.raises(InfeasiblePairError, match="guaranteed"):
            assign_path(Fraction(0), Fraction(4), [N, F])

    @pytest.mark.parametrize("gap", [2, 3, -2, -3])
    def test_closed_form_matches_grid_search(self, gap: int) -> None:
        """Every closed-form middle is valid, and the grid search agrees it exists.

        Args:
            gap (int): Distance from the first to the last endpoint.
        """
        for labels in itertools.product([N, F], repeat=2):
            middle = three_vertex_middle(Fraction(0), Fraction(gap), labels)
            assert middle is not None
            assert _fits([Fraction(0), middle, Fraction(gap)], labels)
            assert grid_path(Fraction(0), Fraction(gap), labels) is not None


class TestLongerPaths:
    """Tests for paths on four or more vertices."""

    def test_far_far_near(self) -> None:
        """P_4 from 0 to 6 labeled F, F, N gets a valid integer interior."""
        labels = (F, F, N)
        coords = assign_path(Fraction(0), Fraction(6), labels)
        assert coords[0] == 0
        assert coords[-1] == 6
        assert all(x.denominator == 1 for x in coords)
        assert _fits(coords, labels)

    def test_gap_above_six(self) -> None:
        """Endpoints more than 6 apart are refused."""
        with pytest.raises(InfeasiblePairError, match="more than 6"):
            assign_path(Fraction(0), Fraction(7), [N, N, N])

    def test_too_short(self) -> None:
        """A single edge is not a path to fill."""
        with pytest.raises(ValueError, match="at least 3"):
            assign_path(Fraction(0), Fraction(1), [N])

    @pytest.mark.slow()
    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_every_labeling_and_gap(self, n: int) -> None:
        """Every endpoint gap in -6..6 is feasible for every labeling.

        Args:
            n (int): Number of path vertices.
        """
        for labels in itertools.product([N, F], repeat=n - 1):
            for y in range(-6, 7):
                coords = assign_path(Fraction(0), Fraction(y), labels)
                assert (coords[0], coords[-1]) == (0, y)
                assert _fits(coords, labels)
