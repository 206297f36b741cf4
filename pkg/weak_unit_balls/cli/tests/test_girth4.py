"""Tests for the planar girth-4 counterexample search."""

# pylint: disable=no-self-use, magic-value-comparison

import logging

import networkx as nx
import pytest
from _pytest.logging import LogCaptureFixture  # pylint: disable=import-private-name

from weak_unit_balls.cli.girth4 import is_planar_girth4
from weak_unit_balls.cli.girth4 import load_girth4_fixture
from weak_unit_balls.cli.girth4 import search_girth4_counterexample
from weak_unit_balls.graphs.generators import gen_complete
from weak_unit_balls.graphs.generators import gen_cycle
from weak_unit_balls.intervals.solver import decide_interval


class TestIsPlanarGirth4:
    """Tests for is_planar_girth4."""

    def test_four_cycle(self) -> None:
        """C_4 is planar with girth 4."""
        assert is_planar_girth4(gen_cycle(4))

    def test_five_cycle(self) -> None:
        """C_5 has girth 5."""
        assert not is_planar_girth4(gen_cycle(5))

    def test_complete_graph(self) -> None:
        """K_5 is neither planar nor triangle-free."""
        assert not is_planar_girth4(gen_complete(5))


class TestGirth4Fixture:
    """Tests for the frozen counterexample."""

    def test_shape(self) -> None:
        """Eight vertices, twelve edges, bipartite, planar and girth 4."""
        g = load_girth4_fixture()
        assert g.vertex_count == 8
        assert g.edge_count == 12
        assert nx.is_bipartite(g.to_networkx())
        assert is_planar_girth4(g)

    def test_has_no_interval_representation(self) -> None:
        """The exact solver rejects the fixture."""
        assert decide_interval(load_girth4_fixture()) is None


class TestSearchGirth4Counterexample:
    """Tests for search_girth4_counterexample."""

    def test_zero_bound_gives_up(self, caplog: LogCaptureFixture) -> None:
        """With no candidates allowed the search stops and warns.

        Args:
            caplog (LogCaptureFixture): The fixture to capture log messages.
        """
        caplog.set_level(logging.WARNING)
        assert search_girth4_counterexample(candidate_bound=0) is None
        assert caplog.messages == ["Girth-4 search stopped after 0 candidates"]

    @pytest.mark.slow()
    def test_finds_a_counterexample(self) -> None:
        """The default bound reaches a planar girth-4 graph the solver rejects."""
        g = search_girth4_counterexample()
        assert g is not None
        assert is_planar_girth4(g)
        assert decide_interval(g) is None
