"""Tests for SVG drawings."""

# pylint: disable=no-self-use, magic-value-comparison

import pytest

from weak_unit_balls.cli.exceptions import UnverifiedRepresentationError
from weak_unit_balls.cli.svg import render_svg
from weak_unit_balls.disks.construct import represent_degree2_contractible
from weak_unit_balls.disks.models import DiskRep
from weak_unit_balls.graphs.generators import gen_sungraph
from weak_unit_balls.graphs.models import EdgeLabel
from weak_unit_balls.graphs.models import LabeledGraph
from weak_unit_balls.intervals.models import IntervalRep


class TestRenderSvg:
    """Tests for render_svg."""

    def test_disks_are_circles(
        self,
        near_far_path: LabeledGraph,
        path_disks: DiskRep,
    ) -> None:
        """One circle per vertex and one label per vertex.

        Args:
            near_far_path (LabeledGraph): Path with a NEAR and a FAR edge.
            path_disks (DiskRep): Its disk representation.
        """
        svg = render_svg(near_far_path, path_disks)
        assert svg.count("<circle") == 3
        assert svg.count("<text") == 3

    def test_far_edges_are_dashed(
        self,
        near_far_path: LabeledGraph,
        path_disks: DiskRep,
    ) -> None:
        """Only the FAR edge carries a dash pattern.

        Args:
            near_far_path (LabeledGraph): Path with a NEAR and a FAR edge.
            path_disks (DiskRep): Its disk representation.
        """
        svg = render_svg(near_far_path, path_disks)
        assert svg.count('stroke-dasharray="6,4"') == 1

    def test_intervals_are_segments(
        self,
        near_far_path: LabeledGraph,
        path_interval: IntervalRep,
    ) -> None:
        """Two edge lines plus one segment per vertex, and no circles.

        Args:
            near_far_path (LabeledGraph): Path with a NEAR and a FAR edge.
            path_interval (IntervalRep): Its interval representation.
        """
        svg = render_svg(near_far_path, path_interval)
        assert "<circle" not in svg
        assert svg.count("<path") == 5

    def test_same_input_same_drawing(
        self,
        near_far_path: LabeledGraph,
        path_interval: IntervalRep,
    ) -> None:
        """Drawing is deterministic.

        Args:
            near_far_path (LabeledGraph): Path with a NEAR and a FAR edge.
            path_interval (IntervalRep): Its interval representation.
        """
        assert render_svg(near_far_path, path_interval) == render_svg(
            near_far_path,
            path_interval,
        )

    def test_refuses_a_failing_representation(
        self,
        near_far_path: LabeledGraph,
    ) -> None:
        """A representation that violates an edge is not drawn.

        Args:
            near_far_path (LabeledGraph): Path with a NEAR and a FAR edge.
        """
        rep = DiskRep({0: (0, 0), 1: (2, 0), 2: (3, 0)})
        with pytest.raises(UnverifiedRepresentationError, match="Refusing to draw"):
            render_svg(near_far_path, rep)

    def test_empty_graph(self) -> None:
        """An empty graph still gives a valid document."""
        svg = render_svg(LabeledGraph(0, ()), IntervalRep({}))
        assert "<svg" in svg
        assert "<path" not in svg

    def test_tangent_near_disks(self) -> None:
        """Two NEAR disks at gap 2 are two circles and one solid edge."""
        g = LabeledGraph(2, ((0, 1, EdgeLabel.NEAR),))
        svg = render_svg(g, DiskRep({0: (0, 0), 1: (2, 0)}))
        assert svg.count("<circle") == 2
        assert svg.count("<path") == 1
        assert "stroke-dasharray" not in svg

    def test_sungraph_witness(self) -> None:
        """The sungraph's disk witness draws six circles and nine edges."""
        sungraph = gen_sungraph()
        svg = render_svg(sungraph, represent_degree2_contractible(sungraph))
        assert svg.count("<circle") == 6
        assert svg.count("<path") == 9
