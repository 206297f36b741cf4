"""Tests for lifting squares into cubes."""

# pylint: disable=no-self-use, magic-value-comparison

from fractions import Fraction

import pytest

from weak_unit_balls.cubes.exceptions import InvalidSquareRepError
from weak_unit_balls.cubes.exceptions import MissingCubeError
from weak_unit_balls.cubes.exceptions import SideLengthMismatchError
from weak_unit_balls.cubes.geometry import contact_graph
from weak_unit_balls.cubes.geometry import contact_measure
from weak_unit_balls.cubes.geometry import grid_strip_squares
from weak_unit_balls.cubes.lift import lift_cubes
from weak_unit_balls.cubes.lift import verify_cube_contacts
from weak_unit_balls.cubes.models import CubeScene
from weak_unit_balls.cubes.models import SquareContactRep
from weak_unit_balls.graphs.generators import iter_labelings
from weak_unit_balls.graphs.models import EdgeLabel
from weak_unit_balls.graphs.models import LabeledGraph
from weak_unit_balls.intervals.exceptions import InvalidColoringError
from weak_unit_balls.intervals.models import ThresholdColoring
from weak_unit_balls.intervals.solver import decide_interval
from weak_unit_balls.intervals.solver import to_threshold_coloring

N = EdgeLabel.NEAR
F = EdgeLabel.FAR
HALF = Fraction(1, 2)


def _coloring(first: int, second: int) -> ThresholdColoring:
    return ThresholdColoring({0: first, 1: second}, color_range=4, threshold=1)


def _edge(label: EdgeLabel) -> LabeledGraph:
    return LabeledGraph(2, ((0, 1, label),))


class TestLiftCubes:
    """Tests for lift_cubes."""

    def test_equal_colors_share_a_face(self, square_pair: SquareContactRep) -> None:
        """Colors (1, 1) keep the whole side face in contact.

        Args:
            square_pair (SquareContactRep): Two touching squares of side 3/2.
        """
        scene = lift_cubes(square_pair, _coloring(1, 1), 1, HALF, g=_edge(N))
        assert contact_measure(scene.corners[0], scene.corners[1], scene.side) == (
            Fraction(9, 4)
        )

    def test_far_colors_lose_contact(self, square_pair: SquareContactRep) -> None:
        """Colors (1, 3) are 2 apart, more than 3/2.

        Args:
            square_pair (SquareContactRep): Two touching squares of side 3/2.
        """
        scene = lift_cubes(square_pair, _coloring(1, 3), 1, HALF, g=_edge(F))
        assert contact_graph(scene) == set()

    def test_near_colors_keep_a_strip(self, square_pair: SquareContactRep) -> None:
        """Colors (1, 2) overlap in z on [2, 5/2].

        Args:
            square_pair (SquareContactRep): Two touching squares of side 3/2.
        """
        scene = lift_cubes(square_pair, _coloring(1, 2), 1, HALF, g=_edge(N))
        measure = contact_measure(scene.corners[0], scene.corners[1], scene.side)
        assert measure == Fraction(3, 2) * HALF

    def test_elevation_and_footprint(self, square_pair: SquareContactRep) -> None:
        """Each cube sits on its square at height c(v).

        Args:
            square_pair (SquareContactRep): Two touching squares of side 3/2.
        """
        scene = lift_cubes(square_pair, _coloring(2, 3), 1, HALF)
        for v, (x, y, z) in scene.corners.items():
            assert (x, y) == square_pair.lower_corner(v)
            assert z == {0: 2, 1: 3}[v]
        assert scene.side == square_pair.side

    def test_path_from_solver(self) -> None:
        """A labeled P_5 strip, colored by the solver, lifts to a valid scene."""
        structure = LabeledGraph.from_pairs(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
        for g in iter_labelings(structure):
            rep = decide_interval(g)
            assert rep is not None
            coloring = to_threshold_coloring(rep, g)
            sq, grid = grid_strip_squares(1, 5, coloring.threshold + HALF)
            assert set(grid.pairs()) == set(g.pairs())
            scene = lift_cubes(sq, coloring, coloring.threshold, HALF, g=g)
            assert verify_cube_contacts(g, scene)

    def test_side_mismatch(self, square_pair: SquareContactRep) -> None:
        """The side must be t + epsilon.

        Args:
            square_pair (SquareContactRep): Two touching squares of side 3/2.
        """
        with pytest.raises(SideLengthMismatchError):
            lift_cubes(square_pair, _coloring(1, 1), 1, Fraction(1, 4))

    @pytest.mark.parametrize("epsilon", [Fraction(0), Fraction(1), Fraction(-1, 2)])
    def test_epsilon_range(
        self,
        square_pair: SquareContactRep,
        epsilon: Fraction,
    ) -> None:
        """epsilon lies strictly between 0 and 1.

        Args:
            square_pair (SquareContactRep): Two touching squares of side 3/2.
            epsilon (Fraction): An out-of-range slack.
        """
        with pytest.raises(ValueError, match="strictly between"):
            lift_cubes(square_pair, _coloring(1, 1), 1, epsilon)

    def test_threshold_mismatch(self, square_pair: SquareContactRep) -> None:
        """The coloring must use the same threshold.

        Args:
            square_pair (SquareContactRep): Two touching squares of side 3/2.
        """
        coloring = ThresholdColoring({0: 1, 1: 1}, color_range=2, threshold=0)
        with pytest.raises(InvalidColoringError, match="threshold"):
            lift_cubes(square_pair, coloring, 1, HALF)

    def test_coloring_must_fit_the_graph(self, square_pair: SquareContactRep) -> None:
        """A FAR edge with equal colors is refused.

        Args:
            square_pair (SquareContactRep): Two touching squares of side 3/2.
        """
        with pytest.raises(InvalidColoringError, match="violates"):
            lift_cubes(square_pair, _coloring(1, 1), 1, HALF, g=_edge(F))

    def test_missing_color(self, square_pair: SquareContactRep) -> None:
        """Every square needs a color.

        Args:
            square_pair (SquareContactRep): Two touching squares of side 3/2.
        """
        coloring = ThresholdColoring({0: 1}, color_range=2, threshold=1)
        with pytest.raises(MissingCubeError):
            lift_cubes(square_pair, coloring, 1, HALF)

    def test_edge_without_contact(self) -> None:
        """Edges of the graph must be square contacts."""
        sq = SquareContactRep({0: (0, 0), 1: (5, 0)}, Fraction(3, 2))
        with pytest.raises(InvalidSquareRepError, match="not contacts"):
            lift_cubes(sq, _coloring(1, 1), 1, HALF, g=_edge(N))

    def test_contact_without_edge(self) -> None:
        """Square contacts must all be edges of the graph."""
        sq, _grid = grid_strip_squares(1, 3, Fraction(3, 2))
        g = LabeledGraph(3, ((0, 1, N),))
        coloring = ThresholdColoring({0: 1, 1: 1, 2: 1}, color_range=2, threshold=1)
        with pytest.raises(InvalidSquareRepError, match=r"\[\(1, 2\)\] are not edges"):
            lift_cubes(sq, coloring, 1, HALF, g=g)


class TestVerifyCubeContacts:
    """Tests for verify_cube_contacts."""

    def test_disjoint_near_edge(self) -> None:
        """A NEAR edge between separated cubes is listed."""
        scene = CubeScene({0: (0, 0, 0), 1: (3, 0, 0)}, Fraction(1))
        assert verify_cube_contacts(_edge(N), scene).violations == ((0, 1),)

    def test_edge_contact_is_not_contact(self) -> None:
        """Cubes meeting along an edge segment satisfy a FAR edge."""
        scene = CubeScene({0: (0, 0, 0), 1: (1, 0, 1)}, Fraction(1))
        assert verify_cube_contacts(_edge(F), scene)
        assert not verify_cube_contacts(_edge(N), scene)

    def test_overlap_is_a_violation(self) -> None:
        """Cubes sharing interior points are invalid whatever the labels."""
        scene = CubeScene({0: (0, 0, 0), 1: (0, 0, HALF)}, Fraction(1))
        result = verify_cube_contacts(LabeledGraph(2, ()), scene)
        assert result.violations == ((0, 1),)

    def test_touching_non_edge(self) -> None:
        """Contacts between non-adjacent cubes are reported unless disabled."""
        scene = CubeScene({0: (0, 0, 0), 1: (1, 0, 0)}, Fraction(1))
        g = LabeledGraph(2, ())
        assert not verify_cube_contacts(g, scene)
        assert verify_cube_contacts(g, scene, check_non_edges=False)

    def test_missing_cube(self) -> None:
        """Every vertex needs a cube."""
        scene = CubeScene({0: (0, 0, 0)}, Fraction(1))
        with pytest.raises(MissingCubeError, match=r"\[1\]"):
            verify_cube_contacts(_edge(N), scene)
