"""Tests for decompositions and the colorings built from them."""

# pylint: disable=no-self-use, magic-value-comparison

from fractions import Fraction

import pytest

from weak_unit_balls.graphs.embedding import outer_embedding
from weak_unit_balls.graphs.exceptions import NotOuterplanarError
from weak_unit_balls.graphs.exceptions import WorkBoundExceededError
from weak_unit_balls.graphs.generators import gen_complete
from weak_unit_balls.graphs.generators import gen_cycle
from weak_unit_balls.graphs.generators import gen_path
from weak_unit_balls.graphs.generators import iter_labelings
from weak_unit_balls.graphs.models import EdgeLabel
from weak_unit_balls.graphs.models import LabeledGraph
from weak_unit_balls.intervals.decompositions import color_forest_2independent
from weak_unit_balls.intervals.decompositions import color_nearly_2independent
from weak_unit_balls.intervals.decompositions import decompose_forest_2independent
from weak_unit_balls.intervals.decompositions import decompose_girth5_outerplanar
from weak_unit_balls.intervals.decompositions import find_ipairs
from weak_unit_balls.intervals.decompositions import represent_by_decomposition
from weak_unit_balls.intervals.decompositions import represent_girth5_outerplanar
from weak_unit_balls.intervals.decompositions import validate_decomposition
from weak_unit_balls.intervals.decompositions import validate_nearly_2independent
from weak_unit_balls.intervals.exceptions import GirthTooSmallError
from weak_unit_balls.intervals.exceptions import InvalidDecompositionError
from weak_unit_balls.intervals.models import Decomposition
from weak_unit_balls.intervals.models import IPair
from weak_unit_balls.intervals.solver import verify_interval

N = EdgeLabel.NEAR
F = EdgeLabel.FAR


def _dec(iset: set[int], fset: set[int], *pairs: IPair) -> Decomposition:
    return Decomposition(frozenset(iset), frozenset(fset), pairs)


class TestValidateDecomposition:
    """Tests for the decomposition checkers."""

    def test_valid(self) -> None:
        """P_5 with the middle vertex in I."""
        validate_decomposition(gen_path(5), _dec({2}, {0, 1, 3, 4}))

    def test_uncovered_vertex(self) -> None:
        """Every vertex must be in I or F."""
        with pytest.raises(InvalidDecompositionError, match=r"missing \[4\]"):
            validate_decomposition(gen_path(5), _dec({2}, {0, 1, 3}))

    def test_forest_with_cycle(self) -> None:
        """F may not contain a cycle."""
        with pytest.raises(InvalidDecompositionError, match="cycle"):
            validate_decomposition(gen_cycle(4), _dec(set(), {0, 1, 2, 3}))

    def test_close_i_vertices(self) -> None:
        """Two I-vertices at distance two are rejected."""
        with pytest.raises(InvalidDecompositionError, match="distance 2"):
            validate_decomposition(gen_path(5), _dec({0, 2}, {1, 3, 4}))

    def test_overlap_rejected_on_construction(self) -> None:
        """I and F must be disjoint."""
        with pytest.raises(InvalidDecompositionError, match="both"):
            _dec({1}, {1, 2})


class TestFindIPairs:
    """Tests for find_ipairs and validate_nearly_2independent."""

    def test_single_pair(self) -> None:
        """The endpoints of P_3 form one I-pair through the middle."""
        assert find_ipairs(gen_path(3), frozenset({0, 2})) == (IPair(0, 2, 1),)

    def test_two_paths_between_a_pair(self) -> None:
        """Opposite corners of C_4 are joined by two 2-paths."""
        with pytest.raises(InvalidDecompositionError, match="2 2-paths"):
            find_ipairs(gen_cycle(4), frozenset({0, 2}))

    def test_vertex_with_two_partners(self) -> None:
        """The center of P_5 would pair with both ends."""
        with pytest.raises(InvalidDecompositionError, match="two partners"):
            find_ipairs(gen_path(5), frozenset({0, 2, 4}))

    def test_adjacent_vertices(self) -> None:
        """An I-set must be independent."""
        with pytest.raises(InvalidDecompositionError, match="adjacent"):
            find_ipairs(gen_path(2), frozenset({0, 1}))

    def test_recorded_pairs_must_match(self) -> None:
        """A relaxed decomposition lists exactly its I-pairs."""
        with pytest.raises(InvalidDecompositionError, match="Recorded"):
            validate_nearly_2independent(gen_path(3), _dec({0, 2}, {1}))


class TestColorForest2Independent:
    """Tests for color_forest_2independent."""

    def test_path_example(self) -> None:
        """Near and far I-neighbors give magnitudes 1 and 2."""
        g = LabeledGraph(3, ((0, 1, N), (1, 2, F)))
        rep = color_forest_2independent(g, _dec({1}, {0, 2}))
        assert rep.coords == {0: 1, 1: 0, 2: 2}
        assert rep.diameter == 1

    def test_single_i_vertex(self) -> None:
        """A lone I-vertex sits at 0."""
        rep = color_forest_2independent(LabeledGraph(1), _dec({0}, set()))
        assert rep.coords == {0: 0}

    def test_near_star(self) -> None:
        """A NEAR star rooted at its center is colored with 1 only."""
        star = LabeledGraph.from_pairs(4, [(0, 1), (0, 2), (0, 3)])
        rep = color_forest_2independent(star, _dec(set(), {0, 1, 2, 3}))
        assert set(rep.coords.values()) <= {Fraction(1), Fraction(-1)}

    def test_far_tree_edges_flip_signs(self) -> None:
        """Across a FAR tree edge the sign changes."""
        g = gen_path(3, F)
        rep = color_forest_2independent(g, _dec(set(), {0, 1, 2}))
        assert rep.coords == {0: 1, 1: -1, 2: 1}

    def test_rejects_invalid_decomposition(self) -> None:
        """The decomposition is checked first."""
        with pytest.raises(InvalidDecompositionError):
            color_forest_2independent(gen_cycle(3), _dec(set(), {0, 1, 2}))

    @pytest.mark.slow()
    @pytest.mark.parametrize("n", [5, 7, 13])
    def test_every_labeling(self, n: int) -> None:
        """Every labeling of a decomposable graph is realized in -2..2.

        Args:
            n (int): Length of the path and of the cycle checked.
        """
        for structure in (gen_path(n), gen_cycle(n)):
            dec = decompose_forest_2independent(structure)
            assert dec is not None
            for g in iter_labelings(structure):
                rep = color_forest_2independent(g, dec)
                assert verify_interval(g, rep)
                assert set(rep.coords.values()) <= set(range(-2, 3))


class TestColorNearly2Independent:
    """Tests for color_nearly_2independent."""

    def test_without_pairs(self) -> None:
        """Without I-pairs the stretched coloring is used as is."""
        g = LabeledGraph(5, ((0, 1, F), (1, 2, N), (2, 3, F), (3, 4, N)))
        rep = color_nearly_2independent(g, _dec({0, 3}, {1, 2, 4}))
        assert set(rep.coords.values()) <= {0, 2, -2, 5, -5}
        assert rep.diameter == 3

    def test_near_bad_edge_is_pulled_in(self) -> None:
        """A NEAR bad edge at gap 5 moves its endpoints to 1 and 4."""
        g = LabeledGraph(3, ((0, 1, F), (1, 2, N)))
        rep = color_nearly_2independent(g, _dec({0, 2}, {1}, IPair(0, 2, 1)))
        assert (rep.coords[2], rep.coords[1]) == (1, 4)
        assert rep.coords[0] == 0

    def test_far_bad_edge_is_pushed_out(self) -> None:
        """A FAR bad edge at gap 2 moves its endpoints to -1 and 3."""
        g = LabeledGraph(3, ((0, 1, N), (1, 2, F)))
        rep = color_nearly_2independent(g, _dec({0, 2}, {1}, IPair(0, 2, 1)))
        assert (rep.coords[2], rep.coords[1]) == (-1, 3)

    @pytest.mark.slow()
    def test_every_labeling_of_a_hexagon(self) -> None:
        """C_6 with I = {0, 2} has one I-pair; all 64 labelings are realized."""
        structure = gen_cycle(6)
        dec = _dec({0, 2}, {1, 3, 4, 5}, IPair(0, 2, 1))
        for g in iter_labelings(structure):
            rep = color_nearly_2independent(g, dec)
            assert verify_interval(g, rep)
            assert set(rep.coords.values()) <= set(range(-5, 6))


class TestDecomposeForest2Independent:
    """Tests for decompose_forest_2independent."""

    def test_path(self) -> None:
        """P_5 decomposes."""
        g = gen_path(5)
        dec = decompose_forest_2independent(g)
        assert dec is not None
        validate_decomposition(g, dec)

    def test_girth_13_cycle(self) -> None:
        """C_13 decomposes."""
        g = gen_cycle(13)
        dec = decompose_forest_2independent(g)
        assert dec is not None
        validate_decomposition(g, dec)

    def test_k4(self) -> None:
        """K_4 has no decomposition."""
        assert decompose_forest_2independent(gen_complete(4)) is None

    def test_sungraph(self, sungraph: LabeledGraph) -> None:
        """The sungraph has diameter two and a triangle in every large F.

        Args:
            sungraph (LabeledGraph): The 3-sun.
        """
        assert decompose_forest_2independent(sungraph) is None

    def test_greedy_mode(self) -> None:
        """Greedy mode handles graphs above the exact bound."""
        g = gen_cycle(13)
        dec = decompose_forest_2independent(g, exact=False, vertex_bound=5)
        assert dec is not None
        validate_decomposition(g, dec)

    def test_exact_bound(self) -> None:
        """Exact search refuses graphs above the vertex bound."""
        with pytest.raises(WorkBoundExceededError, match="WEAKREP"):
            decompose_forest_2independent(gen_cycle(13), vertex_bound=5)


class TestDecomposeGirth5Outerplanar:
    """Tests for decompose_girth5_outerplanar."""

    def test_pentagon(self) -> None:
        """A single 5-cycle gets exactly one I-vertex."""
        g = gen_cycle(5)
        emb = outer_embedding(g)
        assert emb is not None
        assert len(decompose_girth5_outerplanar(g, emb).iset) == 1

    def test_hexagon(self) -> None:
        """A single 6-cycle is valid with the third vertex in I."""
        g = gen_cycle(6)
        emb = outer_embedding(g)
        assert emb is not None
        assert decompose_girth5_outerplanar(g, emb).iset == {2}

    @pytest.mark.parametrize("name", ["two_pentagons", "three_pentagons"])
    def test_pentagon_chains(self, name: str, request: pytest.FixtureRequest) -> None:
        """Chains of pentagons decompose face by face.

        Args:
            name (str): Fixture name.
            request (pytest.FixtureRequest): Fixture access.
        """
        g = request.getfixturevalue(name)
        emb = outer_embedding(g)
        assert emb is not None
        validate_decomposition(g, decompose_girth5_outerplanar(g, emb))

    def test_girth_four_is_rejected(self, two_squares: LabeledGraph) -> None:
        """Squares are too short.

        Args:
            two_squares (LabeledGraph): Two 4-cycles sharing an edge.
        """
        emb = outer_embedding(two_squares)
        assert emb is not None
        with pytest.raises(GirthTooSmallError, match="below 5"):
            decompose_girth5_outerplanar(two_squares, emb)


class TestRepresentations:
    """Tests for the end-to-end decomposition representations."""

    def test_by_decomposition(self) -> None:
        """C_13 under a mixed labeling is represented at d = 1."""
        g = gen_cycle(13).with_labels([F, N] * 6 + [F])
        rep = represent_by_decomposition(g)
        assert rep is not None
        assert verify_interval(g, rep)

    def test_by_decomposition_without_one(self) -> None:
        """K_4 has no decomposition to build from."""
        assert represent_by_decomposition(gen_complete(4)) is None

    @pytest.mark.slow()
    def test_girth5_outerplanar(self, three_pentagons: LabeledGraph) -> None:
        """Every labeling of the pentagon chain is represented.

        Args:
            three_pentagons (LabeledGraph): Three pentagons in a chain.
        """
        for index, g in enumerate(iter_labelings(three_pentagons)):
            if index % 97 == 0:
                assert verify_interval(g, represent_girth5_outerplanar(g))

    def test_girth5_needs_two_connected(self) -> None:
        """A path has no outer cycle."""
        with pytest.raises(NotOuterplanarError, match="2-connected"):
            represent_girth5_outerplanar(gen_path(6))
