"""Lift squares into cubes by the colors of a threshold coloring."""

import logging
from fractions import Fraction

from weak_unit_balls.graphs.exceptions import LogicalError
from weak_unit_balls.graphs.models import EdgeLabel
from weak_unit_balls.graphs.models import LabeledGraph
from weak_unit_balls.graphs.models import VerificationResult
from weak_unit_balls.intervals.exceptions import InvalidColoringError
from weak_unit_balls.intervals.models import ThresholdColoring
from weak_unit_balls.intervals.solver import verify_threshold_coloring

from .constants import DEFAULT_EPSILON
from .exceptions import InvalidSquareRepError
from .exceptions import MissingCubeError
from .exceptions import SideLengthMismatchError
from .geometry import contact_graph
from .geometry import overlapping_pairs
from .geometry import validate_square_contacts
from .models import CubeScene
from .models import SquareContactRep

logger = logging.getLogger(__name__)


def _check_graph(
    g: LabeledGraph,
    sq: SquareContactRep,
    coloring: ThresholdColoring,
) -> None:
    validate_square_contacts(sq)
    contacts = contact_graph(sq)
    missing = sorted(set(g.pairs()) - contacts)
    if missing:
        msg = f"Edges {missing} are not contacts of the squares"
        raise InvalidSquareRepError(msg)
    extra = sorted(contacts - set(g.pairs()))
    if extra:
        msg = f"Square contacts {extra} are not edges of the graph"
        raise InvalidSquareRepError(msg)
    result = verify_threshold_coloring(g, coloring)
    if not result:
        msg = f"Coloring violates edges {list(result.violations)}"
        raise InvalidColoringError(msg)


def lift_cubes(
    sq: SquareContactRep,
    coloring: ThresholdColoring,
    threshold: int,
    epsilon: Fraction = DEFAULT_EPSILON,
    *,
    g: LabeledGraph | None = None,
) -> CubeScene:
    """Raise the square of every vertex v into a cube with its bottom at z = c(v).

    With side t + epsilon, cubes of touching squares keep contact exactly when
    their colors differ by at most t.

    Args:
        sq (SquareContactRep): Squares of side threshold + epsilon.
        coloring (ThresholdColoring): Colors with the same threshold.
        threshold (int): The threshold t.
        epsilon (Fraction): The slack, strictly between 0 and 1.
        g (LabeledGraph | None): When given, the squares and the coloring are
            checked against g and the scene is verified against it.

    Returns:
        CubeScene: The lifted cubes.

    Raises:
        ValueError: If epsilon is outside (0, 1).
        SideLengthMismatchError: If the square side is not t + epsilon.
        InvalidColoringError: If the coloring has another threshold or does not
            color g.
        MissingCubeError: If a square has no color.
        InvalidSquareRepError: If the square contacts are not exactly the edges of
            g.
        LogicalError: If the lifted scene fails verification against g.
    """
    epsilon = Fraction(epsilon)
    if not 0 < epsilon < 1:
        msg = f"epsilon must lie strictly between 0 and 1, got {epsilon}"
        raise ValueError(msg)
    if sq.side != threshold + epsilon:
        msg = f"Square side {sq.side} differs from t + epsilon = {threshold + epsilon}"
        raise SideLengthMismatchError(msg)
    if coloring.threshold != threshold:
        msg = f"Coloring threshold {coloring.threshold} differs from t = {threshold}"
        raise InvalidColoringError(msg)
    uncolored = [v for v in sq.centers if v not in coloring.colors]
    if uncolored:
        msg = f"No color for the squares of vertices {uncolored}"
        raise MissingCubeError(msg)
    if g is not None:
        _check_graph(g, sq, coloring)
    corners = {}
    for v in sq.centers:
        x, y = sq.lower_corner(v)
        corners[v] = (x, y, Fraction(coloring.colors[v]))
    scene = CubeScene(corners, sq.side)
    if g is not None:
        result = verify_cube_contacts(g, scene)
        if not result:
            msg = f"Lifted cubes violate edges {list(result.violations)}"
            logger.critical(msg)
            raise LogicalError(msg)
    logger.debug("Lifted %d squares with t=%d", len(corners), threshold)
    return scene


def verify_cube_contacts(
    g: LabeledGraph,
    scene: CubeScene,
    *,
    check_non_edges: bool = True,
) -> VerificationResult:
    """Check that cubes touch with positive area exactly on the NEAR edges.

    Pairs of cubes with overlapping interiors are always violations.

    Args:
        g (LabeledGraph): The labeled graph.
        scene (CubeScene): The cubes.
        check_non_edges (bool): Also report non-adjacent pairs whose cubes touch.

    Returns:
        VerificationResult: The violating pairs, sorted.

    Raises:
        MissingCubeError: If a vertex of g has no cube.
    """
    missing = [v for v in g.vertices if v not in scene.corners]
    if missing:
        msg = f"No cube for vertices {missing}"
        raise MissingCubeError(msg)
    contacts = contact_graph(scene)
    violations = set(overlapping_pairs(scene))
    for u, v, label in g.edges:
        if ((u, v) in contacts) != (label is EdgeLabel.NEAR):
            violations.add((u, v))
    if check_non_edges:
        violations.update(edge for edge in contacts if not g.has_edge(*edge))
    return VerificationResult(tuple(sorted(violations)))
