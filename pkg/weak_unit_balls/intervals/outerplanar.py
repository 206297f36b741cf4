"""Weak unit interval representations of triangle-free outerplanar graphs.

Each component is made 2-connected, its faces are visited in ear order, and every
ear's new vertices are placed by assign_path between the two already placed anchor
endpoints. All coordinates are integers at diameter 2 and no edge is longer than 6.
"""

import logging
from fractions import Fraction

import networkx as nx

from weak_unit_balls.graphs.embedding import ear_decomposition
from weak_unit_balls.graphs.embedding import is_outerplanar
from weak_unit_balls.graphs.embedding import outer_embedding
from weak_unit_balls.graphs.exceptions import InvalidGraphError
from weak_unit_balls.graphs.exceptions import LogicalError
from weak_unit_balls.graphs.exceptions import NotOuterplanarError
from weak_unit_balls.graphs.models import EdgeLabel
from weak_unit_balls.graphs.models import LabeledGraph
from weak_unit_balls.graphs.structure import girth

from .constants import PATH_DIAMETER
from .constants import PATH_MAX_GAP
from .exceptions import GirthTooSmallError
from .models import IntervalRep
from .paths import assign_path
from .solver import verify_interval

logger = logging.getLogger(__name__)

_TRIANGLE_FREE_GIRTH = 4

# Distance between the two endpoints of the first placed edge, by its label.
_FIRST_EDGE_GAP = {EdgeLabel.NEAR: 2, EdgeLabel.FAR: 3}


def _outer_neighbors(g: LabeledGraph, block: frozenset[int], v: int) -> list[int]:
    """Return the neighbors of v on the outer cycle of ``block``."""
    if len(block) == 2:  # noqa: PLR2004
        return sorted(block - {v})
    nodes = sorted(block)
    emb = outer_embedding(LabeledGraph.from_networkx(g.induced(block)))
    if emb is None:
        msg = f"Block {nodes} is not outerplanar"
        raise NotOuterplanarError(msg)
    cycle = emb.outer_cycle
    i = cycle.index(nodes.index(v))
    return sorted((nodes[cycle[i - 1]], nodes[cycle[(i + 1) % len(cycle)]]))


def _blocks_at(blocks: list[frozenset[int]], v: int) -> list[frozenset[int]]:
    return sorted((b for b in blocks if v in b), key=sorted)


def _augmentation_step(g: LabeledGraph) -> LabeledGraph:
    """Merge blocks once: close a bridge with an edge, else join two blocks."""
    graph = g.to_networkx()
    blocks = [frozenset(b) for b in nx.biconnected_components(graph)]
    for v, w in sorted(tuple(sorted(b)) for b in blocks if len(b) == 2):  # noqa: PLR2004
        bridge = frozenset((v, w))
        v_side = [b for b in _blocks_at(blocks, v) if b != bridge]
        w_side = [b for b in _blocks_at(blocks, w) if b != bridge]
        if v_side and w_side:
            u = _outer_neighbors(g, v_side[0], v)[0]
            x = _outer_neighbors(g, w_side[0], w)[0]
            logger.debug("Closing bridge (%d, %d) with edge (%d, %d)", v, w, u, x)
            return LabeledGraph(g.vertex_count, (*g.edges, (u, x, EdgeLabel.NEAR)))
    v = min(nx.articulation_points(graph))
    first, second = _blocks_at(blocks, v)[:2]
    u = _outer_neighbors(g, first, v)[0]
    w = _outer_neighbors(g, second, v)[0]
    x = g.vertex_count
    logger.debug("Joining blocks at %d with the path (%d, %d, %d)", v, u, x, w)
    return LabeledGraph(
        g.vertex_count + 1,
        (*g.edges, (u, x, EdgeLabel.NEAR), (x, w, EdgeLabel.NEAR)),
    )


def augment_to_2connected(g: LabeledGraph) -> LabeledGraph:
    """Extend a connected triangle-free outerplanar graph to a 2-connected one.

    A bridge (v, w) whose endpoints both have other neighbors u and x is closed by
    the edge (u, x). Otherwise two blocks meeting at a cut vertex v are joined by a
    path (u, x, w) through a new vertex x, where u and w are neighbors of v on the
    outer cycles of the two blocks. Added edges are NEAR, and the original vertices
    keep their ids, so restricting a representation of the result to them
    represents g.

    Args:
        g (LabeledGraph): A connected triangle-free outerplanar graph.

    Returns:
        LabeledGraph: A 2-connected triangle-free outerplanar supergraph, or g itself
            when it is already 2-connected or has fewer than three vertices.

    Raises:
        InvalidGraphError: If g is disconnected.
        NotOuterplanarError: If g, or the augmented graph, is not outerplanar.
    """
    if not is_outerplanar(g):
        msg = "Cannot augment a graph that is not outerplanar"
        raise NotOuterplanarError(msg)
    if g.vertex_count < 3:  # noqa: PLR2004
        return g
    if not nx.is_connected(g.to_networkx()):
        msg = "Augmentation needs a connected graph"
        raise InvalidGraphError(msg)
    current = g
    while not nx.is_biconnected(current.to_networkx()):
        current = _augmentation_step(current)
    if not is_outerplanar(current):
        msg = "Augmented graph is not outerplanar"
        logger.critical(msg)
        raise NotOuterplanarError(msg)
    logger.debug(
        "Augmented %d vertices and %d edges to %d and %d",
        g.vertex_count,
        g.edge_count,
        current.vertex_count,
        current.edge_count,
    )
    return current


def _place_along(
    g: LabeledGraph,
    coords: dict[int, Fraction],
    path: tuple[int, ...],
) -> None:
    labels = [g.label(a, b) for a, b in zip(path, path[1:], strict=False)]
    placed = assign_path(coords[path[0]], coords[path[-1]], labels)
    for v, x in zip(path[1:-1], placed[1:-1], strict=True):
        coords[v] = x


def _represent_component(g: LabeledGraph) -> dict[int, Fraction]:
    """Place a connected graph; vertex ids are local to the component."""
    if g.vertex_count == 1:
        return {0: Fraction(0)}
    if g.vertex_count == 2:  # noqa: PLR2004
        return {0: Fraction(0), 1: Fraction(_FIRST_EDGE_GAP[g.label(0, 1)])}
    augmented = augment_to_2connected(g)
    emb = outer_embedding(augmented)
    if emb is None:
        msg = "Augmented graph has no outer embedding"
        logger.critical(msg)
        raise LogicalError(msg)
    base, *ears = ear_decomposition(augmented, emb)
    a, b = base.face[0], base.face[1]
    coords = {
        a: Fraction(0),
        b: Fraction(_FIRST_EDGE_GAP[augmented.label(a, b)]),
    }
    _place_along(augmented, coords, (*base.face[1:], a))
    for ear in ears:
        _place_along(augmented, coords, ear.path)
    return {v: coords[v] for v in g.vertices}


def max_edge_gap(g: LabeledGraph, rep: IntervalRep) -> Fraction:
    """Return the largest |I(u) - I(v)| over the edges of g (0 without edges)."""
    return max(
        (abs(rep.coords[u] - rep.coords[v]) for u, v in g.pairs()),
        default=Fraction(0),
    )


def represent_triangle_free_outerplanar(g: LabeledGraph) -> IntervalRep:
    """Represent a triangle-free outerplanar graph at d = 2 with integer centers.

    Args:
        g (LabeledGraph): The labeled graph.

    Returns:
        IntervalRep: A representation whose edges are all at most 6 long.

    Raises:
        GirthTooSmallError: If g has a triangle.
        NotOuterplanarError: If g is not outerplanar.
        LogicalError: If the result fails verification.
    """
    if girth(g) < _TRIANGLE_FREE_GIRTH:
        msg = "Graph contains a triangle"
        raise GirthTooSmallError(msg)
    if not is_outerplanar(g):
        msg = "Graph is not outerplanar"
        raise NotOuterplanarError(msg)
    coords: dict[int, Fraction] = {}
    for component in sorted(nx.connected_components(g.to_networkx()), key=min):
        nodes = sorted(component)
        local = _represent_component(LabeledGraph.from_networkx(g.induced(component)))
        coords.update({nodes[i]: x for i, x in local.items()})
    rep = IntervalRep(coords, Fraction(PATH_DIAMETER))
    result = verify_interval(g, rep)
    if not result or max_edge_gap(g, rep) > PATH_MAX_GAP:
        msg = f"Ear placement failed on edges {list(result.violations)}"
        logger.critical(msg)
        raise LogicalError(msg)
    return rep
