"""Vertex decompositions into an I-set and a forest, and their interval colorings.

With I 2-independent and G[F] a forest, every labeling is realized at d = 1 by
putting I at 0 and the forest on {-2, -1, 1, 2}. A nearly 2-independent I-set is
handled at d = 3 by dropping one bad edge per I-pair, stretching that coloring and
repairing the dropped edges.
"""

import logging
from collections import deque
from fractions import Fraction

import networkx as nx

from weak_unit_balls.graphs.embedding import ear_decomposition
from weak_unit_balls.graphs.embedding import outer_embedding
from weak_unit_balls.graphs.exceptions import LogicalError
from weak_unit_balls.graphs.exceptions import NotOuterplanarError
from weak_unit_balls.graphs.exceptions import WorkBoundExceededError
from weak_unit_balls.graphs.models import EdgeLabel
from weak_unit_balls.graphs.models import LabeledGraph
from weak_unit_balls.graphs.models import OuterEmbedding
from weak_unit_balls.graphs.models import canonical_edge
from weak_unit_balls.graphs.structure import girth
from weak_unit_balls.graphs.utils import EXACT_DECOMPOSITION_BOUND

from .constants import FOREST_DIAMETER
from .constants import NEARLY_INDEPENDENT_DIAMETER
from .constants import STRETCHED_MAGNITUDE
from .exceptions import GirthTooSmallError
from .exceptions import InvalidDecompositionError
from .models import Decomposition
from .models import IntervalRep
from .models import IPair
from .solver import verify_interval

logger = logging.getLogger(__name__)

_GIRTH5 = 5


def _second_neighborhood(g: LabeledGraph, v: int) -> set[int]:
    """Return the vertices at distance 1 or 2 from v."""
    ball = set(g.neighbors(v))
    for w in g.neighbors(v):
        ball |= g.neighbors(w)
    ball.discard(v)
    return ball


def _check_partition(g: LabeledGraph, dec: Decomposition) -> None:
    if dec.iset | dec.fset != set(g.vertices):
        missing = sorted(set(g.vertices) - dec.iset - dec.fset)
        extra = sorted((dec.iset | dec.fset) - set(g.vertices))
        msg = f"I and F must cover the vertices; missing {missing}, extra {extra}"
        raise InvalidDecompositionError(msg)
    if dec.fset and not nx.is_forest(g.induced(dec.fset)):
        msg = "F induces a cycle"
        raise InvalidDecompositionError(msg)


def validate_decomposition(g: LabeledGraph, dec: Decomposition) -> None:
    """Check that I is 2-independent and F induces a forest.

    Args:
        g (LabeledGraph): The graph.
        dec (Decomposition): The decomposition to check.

    Raises:
        InvalidDecompositionError: If any condition fails.
    """
    _check_partition(g, dec)
    for v in sorted(dec.iset):
        close = sorted(_second_neighborhood(g, v) & dec.iset)
        if close:
            msg = f"I-vertex {v} is within distance 2 of I-vertices {close}"
            raise InvalidDecompositionError(msg)
    if dec.ipairs:
        msg = "A 2-independent decomposition has no I-pairs"
        raise InvalidDecompositionError(msg)


def find_ipairs(g: LabeledGraph, iset: frozenset[int]) -> tuple[IPair, ...]:
    """Return the I-pairs of a nearly 2-independent set.

    Args:
        g (LabeledGraph): The graph.
        iset (frozenset[int]): The candidate set.

    Returns:
        tuple[IPair, ...]: Every pair at distance two with its unique middle vertex,
            the smaller I-vertex first.

    Raises:
        InvalidDecompositionError: If the set is not independent, a pair is joined
            by more than one 2-path, or a vertex has two partners at distance two.
    """
    partner: dict[int, int] = {}
    pairs = []
    for u in sorted(iset):
        for v in sorted(_second_neighborhood(g, u) & iset):
            if v < u:
                continue
            if g.has_edge(u, v):
                msg = f"I-vertices {u} and {v} are adjacent"
                raise InvalidDecompositionError(msg)
            middles = sorted(g.neighbors(u) & g.neighbors(v))
            if len(middles) != 1:
                msg = f"I-vertices {u} and {v} are joined by {len(middles)} 2-paths"
                raise InvalidDecompositionError(msg)
            for w, mate in ((u, v), (v, u)):
                if w in partner:
                    msg = f"I-vertex {w} has two partners, {partner[w]} and {mate}"
                    raise InvalidDecompositionError(msg)
                partner[w] = mate
            pairs.append(IPair(u, v, middles[0]))
    return tuple(pairs)


def validate_nearly_2independent(g: LabeledGraph, dec: Decomposition) -> None:
    """Check a relaxed decomposition and its recorded I-pairs.

    Args:
        g (LabeledGraph): The graph.
        dec (Decomposition): The decomposition to check.

    Raises:
        InvalidDecompositionError: If the sets are invalid or the recorded I-pairs
            differ from the actual ones.
    """
    _check_partition(g, dec)
    actual = find_ipairs(g, dec.iset)
    if actual != dec.ipairs:
        msg = f"Recorded I-pairs {list(dec.ipairs)} differ from {list(actual)}"
        raise InvalidDecompositionError(msg)


def _forest_coloring(g: LabeledGraph, dec: Decomposition) -> dict[int, int]:
    """Color I with 0 and every tree of G[F] by BFS from its smallest vertex.

    The magnitude of a forest vertex is 2 when it is far from its I-neighbor and 1
    otherwise; its sign follows its BFS parent across a NEAR tree edge and flips
    across a FAR one. Roots are positive.
    """
    colors = {v: 0 for v in dec.iset}

    def magnitude(v: int) -> int:
        anchors = [w for w in g.neighbors(v) if w in dec.iset]
        if anchors and g.label(v, anchors[0]) is EdgeLabel.FAR:
            return 2
        return 1

    forest = g.induced(dec.fset)
    for component in sorted(nx.connected_components(forest), key=min):
        root = min(component)
        colors[root] = magnitude(root)
        for parent, child in nx.bfs_edges(forest, root, sort_neighbors=sorted):
            sign = 1 if colors[parent] > 0 else -1
            if g.label(parent, child) is EdgeLabel.FAR:
                sign = -sign
            colors[child] = sign * magnitude(child)
    return colors


def _verified(g: LabeledGraph, rep: IntervalRep) -> IntervalRep:
    result = verify_interval(g, rep)
    if not result:
        msg = f"Decomposition coloring violates edges {list(result.violations)}"
        logger.critical(msg)
        raise LogicalError(msg)
    return rep


def color_forest_2independent(g: LabeledGraph, dec: Decomposition) -> IntervalRep:
    """Represent g at d = 1 from a (2-independent, forest) decomposition.

    Args:
        g (LabeledGraph): The labeled graph.
        dec (Decomposition): A valid decomposition of g.

    Returns:
        IntervalRep: Centers in {-2, -1, 0, 1, 2} at diameter 1.
    """
    validate_decomposition(g, dec)
    colors = _forest_coloring(g, dec)
    return _verified(g, IntervalRep(colors, Fraction(FOREST_DIAMETER)))


def _repair(
    colors: dict[int, int],
    label: EdgeLabel,
    anchor: int,
    middle: int,
) -> None:
    """Fix a dropped bad edge between the I-vertex ``anchor`` and ``middle``."""
    value = colors[middle]
    sign = 1 if value > 0 else -1
    if label is EdgeLabel.NEAR and abs(value) == STRETCHED_MAGNITUDE[2]:
        colors[anchor], colors[middle] = sign, 4 * sign
    elif label is EdgeLabel.FAR and abs(value) == STRETCHED_MAGNITUDE[1]:
        colors[anchor], colors[middle] = -sign, 3 * sign


def color_nearly_2independent(g: LabeledGraph, dec: Decomposition) -> IntervalRep:
    """Represent g at d = 3 from a (nearly 2-independent, forest) decomposition.

    For every I-pair the bad edge at the larger I-vertex is dropped, the remaining
    graph is colored as in color_forest_2independent, the values 0, 1, 2 are
    stretched to 0, 2, 5 (keeping signs), and each dropped edge is repaired by
    moving its two endpoints one step toward or away from each other.

    Args:
        g (LabeledGraph): The labeled graph.
        dec (Decomposition): A valid nearly 2-independent decomposition of g.

    Returns:
        IntervalRep: Centers in -5..5 at diameter 3.
    """
    validate_nearly_2independent(g, dec)
    dropped = {canonical_edge(pair.v, pair.middle): pair for pair in dec.ipairs}
    reduced = LabeledGraph(
        g.vertex_count,
        tuple(edge for edge in g.edges if (edge[0], edge[1]) not in dropped),
    )
    base = _forest_coloring(reduced, Decomposition(dec.iset, dec.fset))
    colors = {
        v: STRETCHED_MAGNITUDE[abs(c)] * (1 if c >= 0 else -1) for v, c in base.items()
    }
    for edge, pair in sorted(dropped.items()):
        _repair(colors, g.label(*edge), pair.v, pair.middle)
    logger.debug("Repaired %d dropped bad edges", len(dropped))
    return _verified(g, IntervalRep(colors, Fraction(NEARLY_INDEPENDENT_DIAMETER)))


def _joins_forest(g: LabeledGraph, fset: set[int], v: int) -> bool:
    """Return True if adding v to F keeps G[F] a forest."""
    roots = [w for w in g.neighbors(v) if w in fset]
    if len(roots) < 2:  # noqa: PLR2004
        return True
    forest = g.induced(fset)
    seen: set[int] = set()
    for root in roots:
        if root in seen:
            return False
        seen |= nx.node_connected_component(forest, root)
    return True


def _bfs_order(g: LabeledGraph) -> list[int]:
    order: list[int] = []
    placed: set[int] = set()
    for start in g.vertices:
        if start in placed:
            continue
        queue = deque([start])
        placed.add(start)
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(g.neighbors(v)):
                if w not in placed:
                    placed.add(w)
                    queue.append(w)
    return order


def decompose_forest_2independent(
    g: LabeledGraph,
    *,
    exact: bool = True,
    vertex_bound: int = EXACT_DECOMPOSITION_BOUND,
) -> Decomposition | None:
    """Search for a (2-independent, forest) decomposition.

    Vertices are taken in BFS order and tried in I before F. Exact mode backtracks
    and proves absence; greedy mode keeps the first feasible choice for each vertex
    and gives up at the first dead end.

    Args:
        g (LabeledGraph): The graph.
        exact (bool): Whether to search exhaustively.
        vertex_bound (int): Largest vertex count accepted in exact mode.

    Returns:
        Decomposition | None: A valid decomposition, or None if exact search proves
            none exists or the greedy pass fails.

    Raises:
        WorkBoundExceededError: If exact mode is asked for more than
            ``vertex_bound`` vertices.
    """
    if exact and g.vertex_count > vertex_bound:
        msg = (
            f"Exact decomposition search on {g.vertex_count} vertices exceeds the "
            f"bound of {vertex_bound} (set WEAKREP_EXACT_DECOMPOSITION_BOUND or use "
            "greedy mode)"
        )
        raise WorkBoundExceededError(msg)
    order = _bfs_order(g)
    iset: set[int] = set()
    fset: set[int] = set()

    def choices(v: int) -> list[set[int]]:
        options = []
        if not _second_neighborhood(g, v) & iset:
            options.append(iset)
        if _joins_forest(g, fset, v):
            options.append(fset)
        return options

    def extend(index: int) -> bool:
        if index == len(order):
            return True
        v = order[index]
        options = choices(v)
        if not exact:
            options = options[:1]
        for side in options:
            side.add(v)
            if extend(index + 1):
                return True
            side.remove(v)
        return False

    if not extend(0):
        logger.debug("No decomposition for %d vertices", g.vertex_count)
        return None
    dec = Decomposition(frozenset(iset), frozenset(fset))
    validate_decomposition(g, dec)
    return dec


def decompose_girth5_outerplanar(
    g: LabeledGraph,
    emb: OuterEmbedding,
) -> Decomposition:
    """Decompose a 2-connected outerplanar graph of girth at least 5 face by face.

    The base face puts its third vertex in I. Each later ear puts all its new
    vertices in F when an endpoint of its anchor edge is in I, and otherwise puts
    the second new vertex in I.

    Args:
        g (LabeledGraph): The graph.
        emb (OuterEmbedding): Its outer embedding.

    Returns:
        Decomposition: A valid (2-independent, forest) decomposition.

    Raises:
        GirthTooSmallError: If g has a cycle shorter than 5.
    """
    if girth(g) < _GIRTH5:
        msg = f"Girth {girth(g)} is below {_GIRTH5}"
        raise GirthTooSmallError(msg)
    ears = ear_decomposition(g, emb)
    iset: set[int] = set()
    base, *rest = ears
    iset.add(base.path[2])
    for ear in rest:
        if ear.anchor is not None and not set(ear.anchor) & iset:
            iset.add(ear.interior[1])
    dec = Decomposition(frozenset(iset), frozenset(g.vertices) - iset)
    validate_decomposition(g, dec)
    return dec


def represent_by_decomposition(g: LabeledGraph) -> IntervalRep | None:
    """Represent g at d = 1 through an exact decomposition search.

    Args:
        g (LabeledGraph): The labeled graph.

    Returns:
        IntervalRep | None: The representation, or None if g has no
            (2-independent, forest) decomposition.
    """
    dec = decompose_forest_2independent(g)
    if dec is None:
        return None
    return color_forest_2independent(g, dec)


def represent_girth5_outerplanar(g: LabeledGraph) -> IntervalRep:
    """Represent a 2-connected outerplanar graph of girth at least 5 at d = 1.

    Args:
        g (LabeledGraph): The labeled graph.

    Returns:
        IntervalRep: The representation.

    Raises:
        NotOuterplanarError: If g is not a 2-connected outerplanar graph.
    """
    emb = outer_embedding(g)
    if emb is None:
        msg = "Expected a 2-connected outerplanar graph"
        raise NotOuterplanarError(msg)
    return color_forest_2independent(g, decompose_girth5_outerplanar(g, emb))
