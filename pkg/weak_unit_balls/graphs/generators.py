"""Generators for the named graph families and small structural helpers."""

import itertools
import logging
import random
from collections.abc import Iterator

import networkx as nx

from .models import Edge
from .models import EdgeLabel
from .models import LabeledGraph
from .models import canonical_edge

logger = logging.getLogger(__name__)

# Vertex ids of the sungraph: inner triangle a, b, c; x sits on ab, y on bc, z on ca.
SUN_A, SUN_B, SUN_C, SUN_X, SUN_Y, SUN_Z = range(6)


def gen_path(n: int, label: EdgeLabel = EdgeLabel.NEAR) -> LabeledGraph:
    """Return the path 0-1-...-(n-1)."""
    return LabeledGraph.from_pairs(n, ((i, i + 1) for i in range(n - 1)), label)


def gen_cycle(n: int, label: EdgeLabel = EdgeLabel.NEAR) -> LabeledGraph:
    """Return the cycle 0-1-...-(n-1)-0 for n >= 3."""
    if n < 3:  # noqa: PLR2004
        msg = f"A cycle needs at least 3 vertices, got {n}"
        raise ValueError(msg)
    return LabeledGraph.from_pairs(n, ((i, (i + 1) % n) for i in range(n)), label)


def gen_complete(n: int, label: EdgeLabel = EdgeLabel.NEAR) -> LabeledGraph:
    """Return K_n."""
    return LabeledGraph.from_pairs(n, itertools.combinations(range(n), 2), label)


def _wheel_pairs(n: int) -> list[Edge]:
    rim = list(range(1, n))
    spokes = [(0, v) for v in rim]
    cycle = [canonical_edge(v, rim[(i + 1) % len(rim)]) for i, v in enumerate(rim)]
    return spokes + cycle


def gen_wheel(n: int) -> LabeledGraph:
    """Return the wheel W_n (hub 0, rim 1..n-1) with every edge NEAR.

    Args:
        n (int): Total number of vertices, at least 4.

    Returns:
        LabeledGraph: The wheel.

    Raises:
        ValueError: If n < 4.
    """
    if n < 4:  # noqa: PLR2004
        msg = f"A wheel needs at least 4 vertices, got {n}"
        raise ValueError(msg)
    return LabeledGraph.from_pairs(n, _wheel_pairs(n))


def gen_wheel_hard(n: int) -> LabeledGraph:
    """Return W_n labeled so that no weak unit interval representation exists.

    With hub v_1 and rim v_2..v_n (vertex ids 0..n-1), the rim edge (v_2, v_n) and the
    spokes (v_1, v_i) for 3 <= i <= n-1 are FAR; every other edge is NEAR.

    Args:
        n (int): Total number of vertices, at least 4.

    Returns:
        LabeledGraph: The labeled wheel.
    """
    wheel = gen_wheel(n)
    far = {canonical_edge(1, n - 1)} | {(0, i - 1) for i in range(3, n)}
    return wheel.with_labels(
        {
            edge: EdgeLabel.FAR if edge in far else EdgeLabel.NEAR
            for edge in wheel.pairs()
        },
    )


def gen_sungraph() -> LabeledGraph:
    """Return the 3-sun with every edge NEAR.

    The inner triangle is a=0, b=1, c=2; the outer vertices are x=3 (on a, b),
    y=4 (on b, c) and z=5 (on c, a).

    Returns:
        LabeledGraph: The sungraph structure.
    """
    pairs = [
        (SUN_A, SUN_B),
        (SUN_B, SUN_C),
        (SUN_A, SUN_C),
        (SUN_A, SUN_X),
        (SUN_B, SUN_X),
        (SUN_B, SUN_Y),
        (SUN_C, SUN_Y),
        (SUN_C, SUN_Z),
        (SUN_A, SUN_Z),
    ]
    return LabeledGraph.from_pairs(6, pairs)


def gen_random_series_parallel(n: int, seed: int) -> LabeledGraph:
    """Return a random series-parallel graph on n vertices with random labels.

    Starting from a single edge, each step adds one vertex by subdividing an edge
    (series), by adding a path of length two parallel to an edge, or by attaching a
    pendant vertex. The result is deterministic for a given seed.

    Args:
        n (int): Number of vertices, at least 2.
        seed (int): Seed for the random number generator.

    Returns:
        LabeledGraph: The graph.

    Raises:
        ValueError: If n < 2.
    """
    if n < 2:  # noqa: PLR2004
        msg = f"Need at least 2 vertices, got {n}"
        raise ValueError(msg)
    rng = random.Random(seed)  # noqa: S311
    edges: set[Edge] = {(0, 1)}
    for new in range(2, n):
        operation = rng.choice(("series", "parallel", "pendant"))
        if operation == "pendant":
            edges.add((rng.randrange(new), new))
            continue
        u, v = rng.choice(sorted(edges))
        if operation == "series":
            edges.remove((u, v))
        edges.add((u, new))
        edges.add((v, new))
    labels = {
        edge: rng.choice((EdgeLabel.NEAR, EdgeLabel.FAR)) for edge in sorted(edges)
    }
    logger.debug("Random series-parallel graph: n=%d seed=%d m=%d", n, seed, len(edges))
    return LabeledGraph.from_labels(n, labels)


def gen_bipyramid(n: int) -> LabeledGraph:
    """Return a maximal planar graph on n vertices with 3n - 6 edges.

    For n >= 5 this is the cycle on 0..n-3 with two apexes n-2 and n-1 joined to
    every cycle vertex; for n = 4 it is K_4.

    Args:
        n (int): Number of vertices, at least 4.

    Returns:
        LabeledGraph: The graph with every edge NEAR.

    Raises:
        ValueError: If n < 4.
    """
    if n < 4:  # noqa: PLR2004
        msg = f"A maximal planar family member needs at least 4 vertices, got {n}"
        raise ValueError(msg)
    if n == 4:  # noqa: PLR2004
        return gen_complete(4)
    ring = n - 2
    pairs = [canonical_edge(i, (i + 1) % ring) for i in range(ring)]
    pairs += [(i, apex) for apex in (n - 2, n - 1) for i in range(ring)]
    return LabeledGraph.from_pairs(n, pairs)


def gen_icosahedron() -> LabeledGraph:
    """Return the icosahedron graph (12 vertices, 30 edges)."""
    return LabeledGraph.from_networkx(nx.icosahedral_graph())


def subdivide(g: LabeledGraph, times: int) -> LabeledGraph:
    """Replace every edge by a path with ``times`` new internal vertices.

    The first edge of each path keeps the original label; the others are NEAR. New
    vertices are numbered from g.vertex_count upwards, edge by edge in sorted order.

    Args:
        g (LabeledGraph): The graph.
        times (int): Number of vertices inserted per edge.

    Returns:
        LabeledGraph: The subdivided graph.

    Raises:
        ValueError: If ``times`` is negative.
    """
    if times < 0:
        msg = f"Cannot subdivide a negative number of times: {times}"
        raise ValueError(msg)
    next_vertex = g.vertex_count
    edges: list[tuple[int, int, EdgeLabel]] = []
    for u, v, label in g.edges:
        chain = [u, *range(next_vertex, next_vertex + times), v]
        next_vertex += times
        for i, (a, b) in enumerate(itertools.pairwise(chain)):
            edges.append((a, b, label if i == 0 else EdgeLabel.NEAR))
    return LabeledGraph(next_vertex, tuple(edges))


def iter_labelings(structure: LabeledGraph) -> Iterator[LabeledGraph]:
    """Yield every labeling of the structure, in binary counting order.

    Bit i of the counter labels the i-th sorted edge; a set bit means FAR. The first
    labeling is all NEAR.

    Args:
        structure (LabeledGraph): The graph whose labels are ignored.

    Yields:
        LabeledGraph: Each of the 2^|E| labelings.
    """
    m = structure.edge_count
    for mask in range(1 << m):
        yield structure.with_labels(
            [EdgeLabel.FAR if mask >> i & 1 else EdgeLabel.NEAR for i in range(m)],
        )


def small_connected_graphs(max_vertices: int, max_edges: int) -> Iterator[LabeledGraph]:
    """Yield the connected graphs of the networkx atlas within the given sizes.

    The atlas lists every graph on up to 7 vertices once up to isomorphism.

    Args:
        max_vertices (int): Largest vertex count, at most 7.
        max_edges (int): Largest edge count.

    Yields:
        LabeledGraph: Each connected graph with at least one edge.
    """
    for graph in nx.graph_atlas_g():
        n = graph.number_of_nodes()
        if n > max_vertices:
            break
        if graph.number_of_edges() == 0 or graph.number_of_edges() > max_edges:
            continue
        if nx.is_connected(graph):
            yield LabeledGraph.from_networkx(graph)
