"""Outerplanar embeddings, their internal faces, the weak dual and ear orders."""

import logging
from collections import defaultdict

import networkx as nx

from .exceptions import InvalidEmbeddingError
from .exceptions import NotOuterplanarError
from .models import Ear
from .models import Edge
from .models import LabeledGraph
from .models import OuterEmbedding
from .models import canonical_edge

logger = logging.getLogger(__name__)


def is_outerplanar(g: LabeledGraph) -> bool:
    """Return True if g is outerplanar (any connectivity).

    A graph is outerplanar iff adding one apex adjacent to every vertex keeps it
    planar.

    Args:
        g (LabeledGraph): The graph.

    Returns:
        bool: Whether g is outerplanar.
    """
    graph = g.to_networkx()
    apex = g.vertex_count
    graph.add_edges_from((apex, v) for v in g.vertices)
    is_planar, _embedding = nx.check_planarity(graph)
    return bool(is_planar)


def _chords_cross(chords: list[tuple[int, int]]) -> bool:
    """Return True if two chords, given as sorted position pairs, cross."""
    for i, (a, b) in enumerate(chords):
        for c, d in chords[i + 1 :]:
            if a < c < b < d or c < a < d < b:
                return True
    return False


def _embedding_problem(g: LabeledGraph, emb: OuterEmbedding) -> str | None:
    """Return why ``emb`` does not embed g, or None if it does."""
    if sorted(emb.outer_cycle) != list(g.vertices):
        return "outer cycle must list every vertex exactly once"
    cycle_edges = set(emb.cycle_edges())
    missing = [edge for edge in sorted(cycle_edges) if not g.has_edge(*edge)]
    if missing:
        return f"outer cycle uses non-edges {missing}"
    position = emb.position
    chords = sorted(
        (min(position[u], position[v]), max(position[u], position[v]))
        for u, v in g.pairs()
        if (u, v) not in cycle_edges
    )
    if _chords_cross(chords):
        return "chords cross"
    return None


def outer_embedding(g: LabeledGraph) -> OuterEmbedding | None:
    """Return the outer cycle of a 2-connected outerplanar graph.

    Degree-2 vertices are removed one at a time (joining their two neighbors) down to
    a triangle, then reinserted between the neighbors they were removed from. The
    resulting cycle is checked against g at the end, so non-outerplanar inputs that
    survive the reduction are still rejected.

    Args:
        g (LabeledGraph): A connected graph.

    Returns:
        OuterEmbedding | None: The unique Hamiltonian outer cycle, or None if g is
            not 2-connected or not outerplanar.
    """
    if g.vertex_count < 3 or not nx.is_biconnected(g.to_networkx()):  # noqa: PLR2004
        return None
    adjacency = {v: set(g.neighbors(v)) for v in g.vertices}
    removed: list[tuple[int, int, int]] = []
    while len(adjacency) > 3:  # noqa: PLR2004
        candidates = [v for v, adj in adjacency.items() if len(adj) == 2]  # noqa: PLR2004
        if not candidates:
            logger.debug("No degree-2 vertex left with %d vertices", len(adjacency))
            return None
        v = min(candidates)
        a, b = sorted(adjacency.pop(v))
        adjacency[a].discard(v)
        adjacency[b].discard(v)
        adjacency[a].add(b)
        adjacency[b].add(a)
        removed.append((v, a, b))
    cycle = sorted(adjacency)
    for v, a, b in reversed(removed):
        i, j = cycle.index(a), cycle.index(b)
        if (i + 1) % len(cycle) == j:
            cycle.insert(i + 1, v)
        elif (j + 1) % len(cycle) == i:
            cycle.insert(j + 1, v)
        else:
            return None
    embedding = OuterEmbedding(tuple(cycle))
    problem = _embedding_problem(g, embedding)
    if problem is not None:
        logger.debug("Reconstructed cycle rejected: %s", problem)
        return None
    return embedding


def _normalize_face(face: list[int]) -> tuple[int, ...]:
    start = face.index(min(face))
    return tuple(face[start:] + face[:start])


def internal_faces(g: LabeledGraph, emb: OuterEmbedding) -> list[tuple[int, ...]]:
    """Return every bounded face of the outerplanar embedding as a vertex cycle.

    Around the vertex at cycle position i, neighbors are ordered by their position
    offset from i. Faces are the orbits of "turn to the previous neighbor"; the
    orbit through the dart from the second cycle vertex back to the first is the
    outer face and is dropped.

    Args:
        g (LabeledGraph): The graph.
        emb (OuterEmbedding): An outer embedding of g.

    Returns:
        list[tuple[int, ...]]: The faces, each starting at its smallest vertex, in
            order of discovery over sorted darts.

    Raises:
        InvalidEmbeddingError: If ``emb`` does not embed g.
    """
    problem = _embedding_problem(g, emb)
    if problem is not None:
        msg = f"Embedding does not fit the graph: {problem}"
        raise InvalidEmbeddingError(msg)
    n = g.vertex_count
    position = emb.position
    rotation = {
        v: sorted(g.neighbors(v), key=lambda w, v=v: (position[w] - position[v]) % n)
        for v in g.vertices
    }
    outer_dart = (emb.outer_cycle[1], emb.outer_cycle[0])
    seen: set[tuple[int, int]] = set()
    faces: list[tuple[int, ...]] = []
    darts = sorted((u, v) for a, b in g.pairs() for u, v in ((a, b), (b, a)))
    for dart in darts:
        if dart in seen:
            continue
        orbit: list[tuple[int, int]] = []
        current = dart
        while current not in seen:
            seen.add(current)
            orbit.append(current)
            u, v = current
            around = rotation[v]
            current = (v, around[around.index(u) - 1])
        if outer_dart in orbit:
            continue
        faces.append(_normalize_face([u for u, _v in orbit]))
    if sum(len(face) for face in faces) + n != 2 * g.edge_count:
        msg = "Face lengths do not add up to twice the edge count"
        raise InvalidEmbeddingError(msg)
    return faces


def face_edges(face: tuple[int, ...]) -> list[Edge]:
    """Return the canonical edges around a face."""
    return [
        canonical_edge(v, face[(i + 1) % len(face)]) for i, v in enumerate(face)
    ]


def weak_dual(faces: list[tuple[int, ...]]) -> nx.Graph:
    """Return the weak dual, where faces sharing an edge are adjacent.

    Args:
        faces (list[tuple[int, ...]]): Faces as returned by internal_faces.

    Returns:
        nx.Graph: The weak dual, with the shared edge as the "shared" attribute.
    """
    owners: dict[Edge, list[int]] = defaultdict(list)
    for index, face in enumerate(faces):
        for edge in face_edges(face):
            owners[edge].append(index)
    dual = nx.Graph()
    dual.add_nodes_from(range(len(faces)))
    for edge, indices in sorted(owners.items()):
        for i, first in enumerate(indices):
            for second in indices[i + 1 :]:
                dual.add_edge(first, second, shared=edge)
    return dual


def _ear_path(face: tuple[int, ...], a: int, b: int) -> tuple[int, ...]:
    """Return the path from a to b around ``face`` avoiding the edge (a, b)."""
    length = len(face)
    i = face.index(a)
    step = -1 if face[(i + 1) % length] == b else 1
    path = [a]
    j = i
    while path[-1] != b:
        j = (j + step) % length
        path.append(face[j])
    return tuple(path)


def ear_decomposition(g: LabeledGraph, emb: OuterEmbedding) -> list[Ear]:
    """Return the faces of a 2-connected outerplanar graph in ear order.

    Leaf faces of the weak dual are peeled repeatedly, lowest face index first, and
    the result is built in reverse. Each face after the first shares exactly one
    edge with the faces before it, and its other vertices are new.

    Args:
        g (LabeledGraph): A 2-connected outerplanar graph.
        emb (OuterEmbedding): Its outer embedding.

    Returns:
        list[Ear]: The base face followed by the ears in build order.

    Raises:
        NotOuterplanarError: If the weak dual is not a tree.
    """
    faces = internal_faces(g, emb)
    dual = weak_dual(faces)
    if not faces or not nx.is_tree(dual):
        msg = "Weak dual of the embedding is not a tree"
        raise NotOuterplanarError(msg)
    remaining = set(dual.nodes)
    peeled: list[int] = []
    while len(remaining) > 1:
        leaf = min(
            f for f in remaining if sum(1 for h in dual[f] if h in remaining) <= 1
        )
        peeled.append(leaf)
        remaining.remove(leaf)
    (base,) = remaining
    ears = [Ear(face=faces[base], anchor=None, path=faces[base])]
    built = {base}
    for index in reversed(peeled):
        (anchor_face,) = (h for h in dual[index] if h in built)
        a, b = dual.edges[index, anchor_face]["shared"]
        face = faces[index]
        ears.append(Ear(face=face, anchor=(a, b), path=_ear_path(face, a, b)))
        built.add(index)
    logger.debug("Ear order over %d faces starts at face %d", len(faces), base)
    return ears
