"""Domain types for edge-labeled graphs.

Nothing here is stored in a database: the types are frozen dataclasses, so every
operation in the project is a pure function of its inputs.
"""

import enum

from weak_unit_balls._compat import StrEnum
from collections.abc import Iterable
from collections.abc import Iterator
from collections.abc import Mapping
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from .exceptions import InvalidEmbeddingError
from .exceptions import InvalidGraphError

Edge = tuple[int, int]


class EdgeLabel(StrEnum):
    """Near/far label carried by every edge."""

    NEAR = "N"
    FAR = "F"

    @property
    def flipped(self) -> "EdgeLabel":
        """Return the opposite label."""
        return EdgeLabel.FAR if self is EdgeLabel.NEAR else EdgeLabel.NEAR


def canonical_edge(u: int, v: int) -> Edge:
    """Return the edge (u, v) with its smaller endpoint first.

    Args:
        u (int): One endpoint.
        v (int): The other endpoint.

    Returns:
        Edge: The pair ordered so that the first vertex is the smaller one.
    """
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class LabeledGraph:
    """A simple undirected graph whose every edge is labeled NEAR or FAR.

    Vertices are the integers 0..vertex_count-1. Edges are normalized on
    construction to sorted (u, v, label) triples with u < v, so two graphs with the
    same structure and labels compare equal.
    """

    vertex_count: int
    edges: tuple[tuple[int, int, EdgeLabel], ...] = ()

    def __post_init__(self) -> None:
        """Validate and canonicalize the edge list.

        Raises:
            InvalidGraphError: On a negative vertex count, a self-loop, a vertex id
                out of range, or a repeated edge.
        """
        if self.vertex_count < 0:
            msg = f"Vertex count must be non-negative, got {self.vertex_count}"
            raise InvalidGraphError(msg)
        labels: dict[Edge, EdgeLabel] = {}
        for u, v, label in self.edges:
            if u == v:
                msg = f"Self-loop at vertex {u}"
                raise InvalidGraphError(msg)
            for w in (u, v):
                if not 0 <= w < self.vertex_count:
                    msg = f"Vertex {w} outside 0..{self.vertex_count - 1}"
                    raise InvalidGraphError(msg)
            key = canonical_edge(u, v)
            if key in labels:
                msg = f"Parallel edge {key}"
                raise InvalidGraphError(msg)
            labels[key] = EdgeLabel(label)
        canonical = tuple((u, v, labels[u, v]) for u, v in sorted(labels))
        object.__setattr__(self, "edges", canonical)

    @classmethod
    def from_labels(
        cls,
        vertex_count: int,
        labels: Mapping[Edge, EdgeLabel],
    ) -> "LabeledGraph":
        """Build a graph from an edge to label mapping.

        Args:
            vertex_count (int): Number of vertices.
            labels (Mapping[Edge, EdgeLabel]): Label of every edge.

        Returns:
            LabeledGraph: The graph.
        """
        return cls(vertex_count, tuple((u, v, lab) for (u, v), lab in labels.items()))

    @classmethod
    def from_pairs(
        cls,
        vertex_count: int,
        pairs: Iterable[Edge],
        label: EdgeLabel = EdgeLabel.NEAR,
    ) -> "LabeledGraph":
        """Build a graph whose edges all carry the same label.

        Args:
            vertex_count (int): Number of vertices.
            pairs (Iterable[Edge]): The edges.
            label (EdgeLabel): Label given to every edge.

        Returns:
            LabeledGraph: The graph.
        """
        return cls(vertex_count, tuple((u, v, label) for u, v in pairs))

    @classmethod
    def from_networkx(
        cls,
        graph: nx.Graph,
        label: EdgeLabel = EdgeLabel.NEAR,
    ) -> "LabeledGraph":
        """Convert a networkx graph, renumbering its nodes in sorted order.

        Edges with a "label" attribute keep it; the others get ``label``.

        Args:
            graph (nx.Graph): The networkx graph.
            label (EdgeLabel): Label for edges without a "label" attribute.

        Returns:
            LabeledGraph: The converted graph.
        """
        index = {node: i for i, node in enumerate(sorted(graph.nodes))}
        return cls(
            len(index),
            tuple(
                (index[u], index[v], EdgeLabel(data.get("label", label)))
                for u, v, data in graph.edges(data=True)
            ),
        )

    @cached_property
    def labels(self) -> dict[Edge, EdgeLabel]:
        """Map every canonical edge to its label."""
        return {(u, v): label for u, v, label in self.edges}

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """Neighbor set of every vertex."""
        neighbors: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v, _label in self.edges:
            neighbors[u].add(v)
            neighbors[v].add(u)
        return tuple(frozenset(adj) for adj in neighbors)

    @property
    def edge_count(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @property
    def vertices(self) -> range:
        """The vertex ids."""
        return range(self.vertex_count)

    def pairs(self) -> list[Edge]:
        """Return the canonical edges in sorted order."""
        return [(u, v) for u, v, _label in self.edges]

    def label(self, u: int, v: int) -> EdgeLabel:
        """Return the label of edge (u, v) in either orientation.

        Args:
            u (int): One endpoint.
            v (int): The other endpoint.

        Returns:
            EdgeLabel: The label.

        Raises:
            InvalidGraphError: If the edge is absent.
        """
        try:
            return self.labels[canonical_edge(u, v)]
        except KeyError as err:
            msg = f"No edge between {u} and {v}"
            raise InvalidGraphError(msg) from err

    def has_edge(self, u: int, v: int) -> bool:
        """Return True if u and v are adjacent."""
        return canonical_edge(u, v) in self.labels

    def neighbors(self, v: int) -> frozenset[int]:
        """Return the neighbors of v."""
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        """Return the degree of v."""
        return len(self.adjacency[v])

    def near_edges(self) -> list[Edge]:
        """Return the NEAR edges in sorted order."""
        return [(u, v) for u, v, lab in self.edges if lab is EdgeLabel.NEAR]

    def far_edges(self) -> list[Edge]:
        """Return the FAR edges in sorted order."""
        return [(u, v) for u, v, lab in self.edges if lab is EdgeLabel.FAR]

    def with_labels(
        self,
        labels: Mapping[Edge, EdgeLabel] | Sequence[EdgeLabel],
    ) -> "LabeledGraph":
        """Return the same structure under a different labeling.

        Args:
            labels (Mapping[Edge, EdgeLabel] | Sequence[EdgeLabel]): Either a label
                per canonical edge, or a sequence aligned with ``self.pairs()``.

        Returns:
            LabeledGraph: The relabeled graph.

        Raises:
            InvalidGraphError: If the labeling does not cover exactly the edges.
        """
        pairs = self.pairs()
        if isinstance(labels, Mapping):
            if set(labels) != set(pairs):
                msg = "Labeling does not match the edge set"
                raise InvalidGraphError(msg)
            sequence = [labels[pair] for pair in pairs]
        else:
            sequence = list(labels)
            if len(sequence) != len(pairs):
                msg = f"Expected {len(pairs)} labels, got {len(sequence)}"
                raise InvalidGraphError(msg)
        return LabeledGraph(
            self.vertex_count,
            tuple((u, v, lab) for (u, v), lab in zip(pairs, sequence, strict=True)),
        )

    def structure(self) -> "LabeledGraph":
        """Return the same structure with every edge labeled NEAR."""
        return LabeledGraph.from_pairs(self.vertex_count, self.pairs())

    def to_networkx(self) -> nx.Graph:
        """Return a fresh networkx graph with a "label" attribute on every edge."""
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from((u, v, {"label": lab}) for u, v, lab in self.edges)
        return graph

    def induced(self, vertices: Iterable[int]) -> nx.Graph:
        """Return the induced subgraph on ``vertices`` as a networkx graph."""
        return self.to_networkx().subgraph(vertices).copy()


@dataclass(frozen=True)
class OuterEmbedding:
    """Outerplanar embedding given by the cyclic order of the outer face.

    The cycle is normalized to start at its smallest vertex, with the second vertex
    smaller than the last one.
    """

    outer_cycle: tuple[int, ...]

    def __post_init__(self) -> None:
        """Validate and normalize the cycle.

        Raises:
            InvalidEmbeddingError: If the cycle is too short or repeats a vertex.
        """
        cycle = tuple(self.outer_cycle)
        if len(cycle) < 3 or len(set(cycle)) != len(cycle):  # noqa: PLR2004
            msg = f"Outer cycle must list at least 3 distinct vertices, got {cycle}"
            raise InvalidEmbeddingError(msg)
        start = cycle.index(min(cycle))
        cycle = cycle[start:] + cycle[:start]
        if cycle[1] > cycle[-1]:
            cycle = (cycle[0], *reversed(cycle[1:]))
        object.__setattr__(self, "outer_cycle", cycle)

    @cached_property
    def position(self) -> dict[int, int]:
        """Index of every vertex on the outer cycle."""
        return {v: i for i, v in enumerate(self.outer_cycle)}

    def cycle_edges(self) -> Iterator[Edge]:
        """Yield the edges of the outer cycle."""
        cycle = self.outer_cycle
        for i, v in enumerate(cycle):
            yield canonical_edge(v, cycle[(i + 1) % len(cycle)])


@dataclass(frozen=True)
class Ear:
    """One face of an outerplanar graph in ear order.

    The base face has no anchor and its path is the whole face cycle. Every later
    face is glued onto the already built part along ``anchor`` (a, b); its path runs
    from a to b around the face, and the path's interior vertices are new.
    """

    face: tuple[int, ...]
    anchor: Edge | None
    path: tuple[int, ...]

    @property
    def interior(self) -> tuple[int, ...]:
        """Vertices of the path strictly between the anchor endpoints."""
        return self.path[1:-1]


@dataclass(frozen=True)
class ContractionStep:
    """Contraction of a vertex of degree at most two into one of its neighbors.

    ``other_neighbor`` is None when the contracted vertex had degree one. When it is
    set, the contraction adds the edge (kept_neighbor, other_neighbor) if missing.
    """

    contracted: int
    kept_neighbor: int
    other_neighbor: int | None = None


@dataclass(frozen=True)
class ContractionSequence:
    """Ordered contractions reducing every component to one of the ``roots``."""

    steps: tuple[ContractionStep, ...]
    roots: tuple[int, ...]

    def __len__(self) -> int:
        """Return the number of steps."""
        return len(self.steps)


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of checking a representation against a labeled graph.

    Truthy exactly when there are no violations.
    """

    violations: tuple[Edge, ...] = ()

    @property
    def ok(self) -> bool:
        """True when every checked pair behaves as its label requires."""
        return not self.violations

    def __bool__(self) -> bool:
        """Return ``self.ok``."""
        return self.ok
