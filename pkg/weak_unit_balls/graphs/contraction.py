"""Degree-2 contraction sequences."""

import logging
from collections.abc import Iterator

from .exceptions import InvalidGraphError
from .models import ContractionSequence
from .models import ContractionStep
from .models import EdgeLabel
from .models import LabeledGraph
from .models import canonical_edge

logger = logging.getLogger(__name__)


def find_degree2_contraction_sequence(g: LabeledGraph) -> ContractionSequence | None:
    """Greedily contract vertices of degree one or two until only roots remain.

    At every step the smallest vertex with degree 1 or 2 is contracted into its
    smaller neighbor; a degree-2 vertex also joins its two neighbors if they are not
    adjacent yet.

    Args:
        g (LabeledGraph): A simple graph.

    Returns:
        ContractionSequence | None: The sequence, or None if the greedy elimination
            gets stuck before every component is a single vertex.
    """
    adjacency = {v: set(g.neighbors(v)) for v in g.vertices}
    steps: list[ContractionStep] = []
    while True:
        candidates = [v for v, adj in adjacency.items() if 1 <= len(adj) <= 2]  # noqa: PLR2004
        if not candidates:
            break
        v = min(candidates)
        neighbors = sorted(adjacency.pop(v))
        for w in neighbors:
            adjacency[w].discard(v)
        if len(neighbors) == 1:
            steps.append(ContractionStep(v, neighbors[0]))
        else:
            kept, other = neighbors
            adjacency[kept].add(other)
            adjacency[other].add(kept)
            steps.append(ContractionStep(v, kept, other))
    if any(adjacency.values()):
        logger.debug(
            "Greedy contraction stuck with %d vertices left after %d steps",
            len(adjacency),
            len(steps),
        )
        return None
    return ContractionSequence(steps=tuple(steps), roots=tuple(sorted(adjacency)))


def apply_contraction(current: LabeledGraph, step: ContractionStep) -> LabeledGraph:
    """Return the graph after one contraction step.

    The contracted vertex stays in the vertex range as an isolated vertex. An edge
    created by the contraction is labeled NEAR.

    Args:
        current (LabeledGraph): The graph before the step.
        step (ContractionStep): The step.

    Returns:
        LabeledGraph: The graph after the step.

    Raises:
        InvalidGraphError: If the contracted vertex's neighbors are not exactly the
            ones the step names.
    """
    v = step.contracted
    expected = {step.kept_neighbor}
    if step.other_neighbor is not None:
        expected.add(step.other_neighbor)
    if set(current.neighbors(v)) != expected:
        msg = (
            f"Step contracting {v} expects neighbors {sorted(expected)}, "
            f"found {sorted(current.neighbors(v))}"
        )
        raise InvalidGraphError(msg)
    labels = dict(current.labels)
    for w in expected:
        del labels[canonical_edge(v, w)]
    if step.other_neighbor is not None:
        labels.setdefault(
            canonical_edge(step.kept_neighbor, step.other_neighbor),
            EdgeLabel.NEAR,
        )
    return LabeledGraph.from_labels(current.vertex_count, labels)


def iter_contractions(
    g: LabeledGraph,
    sequence: ContractionSequence,
) -> Iterator[tuple[ContractionStep, LabeledGraph]]:
    """Replay a contraction sequence forward.

    Args:
        g (LabeledGraph): The original graph.
        sequence (ContractionSequence): A sequence for g.

    Yields:
        tuple[ContractionStep, LabeledGraph]: Each step with the graph it applies to.
    """
    current = g
    for step in sequence.steps:
        following = apply_contraction(current, step)
        yield step, current
        current = following


def is_valid_contraction_sequence(
    g: LabeledGraph,
    sequence: ContractionSequence,
) -> bool:
    """Return True if the sequence replays on g and leaves only isolated roots."""
    current = g
    try:
        for step in sequence.steps:
            current = apply_contraction(current, step)
    except InvalidGraphError:
        return False
    survivors = set(g.vertices) - {step.contracted for step in sequence.steps}
    return current.edge_count == 0 and survivors == set(sequence.roots)
