"""Structural queries: girth, maximum average degree and the density bound."""

import enum

from weak_unit_balls._compat import StrEnum
import itertools
import logging
import math
from fractions import Fraction

import networkx as nx

from .constants import MAD_BRUTE_FORCE_VERTEX_LIMIT
from .models import LabeledGraph

logger = logging.getLogger(__name__)


class DensityVerdict(StrEnum):
    """Outcome of density_certificate."""

    WITHIN_BOUND = "within_bound"
    EXCEEDS_BOUND = "exceeds_bound"


def girth(g: LabeledGraph) -> int | float:
    """Return the length of a shortest cycle, or ``math.inf`` for a forest.

    Args:
        g (LabeledGraph): The graph; labels are ignored.

    Returns:
        int | float: The girth.
    """
    value = nx.girth(g.to_networkx())
    return value if math.isinf(value) else int(value)


def girth_mad_bound(girth_value: float) -> Fraction:
    """Return 2g/(g-2), the strict upper bound on mad for planar graphs of girth g.

    Acyclic graphs (infinite girth) have mad below 2.

    Args:
        girth_value (float): The girth, at least 3.

    Returns:
        Fraction: The bound.

    Raises:
        ValueError: If the girth is below 3.
    """
    if math.isinf(girth_value):
        return Fraction(2)
    g = int(girth_value)
    if g < 3:  # noqa: PLR2004
        msg = f"Girth must be at least 3, got {g}"
        raise ValueError(msg)
    return Fraction(2 * g, g - 2)


def density_bound(vertex_count: int) -> int:
    """Return floor(11n/4) - 6, the edge bound of planar weak unit interval graphs."""
    return (11 * vertex_count) // 4 - 6


def density_certificate(g: LabeledGraph) -> DensityVerdict:
    """Check the edge count of a planar graph against floor(11|V|/4) - 6.

    A planar graph with more edges has some labeling without a weak unit interval
    representation. Planarity is the caller's responsibility. Graphs with fewer than
    three vertices are always within the bound.

    Args:
        g (LabeledGraph): A planar graph.

    Returns:
        DensityVerdict: EXCEEDS_BOUND iff |E| > floor(11|V|/4) - 6.
    """
    if g.vertex_count < 3:  # noqa: PLR2004
        return DensityVerdict.WITHIN_BOUND
    if g.edge_count > density_bound(g.vertex_count):
        return DensityVerdict.EXCEEDS_BOUND
    return DensityVerdict.WITHIN_BOUND


def mad_brute_force(g: LabeledGraph) -> Fraction:
    """Return mad(g) by enumerating every non-empty vertex subset.

    The densest subgraph on a vertex subset is the induced one, so enumerating
    subsets is enough.

    Args:
        g (LabeledGraph): A graph with at least one vertex.

    Returns:
        Fraction: The maximum average degree.

    Raises:
        ValueError: If the graph has no vertices.
    """
    if g.vertex_count == 0:
        msg = "mad is undefined for the empty graph"
        raise ValueError(msg)
    best = Fraction(0)
    for size in range(1, g.vertex_count + 1):
        for subset in itertools.combinations(g.vertices, size):
            chosen = set(subset)
            inner = sum(1 for u, v in g.pairs() if u in chosen and v in chosen)
            best = max(best, Fraction(2 * inner, size))
    return best


def _denser_than(g: LabeledGraph, threshold: Fraction) -> bool:
    """Return True if some subgraph has |E(H)|/|V(H)| > threshold.

    Closure formulation: choosing an edge forces its endpoints, edges earn q and
    vertices cost p, so a positive closure exists iff q*m - mincut > 0.
    """
    p, q = threshold.numerator, threshold.denominator
    network = nx.DiGraph()
    source, sink = ("source",), ("sink",)
    network.add_node(source)
    network.add_node(sink)
    for u, v in g.pairs():
        edge_node = ("edge", u, v)
        network.add_edge(source, edge_node, capacity=q)
        # No capacity attribute means infinite capacity.
        network.add_edge(edge_node, ("vertex", u))
        network.add_edge(edge_node, ("vertex", v))
    for v in g.vertices:
        network.add_edge(("vertex", v), sink, capacity=p)
    cut = nx.minimum_cut_value(network, source, sink)
    return q * g.edge_count - cut > 0


def mad(g: LabeledGraph) -> Fraction:
    """Return the maximum average degree of g exactly.

    Small graphs are enumerated directly. Larger ones binary search the finite set of
    candidate densities e/k with a min-cut test for "some subgraph is denser".

    Args:
        g (LabeledGraph): A graph with at least one vertex.

    Returns:
        Fraction: max over subgraphs H of 2|E(H)|/|V(H)|.
    """
    if g.vertex_count < MAD_BRUTE_FORCE_VERTEX_LIMIT:
        return mad_brute_force(g)
    candidates = sorted(
        {
            Fraction(e, k)
            for k in range(1, g.vertex_count + 1)
            for e in range(g.edge_count + 1)
        },
    )
    # The densest density is the first candidate nothing beats.
    lo, hi = 0, len(candidates) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if _denser_than(g, candidates[mid]):
            lo = mid + 1
        else:
            hi = mid
    logger.debug("mad search settled on density %s", candidates[lo])
    return 2 * candidates[lo]
