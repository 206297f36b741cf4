"""Brute-force lattice search for weak unit disk representations."""

import itertools
import logging

import networkx as nx

from weak_unit_balls.graphs.models import LabeledGraph
from weak_unit_balls.graphs.utils import WORK_BOUND_BITS
from weak_unit_balls.graphs.utils import ensure_within_work_bound
from weak_unit_balls.graphs.utils import search_space_bits

from .constants import DEFAULT_GRID_RADIUS
from .constants import DISK_DIAMETER
from .models import DiskRep
from .models import Point
from .table import satisfies

logger = logging.getLogger(__name__)


def _root_positions(grid_radius: int) -> list[Point]:
    """Return the box points with 0 <= y <= x, nearest to the origin first.

    The box and every distance are invariant under the symmetries of the square, so
    some witness of a component always has its root in this wedge.
    """
    wedge = [(x, y) for x in range(grid_radius + 1) for y in range(x + 1)]
    return sorted(wedge, key=lambda p: (p[0] * p[0] + p[1] * p[1], p))


def grid_disk_oracle(
    g: LabeledGraph,
    grid_radius: int = DEFAULT_GRID_RADIUS,
    *,
    diameter: int = DISK_DIAMETER,
    work_bound: int = WORK_BOUND_BITS,
) -> DiskRep | None:
    """Search lattice points in [-r, r]^2 for a disk representation.

    Components are searched one at a time. The first vertex of each one tries the
    box points with 0 <= y <= x, the origin first. Only SAT is definitive: None
    means nothing was found in the box.

    Args:
        g (LabeledGraph): The labeled graph.
        grid_radius (int): The box half-width r, at least 1.
        diameter (int): The disk diameter.
        work_bound (int): Largest permitted search space in bits.

    Returns:
        DiskRep | None: A witness, or None (unknown, possibly UNSAT).

    Raises:
        ValueError: If grid_radius < 1.
    """
    if grid_radius < 1:
        msg = f"grid_radius must be at least 1, got {grid_radius}"
        raise ValueError(msg)
    side = 2 * grid_radius + 1
    ensure_within_work_bound(
        search_space_bits(g.vertex_count, side * side),
        f"grid disk oracle on {g.vertex_count} vertices with radius {grid_radius}",
        work_bound=work_bound,
    )
    box = list(itertools.product(range(-grid_radius, grid_radius + 1), repeat=2))
    roots = _root_positions(grid_radius)
    graph = g.to_networkx()
    points: dict[int, Point] = {}

    def fits(v: int, p: Point) -> bool:
        return all(
            satisfies(p, points[w], g.label(v, w), diameter)
            for w in g.neighbors(v)
            if w in points
        )

    def extend(order: list[int], index: int) -> bool:
        if index == len(order):
            return True
        v = order[index]
        for p in roots if index == 0 else box:
            if fits(v, p):
                points[v] = p
                if extend(order, index + 1):
                    return True
                del points[v]
        return False

    for component in sorted(nx.connected_components(graph), key=min):
        root = min(component)
        order = [root]
        order.extend(v for _u, v in nx.bfs_edges(graph, root, sort_neighbors=sorted))
        if not extend(order, 0):
            logger.debug(
                "No lattice placement of the component of %d within radius %d",
                root,
                grid_radius,
            )
            return None
    return DiskRep(dict(points), diameter)
