"""Coordinates for the interior of a labeled path with fixed endpoints.

All placements here use diameter 2, and consecutive vertices are never more than 6
apart. With that gap bound, any endpoint pair at most 6 apart can be completed for a
path on four or more vertices, whatever its labels; three-vertex paths are only
guaranteed for endpoint gaps of 2, 3, 4 (two NEAR edges) and 6.
"""

import logging
import math
from collections.abc import Sequence
from fractions import Fraction

from weak_unit_balls.graphs.models import EdgeLabel

from .constants import PATH_DIAMETER
from .constants import PATH_MAX_GAP
from .exceptions import InfeasiblePairError
from .models import FeasiblePair

logger = logging.getLogger(__name__)

# Middle offset for a three-vertex path whose endpoints are 6 apart, by label pair.
_SIX_APART_MIDDLE = {
    (EdgeLabel.NEAR, EdgeLabel.FAR): 2,
    (EdgeLabel.FAR, EdgeLabel.FAR): 3,
    (EdgeLabel.FAR, EdgeLabel.NEAR): 4,
}


def step_fits(a: Fraction, b: Fraction, label: EdgeLabel) -> bool:
    """Return True if consecutive coordinates a, b satisfy ``label`` at d = 2.

    Args:
        a (Fraction): First coordinate.
        b (Fraction): Second coordinate.
        label (EdgeLabel): Label of the edge between them.

    Returns:
        bool: Whether the gap is at most 6 and NEAR exactly when it is at most 2.
    """
    gap = abs(a - b)
    return gap <= PATH_MAX_GAP and (gap <= PATH_DIAMETER) == (label is EdgeLabel.NEAR)


def three_vertex_middle(
    x: Fraction,
    y: Fraction,
    labels: Sequence[EdgeLabel],
) -> Fraction | None:
    """Place the middle of a three-vertex path by the closed-form rules.

    Endpoints 2 or 3 apart: the middle sits 2 from x after a NEAR edge and 3 after
    a FAR edge, on the side of y when the second edge is NEAR and on the other side
    when it is FAR. Endpoints 4 apart with two NEAR edges use the midpoint, and
    endpoints 6 apart use the offsets 2, 3 or 4 for the label pairs NF, FF and FN.

    Args:
        x (Fraction): Coordinate of the first vertex.
        y (Fraction): Coordinate of the last vertex.
        labels (Sequence[EdgeLabel]): The two edge labels.

    Returns:
        Fraction | None: The middle coordinate, or None if the pair is not covered.
    """
    first, second = labels
    x = Fraction(x)
    delta = Fraction(y) - x
    if delta == 0:
        return None
    sign = 1 if delta > 0 else -1
    gap = abs(delta)
    if gap in {2, 3}:
        magnitude = 2 if first is EdgeLabel.NEAR else 3
        side = sign if second is EdgeLabel.NEAR else -sign
        return x + side * magnitude
    if gap == 4 and first is second is EdgeLabel.NEAR:  # noqa: PLR2004
        return x + sign * 2
    if gap == PATH_MAX_GAP and (first, second) in _SIX_APART_MIDDLE:
        return x + sign * _SIX_APART_MIDDLE[first, second]
    return None


def grid_path(
    x: Fraction,
    y: Fraction,
    labels: Sequence[EdgeLabel],
) -> list[Fraction] | None:
    """Search integer interior coordinates by dynamic programming.

    Interior vertices range over the integers in [min(x, y) - 6, max(x, y) + 6].
    Layer by layer every reachable value keeps its smallest reachable predecessor,
    and the smallest value compatible with y closes the path.

    Args:
        x (Fraction): Coordinate of the first vertex.
        y (Fraction): Coordinate of the last vertex.
        labels (Sequence[EdgeLabel]): Labels of the path edges, in order.

    Returns:
        list[Fraction] | None: All coordinates from x to y, or None if the grid
            holds no solution.
    """
    x, y = Fraction(x), Fraction(y)
    low = math.floor(min(x, y)) - PATH_MAX_GAP
    high = math.ceil(max(x, y)) + PATH_MAX_GAP
    grid = [Fraction(value) for value in range(low, high + 1)]
    layers: list[dict[Fraction, Fraction]] = []
    previous = [x]
    for label in labels[:-1]:
        layer: dict[Fraction, Fraction] = {}
        for value in grid:
            fitting = [p for p in previous if step_fits(p, value, label)]
            if fitting:
                layer[value] = min(fitting)
        if not layer:
            return None
        layers.append(layer)
        previous = list(layer)
    closing = [v for v in previous if step_fits(v, y, labels[-1])]
    if not closing:
        return None
    path = [y]
    value = min(closing)
    for layer in reversed(layers):
        path.append(value)
        value = layer[value]
    path.append(value)
    path.reverse()
    return path


def assign_path(
    x: Fraction,
    y: Fraction,
    labels: Sequence[EdgeLabel],
) -> list[Fraction]:
    """Return coordinates for a labeled path whose endpoints sit at x and y.

    Args:
        x (Fraction): Coordinate of the first vertex.
        y (Fraction): Coordinate of the last vertex.
        labels (Sequence[EdgeLabel]): Labels of the n - 1 path edges, n >= 3.

    Returns:
        list[Fraction]: The n coordinates, starting with x and ending with y.

    Raises:
        ValueError: If the path has fewer than three vertices.
        InfeasiblePairError: If the endpoints are outside the guaranteed range.
    """
    x, y = Fraction(x), Fraction(y)
    pair = FeasiblePair(x, y, len(labels) + 1)
    if pair.path_length < 3:  # noqa: PLR2004
        msg = f"A path needs at least 3 vertices, got {pair.path_length}"
        raise ValueError(msg)
    if pair.path_length == 3:  # noqa: PLR2004
        middle = three_vertex_middle(x, y, labels)
        if middle is None:
            msg = (
                f"Endpoints {x} and {y} with labels {''.join(labels)} are not a "
                "guaranteed three-vertex pair"
            )
            raise InfeasiblePairError(msg)
        return [x, middle, y]
    if pair.gap > PATH_MAX_GAP:
        msg = f"Endpoints {x} and {y} are more than {PATH_MAX_GAP} apart"
        raise InfeasiblePairError(msg)
    path = grid_path(x, y, labels)
    if path is None:
        msg = f"No integer placement between {x} and {y} for {''.join(labels)}"
        raise InfeasiblePairError(msg)
    logger.debug("Placed a %d-vertex path between %s and %s", pair.path_length, x, y)
    return path
