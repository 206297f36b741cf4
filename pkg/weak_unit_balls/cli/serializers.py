"""JSON documents for representations, colorings, decompositions and scenes.

Every document carries a "kind" field. Rationals are written as "p/q" strings and
vertex ids as object keys, and keys are sorted, so equal objects serialize to equal
text.
"""

import json
from fractions import Fraction
from typing import Any

from typeguard import CollectionCheckStrategy
from typeguard import TypeCheckError
from typeguard import check_type

from weak_unit_balls.cubes.models import CubeScene
from weak_unit_balls.cubes.models import SquareContactRep
from weak_unit_balls.disks.models import DiskRep
from weak_unit_balls.graphs.exceptions import WeakRepError
from weak_unit_balls.intervals.models import Decomposition
from weak_unit_balls.intervals.models import IntervalRep
from weak_unit_balls.intervals.models import IPair
from weak_unit_balls.intervals.models import ThresholdColoring

from .constants import KIND_COLORING
from .constants import KIND_CUBES
from .constants import KIND_DECOMPOSITION
from .constants import KIND_DISK
from .constants import KIND_INTERVAL
from .constants import KIND_SQUARES
from .exceptions import PayloadError

Document = (
    IntervalRep
    | ThresholdColoring
    | DiskRep
    | Decomposition
    | SquareContactRep
    | CubeScene
)


def format_rational(x: Fraction) -> str:
    """Return x as "p/q", or "p" when x is an integer."""
    return str(Fraction(x))


def _rationals(values: tuple[Fraction, ...]) -> list[str]:
    return [format_rational(x) for x in values]


def to_payload(obj: Document) -> dict[str, Any]:
    """Return the JSON-ready dictionary for ``obj``.

    Args:
        obj (Document): Any supported domain object.

    Returns:
        dict[str, Any]: The payload, with a "kind" field.

    Raises:
        TypeError: If ``obj`` has no JSON form.
    """
    match obj:
        case IntervalRep():
            return {
                "kind": KIND_INTERVAL,
                "diameter": format_rational(obj.diameter),
                "coords": {str(v): format_rational(x) for v, x in obj.coords.items()},
            }
        case ThresholdColoring():
            return {
                "kind": KIND_COLORING,
                "color_range": obj.color_range,
                "threshold": obj.threshold,
                "colors": {str(v): c for v, c in obj.colors.items()},
            }
        case DiskRep():
            return {
                "kind": KIND_DISK,
                "diameter": obj.diameter,
                "points": {str(v): list(p) for v, p in obj.points.items()},
            }
        case Decomposition():
            return {
                "kind": KIND_DECOMPOSITION,
                "iset": sorted(obj.iset),
                "fset": sorted(obj.fset),
                "ipairs": [[p.u, p.v, p.middle] for p in obj.ipairs],
            }
        case SquareContactRep():
            return {
                "kind": KIND_SQUARES,
                "side": format_rational(obj.side),
                "centers": {str(v): _rationals(c) for v, c in obj.centers.items()},
            }
        case CubeScene():
            return {
                "kind": KIND_CUBES,
                "side": format_rational(obj.side),
                "corners": {str(v): _rationals(c) for v, c in obj.corners.items()},
            }
    msg = f"No JSON form for {type(obj).__name__}"
    raise TypeError(msg)


def dumps(obj: Document) -> str:
    """Return the JSON text of ``obj`` with sorted keys and a trailing newline."""
    return json.dumps(to_payload(obj), sort_keys=True, indent=2) + "\n"


def _get(payload: dict[str, Any], key: str, expected: Any) -> Any:  # noqa: ANN401
    if key not in payload:
        msg = "missing"
        raise PayloadError(msg, key)
    return _checked(payload[key], expected, key)


def _checked(value: object, expected: Any, field: str) -> Any:  # noqa: ANN401
    try:
        return check_type(
            value,
            expected,
            collection_check_strategy=CollectionCheckStrategy.ALL_ITEMS,
        )
    except TypeCheckError as err:
        raise PayloadError(str(err), field) from err


def _vertex(key: str, field: str) -> int:
    try:
        return int(key)
    except ValueError as err:
        msg = f"vertex id must be an integer, got {key!r}"
        raise PayloadError(msg, field) from err


def _rational(value: str, field: str) -> Fraction:
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as err:
        msg = f"expected a rational 'p/q', got {value!r}"
        raise PayloadError(msg, field) from err


def _rational_map(
    payload: dict[str, Any],
    key: str,
    size: int,
) -> dict[int, tuple[Fraction, ...]]:
    entries = _get(payload, key, dict[str, list[str]])
    result = {}
    for name, values in entries.items():
        field = f"{key}.{name}"
        if len(values) != size:
            msg = f"expected {size} coordinates, got {len(values)}"
            raise PayloadError(msg, field)
        result[_vertex(name, field)] = tuple(_rational(x, field) for x in values)
    return result


def _parse_interval(payload: dict[str, Any]) -> IntervalRep:
    coords = {
        _vertex(name, f"coords.{name}"): _rational(x, f"coords.{name}")
        for name, x in _get(payload, "coords", dict[str, str]).items()
    }
    diameter = _rational(_get(payload, "diameter", str), "diameter")
    return IntervalRep(coords, diameter)


def _parse_coloring(payload: dict[str, Any]) -> ThresholdColoring:
    colors = {
        _vertex(name, f"colors.{name}"): c
        for name, c in _get(payload, "colors", dict[str, int]).items()
    }
    return ThresholdColoring(
        colors,
        color_range=_get(payload, "color_range", int),
        threshold=_get(payload, "threshold", int),
    )


def _parse_disk(payload: dict[str, Any]) -> DiskRep:
    points = {}
    for name, point in _get(payload, "points", dict[str, list[int]]).items():
        field = f"points.{name}"
        if len(point) != 2:  # noqa: PLR2004
            msg = f"expected 2 coordinates, got {len(point)}"
            raise PayloadError(msg, field)
        points[_vertex(name, field)] = (point[0], point[1])
    return DiskRep(points, _get(payload, "diameter", int))


def _parse_decomposition(payload: dict[str, Any]) -> Decomposition:
    ipairs = []
    for index, triple in enumerate(_get(payload, "ipairs", list[list[int]])):
        if len(triple) != 3:  # noqa: PLR2004
            msg = f"expected [u, v, middle], got {triple}"
            raise PayloadError(msg, f"ipairs.{index}")
        ipairs.append(IPair(*triple))
    return Decomposition(
        frozenset(_get(payload, "iset", list[int])),
        frozenset(_get(payload, "fset", list[int])),
        tuple(ipairs),
    )


def _parse_squares(payload: dict[str, Any]) -> SquareContactRep:
    centers = _rational_map(payload, "centers", 2)
    side = _rational(_get(payload, "side", str), "side")
    return SquareContactRep(centers, side)  # type: ignore[arg-type]


def _parse_cubes(payload: dict[str, Any]) -> CubeScene:
    corners = _rational_map(payload, "corners", 3)
    side = _rational(_get(payload, "side", str), "side")
    return CubeScene(corners, side)  # type: ignore[arg-type]


_PARSERS = {
    KIND_INTERVAL: _parse_interval,
    KIND_COLORING: _parse_coloring,
    KIND_DISK: _parse_disk,
    KIND_DECOMPOSITION: _parse_decomposition,
    KIND_SQUARES: _parse_squares,
    KIND_CUBES: _parse_cubes,
}


def from_payload(payload: object) -> Document:
    """Build the domain object described by a decoded JSON document.

    Args:
        payload (object): The decoded document.

    Returns:
        Document: The object named by the "kind" field.

    Raises:
        PayloadError: If a field is missing, has the wrong type or holds an
            invalid value.
    """
    document = _checked(payload, dict[str, Any], "$")
    kind = _get(document, "kind", str)
    if kind not in _PARSERS:
        msg = f"unknown kind {kind!r}, expected one of {sorted(_PARSERS)}"
        raise PayloadError(msg, "kind")
    try:
        return _PARSERS[kind](document)
    except PayloadError:
        raise
    except (WeakRepError, ValueError) as err:
        raise PayloadError(str(err), kind) from err


def loads(text: str) -> Document:
    """Parse JSON text into a domain object.

    Args:
        text (str): The JSON document.

    Returns:
        Document: The object.

    Raises:
        PayloadError: If the text is not JSON or does not describe an object.
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as err:
        msg = f"invalid JSON at line {err.lineno}, column {err.colno}: {err.msg}"
        raise PayloadError(msg) from err
    return from_payload(payload)
