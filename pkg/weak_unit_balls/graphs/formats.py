"""Plain text format for labeled graphs.

The first line is "n m"; each of the following m lines is "u v L" with L one of N
or F. Blank lines and lines starting with "#" are ignored. Serialization lists the
edges in sorted order, so identical graphs produce identical text.
"""

from .constants import FAR_SYMBOL
from .constants import NEAR_SYMBOL
from .exceptions import GraphFormatError
from .exceptions import InvalidGraphError
from .models import EdgeLabel
from .models import LabeledGraph
from .models import canonical_edge

_LABELS = {NEAR_SYMBOL: EdgeLabel.NEAR, FAR_SYMBOL: EdgeLabel.FAR}


def _parse_int(token: str, what: str, line_number: int) -> int:
    try:
        return int(token)
    except ValueError as err:
        msg = f"{what} must be an integer, got {token!r}"
        raise GraphFormatError(msg, line_number) from err


def parse_graph(text: str) -> LabeledGraph:
    """Parse graph text.

    Args:
        text (str): The text.

    Returns:
        LabeledGraph: The graph.

    Raises:
        GraphFormatError: With the 1-based line number of the first problem.
    """
    lines = [
        (number, line.split())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        msg = "missing header line 'n m'"
        raise GraphFormatError(msg, 1)
    header_number, header = lines[0]
    if len(header) != 2:  # noqa: PLR2004
        msg = f"header must be 'n m', got {' '.join(header)!r}"
        raise GraphFormatError(msg, header_number)
    n = _parse_int(header[0], "vertex count", header_number)
    m = _parse_int(header[1], "edge count", header_number)
    body = lines[1:]
    if len(body) != m:
        last_line = body[-1][0] if body else header_number
        msg = f"header announces {m} edges but {len(body)} edge lines follow"
        raise GraphFormatError(msg, last_line)
    if n < 0:
        msg = f"vertex count must be non-negative, got {n}"
        raise GraphFormatError(msg, header_number)
    edges: list[tuple[int, int, EdgeLabel]] = []
    seen: set[tuple[int, int]] = set()
    for number, tokens in body:
        if len(tokens) != 3:  # noqa: PLR2004
            msg = f"edge line must be 'u v L', got {' '.join(tokens)!r}"
            raise GraphFormatError(msg, number)
        u = _parse_int(tokens[0], "endpoint", number)
        v = _parse_int(tokens[1], "endpoint", number)
        if tokens[2] not in _LABELS:
            msg = f"label must be N or F, got {tokens[2]!r}"
            raise GraphFormatError(msg, number)
        edge = (u, v, _LABELS[tokens[2]])
        try:
            LabeledGraph(n, (edge,))
        except InvalidGraphError as err:
            raise GraphFormatError(str(err), number) from err
        key = canonical_edge(u, v)
        if key in seen:
            msg = f"Parallel edge {key}"
            raise GraphFormatError(msg, number)
        seen.add(key)
        edges.append(edge)
    return LabeledGraph(n, tuple(edges))


def serialize_graph(g: LabeledGraph) -> str:
    """Return the text form of g, edges sorted, with a trailing newline."""
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v} {label.value}" for u, v, label in g.edges)
    return "\n".join(lines) + "\n"
