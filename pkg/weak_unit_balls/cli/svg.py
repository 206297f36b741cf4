"""SVG drawings of verified interval and disk representations using drawsvg.

NEAR edges are drawn as thick solid segments and FAR edges as thin dashed ones,
between the centers of the two vertices.
"""

import logging
from fractions import Fraction

import drawsvg as draw

from weak_unit_balls.disks.construct import verify_disk
from weak_unit_balls.disks.models import DiskRep
from weak_unit_balls.graphs.models import EdgeLabel
from weak_unit_balls.graphs.models import LabeledGraph
from weak_unit_balls.intervals.models import IntervalRep
from weak_unit_balls.intervals.solver import verify_interval

from .constants import FAR_DASH
from .constants import FAR_STROKE_WIDTH
from .constants import NEAR_STROKE_WIDTH
from .constants import SVG_MARGIN
from .constants import SVG_ROW_SPACING
from .constants import SVG_SCALE
from .exceptions import UnverifiedRepresentationError

logger = logging.getLogger(__name__)

VERTEX_STROKE = "#1e293b"
VERTEX_FILL = "#bfdbfe"
EDGE_COLOR = "#64748b"
FONT_SIZE = 12

Centers = dict[int, tuple[Fraction, Fraction]]


def _centers(rep: IntervalRep | DiskRep) -> Centers:
    if isinstance(rep, DiskRep):
        return {v: (Fraction(x), Fraction(-y)) for v, (x, y) in rep.points.items()}
    return {
        v: (x, Fraction(row * SVG_ROW_SPACING))
        for row, (v, x) in enumerate(rep.coords.items())
    }


def _canvas(centers: Centers, radius: Fraction) -> draw.Drawing:
    if not centers:
        return draw.Drawing(2 * SVG_MARGIN, 2 * SVG_MARGIN)
    xs = [x for x, _y in centers.values()]
    ys = [y for _x, y in centers.values()]
    left = (min(xs) - radius) * SVG_SCALE - SVG_MARGIN
    top = (min(ys) - radius) * SVG_SCALE - SVG_MARGIN
    width = (max(xs) - min(xs) + 2 * radius) * SVG_SCALE + 2 * SVG_MARGIN
    height = (max(ys) - min(ys) + 2 * radius) * SVG_SCALE + 2 * SVG_MARGIN
    return draw.Drawing(
        float(width),
        float(height),
        origin=(float(left), float(top)),
    )


def _pixel(point: tuple[Fraction, Fraction]) -> tuple[float, float]:
    return float(point[0] * SVG_SCALE), float(point[1] * SVG_SCALE)


def _draw_edges(drawing: draw.Drawing, g: LabeledGraph, centers: Centers) -> None:
    for u, v, label in g.edges:
        (x1, y1), (x2, y2) = _pixel(centers[u]), _pixel(centers[v])
        if label is EdgeLabel.NEAR:
            line = draw.Line(
                x1,
                y1,
                x2,
                y2,
                stroke=EDGE_COLOR,
                stroke_width=NEAR_STROKE_WIDTH,
            )
        else:
            line = draw.Line(
                x1,
                y1,
                x2,
                y2,
                stroke=EDGE_COLOR,
                stroke_width=FAR_STROKE_WIDTH,
                stroke_dasharray=FAR_DASH,
            )
        drawing.append(line)


def _draw_vertices(
    drawing: draw.Drawing,
    rep: IntervalRep | DiskRep,
    centers: Centers,
) -> None:
    radius = Fraction(rep.diameter, 2) * SVG_SCALE
    for v, center in centers.items():
        x, y = _pixel(center)
        if isinstance(rep, DiskRep):
            drawing.append(
                draw.Circle(
                    x,
                    y,
                    float(radius),
                    fill=VERTEX_FILL,
                    fill_opacity=0.5,
                    stroke=VERTEX_STROKE,
                ),
            )
        else:
            drawing.append(
                draw.Line(
                    x - float(radius),
                    y,
                    x + float(radius),
                    y,
                    stroke=VERTEX_STROKE,
                    stroke_width=NEAR_STROKE_WIDTH,
                ),
            )
        drawing.append(
            draw.Text(
                str(v),
                FONT_SIZE,
                x,
                y,
                text_anchor="middle",
                fill=VERTEX_STROKE,
            ),
        )


def render_svg(g: LabeledGraph, rep: IntervalRep | DiskRep) -> str:
    """Draw a representation of g after checking that it verifies.

    Disks become circles of radius d/2. Intervals become horizontal segments of
    length d, one row per vertex.

    Args:
        g (LabeledGraph): The labeled graph.
        rep (IntervalRep | DiskRep): Its representation.

    Returns:
        str: The SVG document, identical for identical inputs.

    Raises:
        UnverifiedRepresentationError: If rep does not represent g.
    """
    if isinstance(rep, DiskRep):
        result = verify_disk(g, rep)
    else:
        result = verify_interval(g, rep)
    if not result:
        msg = f"Refusing to draw: edges {list(result.violations)} are violated"
        raise UnverifiedRepresentationError(msg)
    centers = _centers(rep)
    drawing = _canvas(centers, Fraction(rep.diameter, 2))
    _draw_edges(drawing, g, centers)
    _draw_vertices(drawing, rep, centers)
    logger.debug("Drew %d vertices and %d edges", len(centers), g.edge_count)
    return drawing.as_svg()
