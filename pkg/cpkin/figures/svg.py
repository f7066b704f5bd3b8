"""
Minimal static SVG output for plane figures

Shapes are plain named tuples; :py:func:`render` turns each into an SVG
element. The y axis points up in figure coordinates and is flipped on output.
"""

from functools import singledispatch
from typing import Iterable, List, NamedTuple, Sequence, Tuple
from xml.sax.saxutils import escape
import json

from .. import __version__
from ..typing import Planar


PREAMBLE = """\
<?xml version="1.0" encoding="UTF-8" standalone="no"?>
<!-- cpkin {version} -->
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" \
width="{width}" height="{height}" \
viewBox="{min_x:.6f} {min_y:.6f} {span_x:.6f} {span_y:.6f}">
<title>{title}</title>
<metadata>{metadata}</metadata>
<rect x="{min_x:.6f}" y="{min_y:.6f}" width="{span_x:.6f}" height="{span_y:.6f}" \
style="fill:#ffffff"/>
"""

POSTAMBLE = "</svg>\n"

#: size of the longer side of the figure in pixels
FIGURE_SIZE = 600


class Polyline(NamedTuple):
    points: Tuple[Planar, ...]
    color: str = "#000000"
    dashed: bool = False


class Segment(NamedTuple):
    start: Planar
    end: Planar
    color: str = "#666666"
    dashed: bool = False


class Marker(NamedTuple):
    point: Planar
    label: str = ""
    color: str = "#000000"


def _xy(point: Planar) -> str:
    return f"{point.x:.6f},{-point.y:.6f}"


def _stroke(color: str, dashed: bool, unit: float) -> str:
    style = f"fill:none;stroke:{color};stroke-width:{unit:.6f}"
    if dashed:
        style += f";stroke-dasharray:{4 * unit:.6f},{3 * unit:.6f}"
    return style


@singledispatch
def render(shape, unit: float) -> str:
    """Format a `shape` as an SVG element, with line width `unit`"""
    raise NotImplementedError(f"Cannot render {shape!r} as svg")


@render.register(Polyline)
def render_polyline(shape: Polyline, unit: float) -> str:
    points = " ".join(map(_xy, shape.points))
    return (
        f'<polyline points="{points}"'
        f' style="{_stroke(shape.color, shape.dashed, unit)}"/>'
    )


@render.register(Segment)
def render_segment(shape: Segment, unit: float) -> str:
    return (
        f'<line x1="{shape.start.x:.6f}" y1="{-shape.start.y:.6f}"'
        f' x2="{shape.end.x:.6f}" y2="{-shape.end.y:.6f}"'
        f' style="{_stroke(shape.color, shape.dashed, unit)}"/>'
    )


@render.register(Marker)
def render_marker(shape: Marker, unit: float) -> str:
    x, y = shape.point.x, -shape.point.y
    circle = (
        f'<circle cx="{x:.6f}" cy="{y:.6f}" r="{2 * unit:.6f}"'
        f' style="fill:{shape.color}"/>'
    )
    if not shape.label:
        return circle
    return circle + (
        f'<text x="{x + 3 * unit:.6f}" y="{y - 3 * unit:.6f}"'
        f' font-size="{12 * unit:.6f}" font-family="sans-serif">'
        f"{escape(shape.label)}</text>"
    )


def _points(shape) -> Iterable[Planar]:
    if isinstance(shape, Polyline):
        return shape.points
    elif isinstance(shape, Segment):
        return shape.start, shape.end
    return (shape.point,)


class Figure:
    """A collection of shapes with a title and JSON metadata"""

    def __init__(self, title: str, metadata: dict = None):
        self.title = title
        self.metadata = dict(metadata or {})
        self.shapes: List = []

    def add(self, *shapes) -> "Figure":
        self.shapes.extend(shapes)
        return self

    def bounds(self) -> Tuple[float, float, float, float]:
        points: Sequence[Planar] = [
            point for shape in self.shapes for point in _points(shape)
        ]
        if not points:
            return -1.0, -1.0, 1.0, 1.0
        xs = [point.x for point in points]
        ys = [point.y for point in points]
        return min(xs), min(ys), max(xs), max(ys)

    def svg(self) -> str:
        """Render the figure, scaled to its bounding box plus a 10% margin"""
        low_x, low_y, high_x, high_y = self.bounds()
        pad = max(high_x - low_x, high_y - low_y, 1e-9) * 0.1
        span_x, span_y = high_x - low_x + 2 * pad, high_y - low_y + 2 * pad
        unit = max(span_x, span_y) / FIGURE_SIZE
        header = PREAMBLE.format(
            version=__version__,
            width=round(span_x / unit),
            height=round(span_y / unit),
            min_x=low_x - pad,
            min_y=-high_y - pad,
            span_x=span_x,
            span_y=span_y,
            title=escape(self.title),
            metadata=escape(json.dumps(self.metadata, sort_keys=True)),
        )
        body = "".join(render(shape, unit) + "\n" for shape in self.shapes)
        return header + body + POSTAMBLE
