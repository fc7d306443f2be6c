"""SVG 1.1 figures of a quadrilateral with its diagonals, circumcircle and an inscribed ellipse.

Elements carry a ``class`` naming their role so figures can be checked
mechanically: ``side`` (4 lines), ``diagonal`` (2 lines), ``circumcircle``,
``ellipse`` (a path) and ``marker`` (one small circle per labelled point).
The y-axis is flipped so the picture has the usual mathematical orientation.
"""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET
from typing import Mapping, Sequence

from .conic import Conic, geometry
from .quad import Point

SVG_NS = "http://www.w3.org/2000/svg"

STYLE = """
.side { stroke: #222; }
.diagonal { stroke: #888; }
.circumcircle { fill: none; stroke: #1f77b4; }
.ellipse { fill: none; stroke: #d62728; }
.marker { fill: #2ca02c; stroke: none; }
.label { font-family: sans-serif; fill: #2ca02c; }
"""


def _f(x: float) -> str:
    text = f"{x:.6f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def _flip(p: Point) -> tuple[float, float]:
    return p.x, -p.y


def ellipse_path(conic: Conic) -> str:
    """Closed path of two elliptical arcs, in flipped coordinates."""
    g = geometry(conic)
    cx, cy = _flip(g.center)
    theta = -g.rotation
    ux, uy = math.cos(theta) * g.a, math.sin(theta) * g.a
    angle = math.degrees(theta)
    start = (cx + ux, cy + uy)
    end = (cx - ux, cy - uy)
    arc = f"A {_f(g.a)} {_f(g.b)} {_f(angle)} 1 1"
    return (
        f"M {_f(start[0])} {_f(start[1])} {arc} {_f(end[0])} {_f(end[1])} "
        f"{arc} {_f(start[0])} {_f(start[1])} Z"
    )


def render(
    vertices: Sequence[Point],
    ellipse: Conic | None = None,
    circle: tuple[Point, float] | None = None,
    markers: Mapping[str, Point] | None = None,
    title: str | None = None,
) -> str:
    markers = dict(markers or {})
    if circle is not None:
        c, rad = circle
        lo_x, hi_x, lo_y, hi_y = c.x - rad, c.x + rad, c.y - rad, c.y + rad
    else:
        lo_x, hi_x = min(p.x for p in vertices), max(p.x for p in vertices)
        lo_y, hi_y = min(p.y for p in vertices), max(p.y for p in vertices)
    size = max(hi_x - lo_x, hi_y - lo_y)
    pad = 0.1 * size
    view = (lo_x - pad, -hi_y - pad, hi_x - lo_x + 2 * pad, hi_y - lo_y + 2 * pad)
    unit = size / 200.0

    root = ET.Element(
        "svg",
        {
            "xmlns": SVG_NS,
            "version": "1.1",
            "width": "600",
            "height": _f(600 * view[3] / view[2]),
            "viewBox": " ".join(_f(x) for x in view),
        },
    )
    if title:
        ET.SubElement(root, "title").text = title
    ET.SubElement(root, "style").text = STYLE
    group = ET.SubElement(root, "g")

    def line(a: Point, b: Point, cls: str) -> None:
        (x1, y1), (x2, y2) = _flip(a), _flip(b)
        attrs = {"class": cls, "x1": _f(x1), "y1": _f(y1), "x2": _f(x2), "y2": _f(y2),
                 "stroke-width": _f(unit)}
        if cls == "diagonal":
            attrs["stroke-dasharray"] = f"{_f(4 * unit)} {_f(3 * unit)}"
        ET.SubElement(group, "line", attrs)

    for i in range(4):
        line(vertices[i], vertices[(i + 1) % 4], "side")
    line(vertices[0], vertices[2], "diagonal")
    line(vertices[1], vertices[3], "diagonal")
    if circle is not None:
        cx, cy = _flip(circle[0])
        ET.SubElement(
            group,
            "circle",
            {"class": "circumcircle", "cx": _f(cx), "cy": _f(cy), "r": _f(circle[1]),
             "stroke-width": _f(unit)},
        )
    if ellipse is not None:
        ET.SubElement(group, "path", {"class": "ellipse", "d": ellipse_path(ellipse),
                                      "stroke-width": _f(1.5 * unit)})
    for label, p in markers.items():
        x, y = _flip(p)
        ET.SubElement(group, "circle", {"class": "marker", "cx": _f(x), "cy": _f(y),
                                        "r": _f(2.5 * unit), "data-label": label})
        text = ET.SubElement(group, "text", {"class": "label", "x": _f(x + 3 * unit),
                                             "y": _f(y - 3 * unit), "font-size": _f(10 * unit)})
        text.text = label
    ET.indent(root)
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(root, encoding="unicode") + "\n"
