"""Static SVG figures for triangulations and decomposition certificates.

Rendering is the only place floating point appears in the package, and only
to place marks on the page; every geometric decision has already been made
exactly.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET

from .decompose import Decomposition
from .triangulation import Triangulation

UNIT = 40  # pixels per lattice unit
MARGIN = 1  # lattice units of padding around the bounding box

_GRID = "#c8c8c8"
_TRIANGLE_FILL = "#eef4fb"
_TRIANGLE_EDGE = "#7a9cc4"
_OUTLINE = "#1f3a5f"
_HIGHLIGHT = "#ffd28a"
_MARK = "#c22f2f"


def _points_attr(pairs) -> str:
    return " ".join(f"{x:g},{y:g}" for x, y in pairs)


def emit_svg(triangulation: Triangulation, decomposition: Decomposition | None = None, path=None) -> str:
    """Write an SVG of the triangulated polygon, optionally highlighting a certificate.

    With a decomposition given, its triangle is shaded and the decomposed
    point is marked at w/h inside the polygon.  Returns the path written.
    """
    P = triangulation.polygon
    xmin, ymin, xmax, ymax = P.bounding_box()
    xmin -= MARGIN
    ymin -= MARGIN
    xmax += MARGIN
    ymax += MARGIN
    width = (xmax - xmin) * UNIT
    height = (ymax - ymin) * UNIT

    def fx(x) -> float:
        return (x - xmin) * UNIT

    def fy(y) -> float:
        return (ymax - y) * UNIT

    root = ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        width=f"{width}",
        height=f"{height}",
        viewBox=f"0 0 {width} {height}",
    )
    ET.SubElement(root, "rect", x="0", y="0", width=f"{width}", height=f"{height}", fill="white")

    tri_group = ET.SubElement(root, "g", fill=_TRIANGLE_FILL, stroke=_TRIANGLE_EDGE)
    tri_group.set("stroke-width", "1.5")
    for tri in triangulation.triangles:
        ET.SubElement(
            tri_group,
            "polygon",
            points=_points_attr((fx(v.x), fy(v.y)) for v in tri.vertices),
        )

    if decomposition is not None:
        ET.SubElement(
            root,
            "polygon",
            points=_points_attr(
                (fx(v.x), fy(v.y))
                for v in (decomposition.a, decomposition.b, decomposition.c)
            ),
            fill=_HIGHLIGHT,
            stroke=_TRIANGLE_EDGE,
        )

    outline = ET.SubElement(
        root,
        "polygon",
        points=_points_attr((fx(v.x), fy(v.y)) for v in P.vertices),
        fill="none",
        stroke=_OUTLINE,
    )
    outline.set("stroke-width", "3")

    dots = ET.SubElement(root, "g", fill=_GRID)
    for x in range(xmin, xmax + 1):
        for y in range(ymin, ymax + 1):
            ET.SubElement(dots, "circle", cx=f"{fx(x):g}", cy=f"{fy(y):g}", r="2.5")

    if decomposition is not None:
        w = decomposition.point()
        marker = ET.SubElement(
            root,
            "circle",
            cx=f"{fx(w.x / decomposition.h):g}",
            cy=f"{fy(w.y / decomposition.h):g}",
            r="6",
            fill=_MARK,
        )
        marker.set("fill-opacity", "0.85")

    tree = ET.ElementTree(root)
    ET.indent(tree)
    tree.write(path, encoding="unicode", xml_declaration=True)
    return path
