"""SVG emission: one circle per node, one line per edge."""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass

from .graph import Graph
from .layout import Layout

VIEWBOX_SIZE = 1000
MARGIN_FRACTION = 0.05


@dataclass(frozen=True)
class RenderStyle:
    node_radius: float = 6.0
    node_fill: str = "#2b6cb0"
    edge_stroke: str = "#9aa5b1"
    edge_width: float = 1.2
    background: str = "#ffffff"


def render_svg(g: Graph, layout: Layout, style: RenderStyle = RenderStyle()) -> str:
    """Well-formed SVG text for g drawn at the layout's coordinates.

    The unit square is mapped into a 1000x1000 viewBox with a 5% margin;
    the y axis is flipped so larger y draws higher up.
    """
    if len(layout.coordinates) < g.n:
        raise ValueError(
            f"layout covers {len(layout.coordinates)} nodes, graph has {g.n}"
        )
    margin = VIEWBOX_SIZE * MARGIN_FRACTION
    scale = VIEWBOX_SIZE - 2 * margin

    def to_px(xy):
        x, y = float(xy[0]), float(xy[1])
        return margin + x * scale, VIEWBOX_SIZE - (margin + y * scale)

    root = ET.Element(
        "svg",
        {
            "xmlns": "http://www.w3.org/2000/svg",
            "viewBox": f"0 0 {VIEWBOX_SIZE} {VIEWBOX_SIZE}",
        },
    )
    ET.SubElement(
        root,
        "rect",
        {"width": str(VIEWBOX_SIZE), "height": str(VIEWBOX_SIZE), "fill": style.background},
    )
    coords = layout.coordinates
    for u, w in g.edges():
        x1, y1 = to_px(coords[u])
        x2, y2 = to_px(coords[w])
        ET.SubElement(
            root,
            "line",
            {
                "x1": f"{x1:.2f}",
                "y1": f"{y1:.2f}",
                "x2": f"{x2:.2f}",
                "y2": f"{y2:.2f}",
                "stroke": style.edge_stroke,
                "stroke-width": str(style.edge_width),
            },
        )
    for u in range(g.n):
        cx, cy = to_px(coords[u])
        ET.SubElement(
            root,
            "circle",
            {
                "cx": f"{cx:.2f}",
                "cy": f"{cy:.2f}",
                "r": str(style.node_radius),
                "fill": style.node_fill,
            },
        )
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(
        root, encoding="unicode"
    ) + "\n"
