"""Static SVG rendering of a rectangle cover. Display only."""

from __future__ import annotations

from .cover import RclCover
from .grid import GridGraph

_CELL = 14
_PALETTE = (
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3",
    "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd",
)


def render_cover_svg(g: GridGraph, cover: RclCover) -> str:
    """Vertices as squares colored by rectangle, rectangle frames on top."""
    s = _CELL
    w = (g.c_max + 2) * s
    h = (g.r_max + 2) * s
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
        f'<rect width="{w}" height="{h}" fill="white"/>',
    ]
    for i, rect in enumerate(cover.rectangles):
        fill = _PALETTE[i % len(_PALETTE)]
        for vr, vc in sorted(rect.cell_set):
            parts.append(
                f'<rect x="{vc * s + 1}" y="{vr * s + 1}" width="{s - 2}" '
                f'height="{s - 2}" fill="{fill}" stroke="#555" stroke-width="0.5"/>'
            )
    for rect in cover.rectangles:
        x = (rect.c1 + 1) * s
        y = (rect.r1 + 1) * s
        parts.append(
            f'<rect x="{x}" y="{y}" width="{(rect.c2 - rect.c1) * s}" '
            f'height="{(rect.r2 - rect.r1) * s}" fill="none" stroke="#d62728" '
            f'stroke-width="1.5"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
