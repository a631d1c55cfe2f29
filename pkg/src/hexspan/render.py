"""Deterministic SVG rendering of colorings as a honeycomb patch.

Cells are placed with the zig-zag column embedding (unit edge length):
x = 1.5*i +- 0.25 by handedness, y = j * sqrt(3)/2.  Each cell becomes
one hexagonal polygon filled by a palette color derived from the color
index, so identical inputs always produce identical bytes.
"""

from __future__ import annotations

import colorsys
import math

from .coloring import LatticeColoring, WindowColoring
from .grid import Vertex, parity

SQ3 = math.sqrt(3.0)


def cell_position(v: Vertex) -> tuple[float, float]:
    x = 1.5 * v[0] + (0.25 if parity(v) == 0 else -0.25)
    y = v[1] * (SQ3 / 2.0)
    return x, y


def palette_color(index: int) -> str:
    """Stable, well-spread color for a 1-based color index."""
    hue = (index * 0.61803398875) % 1.0
    r, g, b = colorsys.hsv_to_rgb(hue, 0.55, 0.92)
    return f"#{round(r * 255):02x}{round(g * 255):02x}{round(b * 255):02x}"


def _hexagon(cx: float, cy: float, radius: float, flip: bool) -> str:
    pts = []
    start = 0.0 if not flip else math.pi / 6.0
    for t in range(6):
        ang = start + t * math.pi / 3.0
        pts.append(f"{cx + radius * math.cos(ang):.2f},{cy + radius * math.sin(ang):.2f}")
    return " ".join(pts)


def render_svg(coloring: LatticeColoring | WindowColoring, scale: float = 24.0,
               tile: int = 3, labels: bool = True) -> str:
    """SVG text for a coloring.

    A window coloring is drawn as-is.  A lattice coloring is drawn as
    its fundamental domain tiled ``tile`` x ``tile`` times, so the
    periodic structure is visible.
    """
    if isinstance(coloring, LatticeColoring):
        t1, t2 = coloring.basis
        cells: dict[Vertex, int] = {}
        domain = coloring.geometry.cells()
        for s in range(tile):
            for t in range(tile):
                for cell in domain:
                    shifted = (cell[0] + s * t1[0] + t * t2[0],
                               cell[1] + s * t1[1] + t * t2[1])
                    cells[shifted] = coloring.assignment[cell]
    else:
        cells = dict(coloring.assignment)

    placed = {v: cell_position(v) for v in cells}
    xs = [p[0] for p in placed.values()]
    ys = [p[1] for p in placed.values()]
    pad = 1.2
    x0, y0 = min(xs) - pad, min(ys) - pad
    width = (max(xs) - min(xs) + 2 * pad) * scale
    height = (max(ys) - min(ys) + 2 * pad) * scale
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" '
        f'height="{height:.0f}" viewBox="0 0 {width:.2f} {height:.2f}">',
        f'<!-- hexspan coloring, l={coloring.l}, {len(cells)} cells -->',
    ]
    radius = 0.56 * scale
    for v in sorted(cells):
        px, py = placed[v]
        cx = (px - x0) * scale
        cy = height - (py - y0) * scale  # svg y grows downward
        color = cells[v]
        pts = _hexagon(cx, cy, radius, flip=parity(v) == 1)
        lines.append(f'<polygon points="{pts}" fill="{palette_color(color)}" '
                     f'stroke="#333333" stroke-width="1"/>')
        if labels:
            lines.append(f'<text x="{cx:.2f}" y="{cy + 0.12 * scale:.2f}" '
                         f'font-size="{0.38 * scale:.1f}" text-anchor="middle" '
                         f'font-family="monospace">{color}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
