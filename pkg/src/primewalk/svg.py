"""Minimal static SVG scatter plots of lattice points."""

from __future__ import annotations

import math
from typing import Sequence

WIDTH = 640
HEIGHT = 640
MARGIN = 32


def scatter_svg(points: Sequence[tuple[int, int]], *, asymptotes: bool = False,
                path: Sequence[tuple[int, int]] | None = None, title: str = "") -> str:
    """Render ``points`` as one ``<circle>`` each; the y axis points up.

    ``asymptotes`` overlays ``y = +-x/sqrt2``; ``path`` draws a polyline through
    the given points in order.
    """
    xs = [p[0] for p in points] or [0]
    ys = [p[1] for p in points] or [0]
    x0, x1 = min(xs) - 1, max(xs) + 1
    y0, y1 = min(ys) - 1, max(ys) + 1
    span = max(x1 - x0, y1 - y0)
    scale = (min(WIDTH, HEIGHT) - 2 * MARGIN) / span
    radius = max(0.6, min(3.0, scale * 0.4))

    def sx(x: float) -> float:
        return MARGIN + (x - x0) * scale

    def sy(y: float) -> float:
        return HEIGHT - MARGIN - (y - y0) * scale

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    if title:
        out.append(f'<text x="{MARGIN}" y="{MARGIN - 10}" font-size="14">{title}</text>')
    if asymptotes:
        for slope in (1 / math.sqrt(2), -1 / math.sqrt(2)):
            out.append(
                f'<line class="asymptote" x1="{sx(x0):.2f}" y1="{sy(slope * x0):.2f}" '
                f'x2="{sx(x1):.2f}" y2="{sy(slope * x1):.2f}" stroke="black" stroke-width="1"/>'
            )
    if path:
        pts = " ".join(f"{sx(a):.2f},{sy(b):.2f}" for a, b in path)
        out.append(f'<polyline class="walk" points="{pts}" fill="none" stroke="#c33" stroke-width="1.5"/>')
    for a, b in points:
        out.append(f'<circle cx="{sx(a):.2f}" cy="{sy(b):.2f}" r="{radius:.2f}" fill="#2a5db0"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
