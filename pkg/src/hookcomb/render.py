"""Static SVG rendering of hook configurations and Motzkin paths.

Output is deterministic byte for byte: integer lattice coordinates scaled
by a fixed factor, elements emitted in a fixed order (grid, hooks, points,
path), and no fonts beyond the SVG default.  Suitable for golden-file
comparison.
"""

from __future__ import annotations

from .motzkin import MotzkinPath
from .vhc import Vhc

SCALE = 40
MARGIN = 30
POINT_RADIUS = 5

_HEADER = '<?xml version="1.0" encoding="UTF-8"?>\n'


def _svg(width: int, height: int, body: list[str]) -> str:
    parts = [
        _HEADER,
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">\n',
        f'<rect width="{width}" height="{height}" fill="white"/>\n',
    ]
    parts.extend(body)
    parts.append("</svg>\n")
    return "".join(parts)


def render_vhc(v: Vhc) -> str:
    """Plot points as filled circles and hooks as two-leg polylines."""
    n = v.pi.n
    if n == 0:
        return _svg(2 * MARGIN, 2 * MARGIN, [])
    width = height = 2 * MARGIN + (n - 1) * SCALE

    def x(i: int) -> int:
        return MARGIN + (i - 1) * SCALE

    def y(val: int) -> int:
        return MARGIN + (n - val) * SCALE

    body = []
    for hook in v.matching:  # already sorted by southwest index
        sw, ne = hook
        pts = f"{x(sw.index)},{y(sw.value)} {x(sw.index)},{y(ne.value)} {x(ne.index)},{y(ne.value)}"
        body.append(
            f'<polyline class="hook" points="{pts}" fill="none" '
            f'stroke="black" stroke-width="2"/>\n'
        )
    for p in v.pi.points():
        body.append(
            f'<circle class="pt" cx="{x(p.index)}" cy="{y(p.value)}" '
            f'r="{POINT_RADIUS}" fill="black"/>\n'
        )
    return _svg(width, height, body)


def render_path(p: MotzkinPath) -> str:
    """Grid-aligned lattice path from the origin; east steps stay level."""
    n = len(p)
    heights = (0,) + p.heights()
    top = max(heights)
    width = 2 * MARGIN + n * SCALE
    height = 2 * MARGIN + max(top, 1) * SCALE

    def x(i: int) -> int:
        return MARGIN + i * SCALE

    def y(h: int) -> int:
        return height - MARGIN - h * SCALE

    body = []
    for gx in range(n + 1):  # light grid
        body.append(
            f'<line class="grid" x1="{x(gx)}" y1="{y(0)}" x2="{x(gx)}" '
            f'y2="{y(top)}" stroke="lightgray" stroke-width="1"/>\n'
        )
    for gy in range(top + 1):
        body.append(
            f'<line class="grid" x1="{x(0)}" y1="{y(gy)}" x2="{x(n)}" '
            f'y2="{y(gy)}" stroke="lightgray" stroke-width="1"/>\n'
        )
    pts = " ".join(f"{x(i)},{y(h)}" for i, h in enumerate(heights))
    body.append(
        f'<polyline class="path" points="{pts}" fill="none" '
        f'stroke="black" stroke-width="2"/>\n'
    )
    return _svg(width, height, body)
