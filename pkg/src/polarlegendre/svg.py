"""Hand-emitted SVG scatter of a root set with the pole's reference regions.

No plotting dependency on this path: markers, paths and axis lines only, in a
fixed 800x600 viewport with deterministic element ordering (background, axes,
segment, disk, ellipse, pole, roots).
"""

from __future__ import annotations

import numpy as np

from .geometry import accumulation_ellipse_points, pole_geometry

WIDTH = 800
HEIGHT = 600
MARGIN = 40


def _px(v: float) -> str:
    return f"{v:.2f}"


class _Frame:
    """Maps a symmetric world box to pixel coordinates, preserving aspect."""

    def __init__(self, half_width: float, half_height: float):
        span_x = (WIDTH - 2 * MARGIN) / (2 * half_width)
        span_y = (HEIGHT - 2 * MARGIN) / (2 * half_height)
        self.scale = min(span_x, span_y)
        self.cx = WIDTH / 2
        self.cy = HEIGHT / 2

    def point(self, z: complex) -> tuple[float, float]:
        return self.cx + z.real * self.scale, self.cy - z.imag * self.scale


def render_zero_plot(rootset, pole) -> str:
    """SVG document for the roots of one P_n: segment, bounding disk,
    accumulation ellipse (when the pole is far enough out), pole, roots."""
    zeta = complex(pole)
    geom = pole_geometry(zeta)
    radius = geom.big_delta + 1.0
    reach_x = [radius, abs(zeta.real), 1.0] + [abs(r.real) for r in rootset.roots]
    reach_y = [radius, abs(zeta.imag)] + [abs(r.imag) for r in rootset.roots]
    frame = _Frame(1.1 * max(reach_x), 1.1 * max(max(reach_y), 0.2))

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    x0, y0 = frame.point(0j)
    parts.append(
        f'<line x1="0" y1="{_px(y0)}" x2="{WIDTH}" y2="{_px(y0)}" '
        'stroke="#cccccc" stroke-width="1"/>'
    )
    parts.append(
        f'<line x1="{_px(x0)}" y1="0" x2="{_px(x0)}" y2="{HEIGHT}" '
        'stroke="#cccccc" stroke-width="1"/>'
    )
    sx1, sy1 = frame.point(-1 + 0j)
    sx2, sy2 = frame.point(1 + 0j)
    parts.append(
        f'<line x1="{_px(sx1)}" y1="{_px(sy1)}" x2="{_px(sx2)}" y2="{_px(sy2)}" '
        'stroke="black" stroke-width="2"/>'
    )
    parts.append(
        f'<circle cx="{_px(x0)}" cy="{_px(y0)}" r="{_px(radius * frame.scale)}" '
        'fill="none" stroke="#888888" stroke-width="1" stroke-dasharray="6,4"/>'
    )
    if geom.small_delta > 1.0:
        pts = accumulation_ellipse_points(zeta, count=256)
        coords = " ".join(
            ("M" if i == 0 else "L") + f"{_px(frame.point(p)[0])},{_px(frame.point(p)[1])}"
            for i, p in enumerate(pts)
        )
        parts.append(
            f'<path d="{coords} Z" fill="none" stroke="#2060c0" stroke-width="1.5"/>'
        )
    px, py = frame.point(zeta)
    s = 6.0
    parts.append(
        f'<line x1="{_px(px - s)}" y1="{_px(py - s)}" x2="{_px(px + s)}" y2="{_px(py + s)}" '
        'stroke="#c02020" stroke-width="2"/>'
    )
    parts.append(
        f'<line x1="{_px(px - s)}" y1="{_px(py + s)}" x2="{_px(px + s)}" y2="{_px(py - s)}" '
        'stroke="#c02020" stroke-width="2"/>'
    )
    order = np.lexsort((rootset.roots.imag, rootset.roots.real))
    for i in order:
        r = rootset.roots[i]
        m = int(rootset.multiplicities[i])
        rx, ry = frame.point(complex(r))
        parts.append(
            f'<circle class="root" cx="{_px(rx)}" cy="{_px(ry)}" r="{4.0 + 2.0 * (m - 1):.2f}" '
            f'fill="#208040" fill-opacity="0.8" stroke="black" stroke-width="1"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write_zero_plot(path, rootset, pole):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(render_zero_plot(rootset, pole))
