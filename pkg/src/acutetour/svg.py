"""SVG 1.1 rendering of a point set, its partition lines and a tour."""

from __future__ import annotations

import math
from typing import Optional, Sequence
from xml.sax.saxutils import escape

CANVAS = 1000
MARGIN = 0.05


class _Viewport:
    """Maps data coordinates onto the canvas with y pointing up."""

    def __init__(self, points):
        xs = [p[0] for p in points]
        ys = [p[1] for p in points]
        self.x0, self.y0 = min(xs), min(ys)
        span = max(max(xs) - self.x0, max(ys) - self.y0, 1)
        inner = CANVAS * (1 - 2 * MARGIN)
        self.scale = inner / span
        self.pad = CANVAS * MARGIN
        self.lo = (self.x0 - self.pad / self.scale, self.y0 - self.pad / self.scale)
        self.hi = (self.lo[0] + CANVAS / self.scale, self.lo[1] + CANVAS / self.scale)

    def map(self, x, y) -> tuple[float, float]:
        return (
            self.pad + (float(x) - self.x0) * self.scale,
            CANVAS - self.pad - (float(y) - self.y0) * self.scale,
        )


def _clip_line(vp: _Viewport, origin, direction):
    """Segment of the infinite line through ``origin`` inside the canvas box."""
    ox, oy = float(origin[0]), float(origin[1])
    dx, dy = float(direction[0]), float(direction[1])
    t_lo, t_hi = -math.inf, math.inf
    for o, d, lo, hi in ((ox, dx, vp.lo[0], vp.hi[0]), (oy, dy, vp.lo[1], vp.hi[1])):
        if d == 0:
            if not lo <= o <= hi:
                return None
            continue
        a, b = (lo - o) / d, (hi - o) / d
        t_lo, t_hi = max(t_lo, min(a, b)), min(t_hi, max(a, b))
    if t_lo > t_hi:
        return None
    return (ox + t_lo * dx, oy + t_lo * dy), (ox + t_hi * dx, oy + t_hi * dy)


def render_svg(
    points: Sequence,
    order: Optional[Sequence[int]] = None,
    frame=None,
    obtuse: Sequence[int] = (),
    title: str = "",
) -> str:
    """SVG document as a string.

    ``frame`` (an OrthoFrame) adds the two partition lines, dashed; ``obtuse``
    lists vertex indices to circle.
    """
    vp = _Viewport(points)
    r = max(1.0, min(4.0, 400 / math.sqrt(max(len(points), 1))))
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{CANVAS}" '
        f'height="{CANVAS}" viewBox="0 0 {CANVAS} {CANVAS}">',
        f'<rect width="{CANVAS}" height="{CANVAS}" fill="white"/>',
    ]
    if title:
        out.append(f"<title>{escape(title)}</title>")
    if frame is not None:
        o = frame.origin
        for direction in (frame.v, frame.u):
            # The line where the frame coordinate along the other axis is zero.
            seg = _clip_line(vp, o, direction)
            if seg is None:
                continue
            (x1, y1), (x2, y2) = vp.map(*seg[0]), vp.map(*seg[1])
            out.append(
                f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
                'stroke="#888" stroke-width="1.5" stroke-dasharray="8,6"/>'
            )
    if order:
        coords = " ".join("%.2f,%.2f" % vp.map(*points[i]) for i in order)
        out.append(
            f'<polygon points="{coords}" fill="none" stroke="#1f5fa8" stroke-width="1"/>'
        )
    for p in points:
        cx, cy = vp.map(*p)
        out.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="{r:.2f}" fill="black"/>')
    for i in obtuse:
        cx, cy = vp.map(*points[i])
        out.append(
            f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="{3 * r + 4:.2f}" fill="none" '
            'stroke="red" stroke-width="2"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
