"""Static SVG chord diagrams of coloured interval systems."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Sequence
from xml.sax.saxutils import escape

from .intervals import IntervalSystem


def color_hex(c: int) -> str:
    """Distinct-ish colour for class ``c`` (golden-angle hue steps)."""
    hue = (c * 137.508) % 360
    h = hue / 60
    s, v = 0.65, 0.85
    x = v * s * (1 - abs(h % 2 - 1))
    m = v - v * s
    r, g, b = [(v * s, x, 0), (x, v * s, 0), (0, v * s, x), (0, x, v * s), (x, 0, v * s), (v * s, 0, x)][int(h) % 6]
    return "#{:02x}{:02x}{:02x}".format(*(round((t + m) * 255) for t in (r, g, b)))


def _point(x: Fraction, cx: float, cy: float, r: float) -> tuple[float, float]:
    theta = math.pi / 2 - 2 * math.pi * float(x)
    return cx + r * math.cos(theta), cy - r * math.sin(theta)


def chord_diagram(
    system: IntervalSystem,
    colors: Optional[Sequence[int]] = None,
    pillars: Sequence[Fraction] = (),
    size: int = 600,
    title: str = "",
) -> str:
    """Unit-circle picture: the cut point 0 = 1 sits at the top, positions run clockwise."""
    cx = cy = size / 2
    r = size / 2 - 40
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
        f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="{r:.2f}" fill="none" stroke="#999" stroke-width="1"/>',
    ]
    if title:
        parts.append(f'<text x="10" y="20" font-family="sans-serif" font-size="14">{escape(title)}</text>')
    for i, iv in enumerate(system.intervals):
        x1, y1 = _point(iv.left, cx, cy, r)
        x2, y2 = _point(iv.right, cx, cy, r)
        stroke = color_hex(colors[i]) if colors is not None else "#333333"
        label = f"interval {i}: {iv}" + (f", colour {colors[i]}" if colors is not None else "")
        parts.append(
            f'<path d="M {x1:.2f} {y1:.2f} Q {cx:.2f} {cy:.2f} {x2:.2f} {y2:.2f}" fill="none" '
            f'stroke="{stroke}" stroke-width="2" stroke-opacity="0.85"><title>{escape(label)}</title></path>'
        )
    for p in pillars:
        xa, ya = _point(p, cx, cy, r - 10)
        xb, yb = _point(p, cx, cy, r + 10)
        parts.append(
            f'<line x1="{xa:.2f}" y1="{ya:.2f}" x2="{xb:.2f}" y2="{yb:.2f}" stroke="black" stroke-width="2">'
            f"<title>pillar {p}</title></line>"
        )
    x0, y0 = _point(Fraction(0), cx, cy, r + 18)
    parts.append(f'<text x="{x0:.2f}" y="{y0:.2f}" text-anchor="middle" font-family="sans-serif" font-size="11">0</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
