"""Deterministic SVG 1.1 drawings of lattice paths and chip configurations.

Layout constants below only affect appearance.  Lattice paths are drawn in
a group whose transform maps lattice units to pixels, so polyline vertices
are exactly the cusps ``(i, p_i(j))``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional
from xml.sax.saxutils import escape

from .divisors import DivisorSeq, UnderlineSeq, underline_to_raw
from .paths import LatticePath

PATH_SCALE = 40          # pixels per lattice unit
PATH_MARGIN = 30
LOOP_RADIUS = 40
LOOP_MARGIN = 30
CHIP_RADIUS = 5
VERTEX_RADIUS = 3
LABEL_OFFSET = 14
PATH_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")

HEADER = (
    '<?xml version="1.0" encoding="UTF-8" standalone="no"?>\n'
    '<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" '
    '"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">\n'
)


def _num(value: float) -> str:
    text = f"{value:.3f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def _open(width: float, height: float) -> list[str]:
    return [
        HEADER.rstrip("\n"),
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_num(width)}" '
        f'height="{_num(height)}" viewBox="0 0 {_num(width)} {_num(height)}">',
        f'<rect x="0" y="0" width="{_num(width)}" height="{_num(height)}" fill="#ffffff"/>',
    ]


def render_path(path: LatticePath) -> str:
    g = path.g
    values = [a for p in path.points for a in p] or [0]
    top = max(max(values), 1)
    bottom = min(min(values), 0)
    width = 2 * PATH_MARGIN + g * PATH_SCALE
    height = 2 * PATH_MARGIN + (top - bottom) * PATH_SCALE
    out = _open(width, height)
    origin_y = PATH_MARGIN + top * PATH_SCALE
    out.append(
        f'<g transform="translate({PATH_MARGIN},{_num(origin_y)}) scale({PATH_SCALE},-{PATH_SCALE})">'
    )
    stroke = _num(1 / PATH_SCALE)
    for y in range(bottom, top + 1):
        out.append(f'<line x1="0" y1="{y}" x2="{g}" y2="{y}" stroke="#dddddd" stroke-width="{stroke}"/>')
    for x in range(g + 1):
        out.append(f'<line x1="{x}" y1="{bottom}" x2="{x}" y2="{top}" stroke="#dddddd" stroke-width="{stroke}"/>')
    for j in range(1, path.r + 1):
        cusps = " ".join(f"{i},{a}" for i, a in enumerate(path.coordinate(j)))
        color = PATH_COLORS[(j - 1) % len(PATH_COLORS)]
        out.append(
            f'<polyline id="path-{j}" points="{cusps}" fill="none" stroke="{color}" '
            f'stroke-width="{_num(3 / PATH_SCALE)}"/>'
        )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _angle(x: Fraction, ell: Fraction, m: Fraction) -> float:
    # counter-clockwise from v_{i-1} (left point): the m-arc is the lower
    # half, the ell-arc the upper half, each drawn as a semicircle
    if x <= m:
        t = float(x / m)
        return math.pi + math.pi * t
    t = float((x - m) / ell)
    return math.pi * t


def render_divisor(divisor: DivisorSeq | UnderlineSeq) -> str:
    raw = underline_to_raw(divisor) if isinstance(divisor, UnderlineSeq) else divisor
    g = raw.graph.genus
    width = 2 * LOOP_MARGIN + 2 * LOOP_RADIUS * g
    height = 2 * LOOP_MARGIN + 2 * LOOP_RADIUS + 2 * LABEL_OFFSET
    cy = LOOP_MARGIN + LABEL_OFFSET + LOOP_RADIUS
    out = _open(width, height)
    for i in range(1, g + 1):
        cx = LOOP_MARGIN + LOOP_RADIUS * (2 * i - 1)
        out.append(
            f'<circle id="loop-{i}" cx="{_num(cx)}" cy="{_num(cy)}" r="{LOOP_RADIUS}" '
            f'fill="none" stroke="#000000" stroke-width="1.5"/>'
        )
    for v in range(g + 1):
        vx = LOOP_MARGIN + 2 * LOOP_RADIUS * v
        out.append(f'<circle id="v{v}" cx="{_num(vx)}" cy="{_num(cy)}" r="{VERTEX_RADIUS}" fill="#000000"/>')
    d0_x = LOOP_MARGIN
    fill = "#d62728" if raw.d0 < 0 else "#1f77b4"
    out.append(
        f'<text id="d0" x="{_num(d0_x)}" y="{_num(cy - LABEL_OFFSET)}" font-family="sans-serif" '
        f'font-size="12" text-anchor="middle" fill="{fill}">{escape(str(raw.d0))}</text>'
    )
    for i, (x, loop) in enumerate(zip(raw.x, raw.graph.loops), start=1):
        if x == 0:
            continue
        cx = LOOP_MARGIN + LOOP_RADIUS * (2 * i - 1)
        theta = _angle(x, loop.ell, loop.m)
        px = cx + LOOP_RADIUS * math.cos(theta)
        # screen y grows downwards
        py = cy - LOOP_RADIUS * math.sin(theta)
        out.append(
            f'<circle class="chip" data-loop="{i}" data-position="{escape(str(x))}" cx="{_num(px)}" '
            f'cy="{_num(py)}" r="{CHIP_RADIUS}" fill="#1f77b4"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(payload, style: Optional[str] = None) -> str:
    if isinstance(payload, LatticePath):
        if style not in (None, "lattice-path"):
            raise ValueError(f"paths render only as lattice-path, not {style}")
        return render_path(payload)
    if isinstance(payload, (DivisorSeq, UnderlineSeq)):
        if style not in (None, "chip-config"):
            raise ValueError(f"divisors render only as chip-config, not {style}")
        return render_divisor(payload)
    raise ValueError(f"cannot render {type(payload).__name__}")
