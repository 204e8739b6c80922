"""Static SVG 1.1 drawings of pillowcase configurations and lattice certificates.

Geometry is exact up to this point; coordinates are converted to decimals only
when written out.  The y axis is flipped so pictures read like the plane.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product
from xml.sax.saxutils import escape

from .lattice import TorusCertificate
from .pillowcase import Puncture, RealizedPair

__all__ = ["pillowcase_svg", "lattice_svg"]

_COLORS = ["#c0392b", "#2471a3", "#1e8449", "#7d3c98"]

_LABELS = {
    (0, 0): Puncture.MINUS_LEFT,
    (Fraction(1, 2), 0): Puncture.MINUS_RIGHT,
    (0, Fraction(1, 2)): Puncture.PLUS_LEFT,
    (Fraction(1, 2), Fraction(1, 2)): Puncture.PLUS_RIGHT,
}


def _f(v) -> str:
    return f"{float(v):.6g}"


def _doc(x0, y0, w, h, body: list[str], px: int = 480) -> str:
    height = round(px * float(h) / float(w))
    return "\n".join([
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{px}" height="{height}" '
        f'viewBox="{_f(x0)} {_f(-(y0 + h))} {_f(w)} {_f(h)}">',
        '<g transform="scale(1,-1)">',
        *body,
        "</g>",
        "</svg>",
        "",
    ])


def _line(a, b, color: str, width, extra: str = "") -> str:
    return (f'<line x1="{_f(a[0])}" y1="{_f(a[1])}" x2="{_f(b[0])}" y2="{_f(b[1])}" '
            f'stroke="{color}" stroke-width="{_f(width)}"{extra}/>')


def _text(x, y, size, label: str) -> str:
    # undo the flip so the glyphs are upright
    return (f'<text x="{_f(x)}" y="{_f(-y)}" font-size="{_f(size)}" '
            f'font-family="sans-serif" transform="scale(1,-1)">{escape(label)}</text>')


def pillowcase_svg(pairs: list[RealizedPair]) -> str:
    """Draw realized pairs on the unit-torus fundamental domain.

    Every translate of every arc and of its image under ``x -> -x`` that meets
    the unit square is drawn and clipped to it, so the picture is the full
    preimage in the double cover.
    """
    body = [
        '<defs><clipPath id="domain"><rect x="0" y="0" width="1" height="1"/></clipPath></defs>',
        '<rect x="0" y="0" width="1" height="1" fill="#ffffff" stroke="#000000" stroke-width="0.004"/>',
    ]
    dash = ' stroke-dasharray="0.02,0.015"'
    for c in (Fraction(1, 4), Fraction(3, 4)):
        body.append(_line((c, 0), (c, 1), "#888888", 0.003, dash + ' class="mu-t"'))
        body.append(_line((0, c), (1, c), "#bbbbbb", 0.003, dash + ' class="mu-perp"'))
    body.append('<g clip-path="url(#domain)">')
    for i, pair in enumerate(pairs):
        color = _COLORS[i % len(_COLORS)]
        body.append(f'<g class="pair" data-slope="{pair.slope}">')
        for (a, b) in pair.segments:
            for sign in (1, -1):
                a2, b2 = (sign * a[0], sign * a[1]), (sign * b[0], sign * b[1])
                lo_x, hi_x = min(a2[0], b2[0]), max(a2[0], b2[0])
                lo_y, hi_y = min(a2[1], b2[1]), max(a2[1], b2[1])
                for nx, ny in product(range(int(-hi_x) - 1, int(1 - lo_x) + 2),
                                      range(int(-hi_y) - 1, int(1 - lo_y) + 2)):
                    if hi_x + nx < 0 or lo_x + nx > 1 or hi_y + ny < 0 or lo_y + ny > 1:
                        continue
                    body.append(_line((a2[0] + nx, a2[1] + ny), (b2[0] + nx, b2[1] + ny),
                                      color, 0.006))
        body.append("</g>")
    body.append("</g>")
    for (x, y), name in _LABELS.items():
        for dx, dy in product((0, 1), repeat=2):
            if x + dx <= 1 and y + dy <= 1:
                body.append(f'<circle cx="{_f(x + dx)}" cy="{_f(y + dy)}" r="0.018" '
                            f'fill="#000000" class="puncture"/>')
        body.append(_text(x + 0.02, y + 0.03, 0.035, name.value))
    title = ", ".join(str(p.slope) for p in pairs)
    body.insert(0, f"<title>{escape('slopes ' + title)}</title>")
    return _doc(-0.05, -0.05, 1.1, 1.1, body)


def lattice_svg(cert: TorusCertificate) -> str:
    """Parallelogram, both diagonals, wave squares, triangles and crossings."""
    P = cert.parallelogram
    pad = 1
    x0, y0, w, h = -pad, -pad, P.m + 2 * pad, P.n + 2 * pad
    unit = max(w, h) / 200
    body = [f"<title>({P.n}, {P.m}) torus knot, companion ({P.p}, {P.q})</title>"]
    for x, y in product(range(x0, x0 + w + 1), range(y0, y0 + h + 1)):
        body.append(f'<circle cx="{x}" cy="{y}" r="{_f(unit * 1.5)}" fill="#999999"/>')
    pts = " ".join(f"{_f(x)},{_f(y)}" for x, y in P.corners)
    body.append(f'<polygon points="{pts}" fill="#f5e6c8" stroke="#000000" '
                f'stroke-width="{_f(unit)}" class="parallelogram"/>')
    body.append(_line(*P.major_diagonal, "#2471a3", unit, ' class="major-diagonal"'))
    body.append(_line(*P.minor_diagonal, "#888888", unit * 0.6,
                      f' stroke-dasharray="{_f(unit * 3)},{_f(unit * 2)}" class="minor-diagonal"'))
    for wave in cert.waves:
        sx, sy = wave.square
        body.append(f'<rect x="{sx}" y="{sy}" width="1" height="1" fill="none" '
                    f'stroke="#1e8449" stroke-width="{_f(unit * 0.8)}" class="wave-square"/>')
        tri = " ".join(f"{_f(x)},{_f(y)}" for x, y in wave.triangle)
        body.append(f'<polygon points="{tri}" fill="#c0392b" fill-opacity="0.35" '
                    f'stroke="none" class="wave-triangle"/>')
        for a, b in wave.wave_sides:
            body.append(_line(a, b, "#c0392b", unit * 1.6, ' class="wave"'))
        for x, y in wave.diagonal_crossings:
            body.append(f'<circle cx="{_f(x)}" cy="{_f(y)}" r="{_f(unit * 2.5)}" '
                        f'fill="#2471a3" class="crossing"/>')
    return _doc(x0, y0, w, h, body)
