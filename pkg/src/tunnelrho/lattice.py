"""Lattice certificate for the annulus-spanning tunnel of a torus knot.

For the ``(n, m)`` torus knot the tunnel meridian lifts to the segment from
``(0,0)`` to ``(m,n)`` in the plane, and the splitting-disk boundary lifts to
unit lattice squares.  The companion pair ``(p, q)`` spans an empty lattice
parallelogram ``P`` whose sides lift the knot meridians.  At each of the
corners ``(p,q)`` and ``(m-p, n-q)`` some unit square cuts ``P`` in a
triangle; its two sides through the corner form a wave crossing the major
diagonal twice, from which ``rho`` follows.

All geometry is exact (integers and :class:`fractions.Fraction`).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

import numpy as np

from .arcsys import ArcClass, ArcSystem, Base
from .errors import (
    AmbiguousNumerator,
    CertificateError,
    DegenerateTorusKnot,
    MixedBases,
    NotCoprime,
    NotFound,
)
from .pillowcase import Puncture, realize_pair
from .slope import Slope, SlopeMod2, reduce_mod2

__all__ = [
    "TorusKnotInput",
    "Parallelogram",
    "WaveCertificate",
    "TorusCertificate",
    "companion_pq",
    "build_parallelogram",
    "find_wave_square",
    "wave_slope",
    "certify",
    "rho_torus",
    "to_arc_system",
    "trace",
]

# lattice points stay plain ints; only constructed points become Fractions
Point = tuple  # (x, y) of int or Fraction


def _pt(x, y) -> Point:
    return _num(x), _num(y)


def _num(v):
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else v


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _on_segment(pt: Point, a: Point, b: Point) -> bool:
    return (_cross(a, b, pt) == 0
            and min(a[0], b[0]) <= pt[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= pt[1] <= max(a[1], b[1]))


@dataclass(frozen=True)
class TorusKnotInput:
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise ValueError(f"torus knot parameters must be positive, got ({self.m}, {self.n})")
        if math.gcd(self.m, self.n) != 1:
            raise NotCoprime(f"gcd({self.m}, {self.n}) = {math.gcd(self.m, self.n)}")
        if self.m == 1 or self.n == 1:
            raise DegenerateTorusKnot(f"({self.n}, {self.m}) torus knot is the unknot")


def companion_pq(knot: TorusKnotInput) -> tuple[int, int]:
    """The unique ``(p, q)`` with ``0 < p < m``, ``0 < q < n``, ``mq - np = 1``."""
    m, n = knot.m, knot.n
    q = pow(m, -1, n)
    p, rem = divmod(m * q - 1, n)
    assert rem == 0 and 0 < p < m and 0 < q < n and m * q - n * p == 1
    return p, q


@dataclass(frozen=True)
class Parallelogram:
    """The parallelogram ``(0,0), (m-p, n-q), (m,n), (p,q)`` (counter-clockwise)."""

    m: int
    n: int
    p: int
    q: int

    @property
    def corners(self) -> tuple[Point, Point, Point, Point]:
        m, n, p, q = self.m, self.n, self.p, self.q
        return _pt(0, 0), _pt(m - p, n - q), _pt(m, n), _pt(p, q)

    @property
    def sides(self) -> list[tuple[Point, Point]]:
        c = self.corners
        return [(c[i], c[(i + 1) % 4]) for i in range(4)]

    @property
    def major_diagonal(self) -> tuple[Point, Point]:
        return _pt(0, 0), _pt(self.m, self.n)

    @property
    def minor_diagonal(self) -> tuple[Point, Point]:
        return _pt(self.p, self.q), _pt(self.m - self.p, self.n - self.q)

    def area(self) -> Fraction:
        c = self.corners
        twice = sum(c[i][0] * c[(i + 1) % 4][1] - c[(i + 1) % 4][0] * c[i][1] for i in range(4))
        return Fraction(twice, 2)

    def scan_bounds(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (0, self.m), (0, self.n)

    def interior_lattice_points(self) -> list[tuple[int, int]]:
        """Brute-force scan of the bounding box with strict orientation tests."""
        (x0, x1), (y0, y1) = self.scan_bounds()
        xs, ys = np.meshgrid(np.arange(x0, x1 + 1), np.arange(y0, y1 + 1), indexing="ij")
        inside = np.ones(xs.shape, dtype=bool)
        for (ax, ay), (bx, by) in self.sides:
            ax, ay, bx, by = int(ax), int(ay), int(bx), int(by)
            inside &= (bx - ax) * (ys - ay) - (by - ay) * (xs - ax) > 0
        return [(int(x), int(y)) for x, y in zip(xs[inside], ys[inside])]

    def minor_direction(self) -> tuple[int, int]:
        return self.m - 2 * self.p, self.n - 2 * self.q

    def minor_sign_ok(self) -> bool:
        dx, dy = self.minor_direction()
        return not dx * dy < 0

    def meridian_of(self, side: tuple[Point, Point]) -> Base:
        """Sides parallel to ``(0,0)-(p,q)`` lift ``mu+``, the others ``mu-``."""
        (ax, ay), (bx, by) = side
        if (bx - ax) * self.q - (by - ay) * self.p == 0:
            return Base.PLUS
        assert (bx - ax) * (self.n - self.q) - (by - ay) * (self.m - self.p) == 0
        return Base.MINUS

    def contains(self, pt: Point) -> bool:
        return all(_cross(a, b, pt) >= 0 for a, b in self.sides)


def build_parallelogram(knot: TorusKnotInput) -> Parallelogram:
    p, q = companion_pq(knot)
    P = Parallelogram(knot.m, knot.n, p, q)
    if P.area() != 1:
        raise CertificateError(f"parallelogram area is {P.area()}, expected 1")
    if P.interior_lattice_points():
        raise CertificateError(f"lattice points inside P: {P.interior_lattice_points()}")
    if not P.minor_sign_ok():
        raise CertificateError(f"minor diagonal has negative slope: {P.minor_direction()}")
    return P


def clip_convex(subject: Sequence[Point], clip: Sequence[Point]) -> list[Point]:
    """Sutherland-Hodgman clip of a polygon against a CCW convex polygon."""
    output = list(subject)
    for i in range(len(clip)):
        a, b = clip[i], clip[(i + 1) % len(clip)]
        inp, output = output, []
        if not inp:
            break
        prev = inp[-1]
        for cur in inp:
            cur_in = _cross(a, b, cur) >= 0
            prev_in = _cross(a, b, prev) >= 0
            if cur_in:
                if not prev_in:
                    output.append(_line_hit(prev, cur, a, b))
                output.append(cur)
            elif prev_in:
                output.append(_line_hit(prev, cur, a, b))
            prev = cur
    return _simplify(output)


def _line_hit(p0: Point, p1: Point, a: Point, b: Point) -> Point:
    d0, d1 = _cross(a, b, p0), _cross(a, b, p1)
    t = Fraction(d0) / (d0 - d1)
    return _pt(p0[0] + t * (p1[0] - p0[0]), p0[1] + t * (p1[1] - p0[1]))


def _simplify(poly: list[Point]) -> list[Point]:
    """Drop repeated and collinear vertices."""
    pts: list[Point] = []
    for v in poly:
        if not pts or pts[-1] != v:
            pts.append(v)
    while len(pts) > 1 and pts[0] == pts[-1]:
        pts.pop()
    changed = True
    while changed and len(pts) >= 3:
        changed = False
        for i in range(len(pts)):
            if _cross(pts[i - 1], pts[i], pts[(i + 1) % len(pts)]) == 0:
                del pts[i]
                changed = True
                break
    return pts


@dataclass(frozen=True)
class WaveCertificate:
    corner: Point
    square: tuple[int, int]  # lower-left corner of the unit square
    triangle: tuple[Point, Point, Point]  # corner first
    base_side: tuple[Point, Point]  # side of P containing the triangle's base
    base_meridian: Base
    diagonal_crossings: tuple[Point, ...]

    @property
    def wave_sides(self) -> tuple[tuple[Point, Point], tuple[Point, Point]]:
        c, u, v = self.triangle
        return (c, u), (c, v)

    @property
    def base(self) -> tuple[Point, Point]:
        return self.triangle[1], self.triangle[2]


def _square(x: int, y: int) -> list[Point]:
    return [_pt(x, y), _pt(x + 1, y), _pt(x + 1, y + 1), _pt(x, y + 1)]


def _on_square_edge(a: Point, b: Point, x: int, y: int) -> bool:
    return ((a[0] == b[0] and a[0] in (x, x + 1))
            or (a[1] == b[1] and a[1] in (y, y + 1)))


def _try_square(P: Parallelogram, corner: Point, x: int, y: int) -> WaveCertificate | None:
    poly = clip_convex(P.corners, _square(x, y))
    # segments, points and empty clips are not certificates
    if len(poly) != 3 or corner not in poly:
        return None
    i = poly.index(corner)
    u, v = poly[(i + 1) % 3], poly[(i + 2) % 3]
    if not (_on_square_edge(corner, u, x, y) and _on_square_edge(corner, v, x, y)):
        return None
    base_side = next((s for s in P.sides if _on_segment(u, *s) and _on_segment(v, *s)), None)
    if base_side is None:
        return None
    diag = P.major_diagonal
    hits = []
    for end in (u, v):
        hit = _segment_intersection((corner, end), diag)
        if hit is not None and hit not in hits:
            hits.append(hit)
    return WaveCertificate(corner, (x, y), (corner, u, v), base_side,
                           P.meridian_of(base_side), tuple(hits))


def _segment_intersection(s: tuple[Point, Point], t: tuple[Point, Point]) -> Point | None:
    (a, b), (c, d) = s, t
    r = (b[0] - a[0], b[1] - a[1])
    w = (d[0] - c[0], d[1] - c[1])
    den = r[0] * w[1] - r[1] * w[0]
    if den == 0:
        return None
    ca = (c[0] - a[0], c[1] - a[1])
    t_ = Fraction(ca[0] * w[1] - ca[1] * w[0]) / den
    u_ = Fraction(ca[0] * r[1] - ca[1] * r[0]) / den
    if 0 <= t_ <= 1 and 0 <= u_ <= 1:
        return _pt(a[0] + t_ * r[0], a[1] + t_ * r[1])
    return None


def find_wave_square(P: Parallelogram, corner: Point) -> WaveCertificate:
    """Locate the unit square whose intersection with ``P`` is the wave triangle.

    The four squares incident to the corner are tried first, then every unit
    square meeting the bounding box of ``P``.  Raises :class:`NotFound` if no
    square qualifies.
    """
    corner = _pt(*corner)
    if corner not in (_pt(P.p, P.q), _pt(P.m - P.p, P.n - P.q)):
        raise ValueError(f"{corner} is not a side corner of P")
    cx, cy = int(corner[0]), int(corner[1])
    for dx, dy in product((-1, 0), repeat=2):
        cert = _try_square(P, corner, cx + dx, cy + dy)
        if cert is not None:
            return cert
    for x, y in product(range(-1, P.m + 1), range(-1, P.n + 1)):
        cert = _try_square(P, corner, x, y)
        if cert is not None:
            return cert
    raise NotFound(f"no unit square cuts a wave triangle from P at corner {corner}")


def wave_slope(cert: WaveCertificate) -> Slope:
    """Slope of the spanning arc determined by a certified wave.

    The wave runs out along its spanning arc and back, so it meets the tunnel
    meridian twice as often as the arc does: the crossing count fixes the
    denominator.  The numerator is odd because the spanning arc joins the two
    knot meridians; with denominator 1 that fixes the class mod 2.
    """
    count = len(cert.diagonal_crossings)
    q, rem = divmod(count, 2)
    if rem or q == 0:
        raise CertificateError(f"wave crosses the tunnel meridian {count} times")
    if q != 1:
        raise AmbiguousNumerator(f"denominator {q}: crossing data fixes p only mod 2")
    return Slope(1, q)


@dataclass(frozen=True)
class TorusCertificate:
    knot: TorusKnotInput
    parallelogram: Parallelogram
    waves: tuple[WaveCertificate, WaveCertificate]

    @property
    def companion(self) -> tuple[int, int]:
        return self.parallelogram.p, self.parallelogram.q


def certify(knot: TorusKnotInput) -> TorusCertificate:
    P = build_parallelogram(knot)
    first = find_wave_square(P, (P.p, P.q))
    second = find_wave_square(P, (P.m - P.p, P.n - P.q))
    for cert in (first, second):
        if len(cert.diagonal_crossings) != 2:
            raise CertificateError(
                f"wave at {cert.corner} meets the major diagonal "
                f"{len(cert.diagonal_crossings)} times")
    return TorusCertificate(knot, P, (first, second))


def rho_torus(knot: TorusKnotInput) -> SlopeMod2:
    cert = certify(knot)
    slopes = {wave_slope(w) for w in cert.waves}
    if len(slopes) != 1:
        raise CertificateError(f"corners disagree on the wave slope: {slopes}")
    return reduce_mod2(slopes.pop())


_COPIES = {
    Base.MINUS: (Puncture.MINUS_LEFT, Puncture.MINUS_RIGHT),
    Base.PLUS: (Puncture.PLUS_LEFT, Puncture.PLUS_RIGHT),
}


def to_arc_system(cert: TorusCertificate) -> ArcSystem:
    """Arc system on the 4-punctured sphere read off the two corner certificates.

    The wave at ``(p, q)`` is placed on the left copy of its base meridian and
    the wave at ``(m-p, n-q)`` on the right copy; the complete pair they span
    is included as the accompanying joining arcs.
    """
    bases = {w.base_meridian for w in cert.waves}
    if len(bases) != 1:
        raise MixedBases("corner certificates are based on different meridians")
    base = bases.pop()
    slopes = {wave_slope(w) for w in cert.waves}
    if len(slopes) != 1:
        raise CertificateError(f"corners disagree on the wave slope: {slopes}")
    s = slopes.pop()
    classes = [(ArcClass(x, x, s), 1) for x in _COPIES[base]]
    classes += [(ArcClass(a, b, s), 1) for a, b in realize_pair(s).endpoints()]
    return ArcSystem(classes)


def _fr(x: Fraction) -> str:
    return str(Fraction(x))


def _point(pt) -> list[str]:
    return [_fr(pt[0]), _fr(pt[1])]


def trace(cert: TorusCertificate) -> dict:
    """JSON-ready certificate chain with exact fractions as strings."""
    P = cert.parallelogram
    (x0, x1), (y0, y1) = P.scan_bounds()
    dx, dy = P.minor_direction()
    s = wave_slope(cert.waves[0])
    return {
        "knot": {"m": cert.knot.m, "n": cert.knot.n},
        "companion": {"p": P.p, "q": P.q, "determinant": P.m * P.q - P.n * P.p},
        "parallelogram": {
            "corners": [_point(c) for c in P.corners],
            "area": _fr(P.area()),
            "scan_bounds": {"x": [x0, x1], "y": [y0, y1]},
            "interior_lattice_points": [list(pt) for pt in P.interior_lattice_points()],
            "minor_diagonal": {
                "from": _point(P.minor_diagonal[0]),
                "to": _point(P.minor_diagonal[1]),
                "direction": [str(dx), str(dy)],
                "sign_test": P.minor_sign_ok(),
            },
        },
        "certificates": [
            {
                "corner": _point(w.corner),
                "square": [[str(w.square[0]), str(w.square[1])],
                           [str(w.square[0] + 1), str(w.square[1] + 1)]],
                "triangle": [_point(v) for v in w.triangle],
                "wave_sides": [[_point(a), _point(b)] for a, b in w.wave_sides],
                "base_side": [_point(v) for v in w.base_side],
                "base_meridian": w.base_meridian.value,
                "diagonal_crossings": [_point(h) for h in w.diagonal_crossings],
            }
            for w in cert.waves
        ],
        "wave_slope": str(s),
        "rho": str(reduce_mod2(s).rep),
    }
