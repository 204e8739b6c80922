"""Flat pillowcase model of the 4-punctured sphere.

The sphere is the unit torus ``R^2 / Z^2`` modulo ``x -> -x``; the four cone
points ``(0,0), (1/2,0), (0,1/2), (1/2,1/2)`` are the punctures.  A complete
pair of slope ``p/q`` is realized by straight segments of direction ``(q, p)``,
which are in minimal position, so crossings can be counted exactly.

Internally every coordinate is doubled: cone points become the integer points
of ``{0,1}^2``, arcs run between integer points, and the orbifold group acts
by ``x -> +-x + 2n``.  All predicates are then integer arithmetic.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, NamedTuple

from .errors import EqualSlopes
from .slope import Parity, Slope

__all__ = [
    "Puncture",
    "PillowPoint",
    "RealizedPair",
    "realize_pair",
    "count_crossings",
    "crossing_points",
    "reference_crossings",
    "torus_lift_counts",
    "endpoint_parity",
    "partner",
]


class Puncture(enum.Enum):
    MINUS_LEFT = "MinusLeft"
    MINUS_RIGHT = "MinusRight"
    PLUS_LEFT = "PlusLeft"
    PLUS_RIGHT = "PlusRight"

    @property
    def is_minus(self) -> bool:
        return self in (Puncture.MINUS_LEFT, Puncture.MINUS_RIGHT)

    @property
    def other_copy(self) -> Puncture:
        """The other boundary copy of the same meridian."""
        return _OTHER_COPY[self]

    def __str__(self) -> str:
        return self.value


_OTHER_COPY = {
    Puncture.MINUS_LEFT: Puncture.MINUS_RIGHT,
    Puncture.MINUS_RIGHT: Puncture.MINUS_LEFT,
    Puncture.PLUS_LEFT: Puncture.PLUS_RIGHT,
    Puncture.PLUS_RIGHT: Puncture.PLUS_LEFT,
}

# doubled coordinates of the cone points
_CONE_POINT = {
    Puncture.MINUS_LEFT: (0, 0),
    Puncture.MINUS_RIGHT: (1, 0),
    Puncture.PLUS_LEFT: (0, 1),
    Puncture.PLUS_RIGHT: (1, 1),
}
_PUNCTURE_AT = {v: k for k, v in _CONE_POINT.items()}


def _puncture_of(x: int, y: int) -> Puncture:
    # any integer point in doubled coordinates is congruent to a cone point
    return _PUNCTURE_AT[(x % 2, y % 2)]


class PillowPoint(NamedTuple):
    """Point of the unit torus fundamental domain, ``0 <= x, y < 1``."""

    x: Fraction
    y: Fraction


class Segment(NamedTuple):
    x0: int
    y0: int
    x1: int
    y1: int

    def negate(self) -> Segment:
        return Segment(-self.x0, -self.y0, -self.x1, -self.y1)

    def shift(self, dx: int, dy: int) -> Segment:
        return Segment(self.x0 + dx, self.y0 + dy, self.x1 + dx, self.y1 + dy)

    def bbox(self) -> tuple[int, int, int, int]:
        return (min(self.x0, self.x1), min(self.y0, self.y1),
                max(self.x0, self.x1), max(self.y0, self.y1))

    def as_fractions(self) -> tuple[PillowPoint, PillowPoint]:
        """Endpoints in true (undoubled) coordinates."""
        h = Fraction(1, 2)
        return (PillowPoint(self.x0 * h, self.y0 * h),
                PillowPoint(self.x1 * h, self.y1 * h))


@dataclass(frozen=True)
class RealizedPair:
    """Straight-line realization of a complete pair.

    ``arcs`` holds the two segments in doubled coordinates; each starts at a
    cone point and runs for the vector ``(q, p)``.
    """

    slope: Slope
    arcs: tuple[Segment, Segment]

    @property
    def segments(self) -> list[tuple[PillowPoint, PillowPoint]]:
        return [a.as_fractions() for a in self.arcs]

    def endpoints(self) -> list[tuple[Puncture, Puncture]]:
        return [(_puncture_of(a.x0, a.y0), _puncture_of(a.x1, a.y1))
                for a in self.arcs]


def realize_pair(s: Slope) -> RealizedPair:
    q, p = s.q, s.p
    first = Segment(0, 0, q, p)
    used = {(0, 0), (q % 2, p % 2)}
    start = min(pt for pt in _CONE_POINT.values() if pt not in used)
    second = Segment(start[0], start[1], start[0] + q, start[1] + p)
    return RealizedPair(s, (first, second))


def partner(puncture: Puncture, s: Slope) -> Puncture:
    """Far end of the slope-``s`` arc that starts at ``puncture``."""
    x, y = _CONE_POINT[puncture]
    return _puncture_of(x + s.q, y + s.p)


def endpoint_parity(s: Slope) -> Parity:
    ends = realize_pair(s).endpoints()
    if all(a.is_minus != b.is_minus for a, b in ends):
        return Parity.ODD
    assert all(a.is_minus == b.is_minus for a, b in ends)
    return Parity.EVEN


def _count_half_odd_between(lo: int, hi: int) -> int:
    # lines at odd multiples of 1/2 (doubled) strictly inside (lo, hi)
    lo, hi = min(lo, hi), max(lo, hi)
    return sum(1 for k in range(lo - 1, hi + 1) if 2 * lo < 2 * k + 1 < 2 * hi)


def reference_crossings(pair: RealizedPair) -> list[tuple[int, int]]:
    """Per arc, ``(crossings with mu_perp, crossings with mu_t)``.

    ``mu_t`` is the image of the circle ``x = 1/4`` and ``mu_perp`` the image
    of ``y = 1/4``; their preimages in the plane are the lines at odd
    multiples of ``1/4``.
    """
    return [(_count_half_odd_between(a.y0, a.y1), _count_half_odd_between(a.x0, a.x1))
            for a in pair.arcs]


def _cross(ax: int, ay: int, bx: int, by: int) -> int:
    return ax * by - ay * bx


def _proper_crossing(a: Segment, b: Segment) -> tuple[int, int] | None:
    """Parameter ``t = num/den`` along ``a`` of an interior crossing, else None."""
    rx, ry = a.x1 - a.x0, a.y1 - a.y0
    sx, sy = b.x1 - b.x0, b.y1 - b.y0
    den = _cross(rx, ry, sx, sy)
    if den == 0:
        return None
    wx, wy = b.x0 - a.x0, b.y0 - a.y0
    t = _cross(wx, wy, sx, sy)
    u = _cross(wx, wy, rx, ry)
    if den < 0:
        den, t, u = -den, -t, -u
    if 0 < t < den and 0 < u < den:
        return t, den
    return None


def _canonical(a: Segment, t: int, den: int) -> tuple[int, int, int]:
    """Exact representative of ``a(t/den)`` modulo the orbifold group."""
    xn = a.x0 * den + t * (a.x1 - a.x0)
    yn = a.y0 * den + t * (a.y1 - a.y0)
    g = math.gcd(math.gcd(xn, yn), den)
    xn, yn, den = xn // g, yn // g, den // g
    m = 2 * den
    return min((xn % m, yn % m), (-xn % m, -yn % m)) + (den,)


def _window(a: RealizedPair, b_arcs: list[Segment], margin: int) -> tuple[int, int, int, int]:
    boxes = [s.bbox() for s in a.arcs] + [s.bbox() for s in b_arcs]
    x0 = min(bx[0] for bx in boxes) - 2 * margin
    y0 = min(bx[1] for bx in boxes) - 2 * margin
    x1 = max(bx[2] for bx in boxes) + 2 * margin
    y1 = max(bx[3] for bx in boxes) + 2 * margin
    return x0, y0, x1, y1


def _quotient_hits(a: RealizedPair, b: RealizedPair, margin: int) -> Iterator[tuple[int, int, int]]:
    if a.slope == b.slope:
        raise EqualSlopes(f"both configurations have slope {a.slope}")
    for sign in (1, -1):
        b_arcs = [s if sign == 1 else s.negate() for s in b.arcs]
        wx0, wy0, wx1, wy1 = _window(a, b_arcs, margin)
        # any translate 2n that can move a b-arc onto an a-arc has
        # |2n| bounded by the window extent
        nx_max = (wx1 - wx0) // 2
        ny_max = (wy1 - wy0) // 2
        for sa, sb in product(a.arcs, b_arcs):
            ax0, ay0, ax1, ay1 = sa.bbox()
            bx0, by0, bx1, by1 = sb.bbox()
            for nx in range(-nx_max, nx_max + 1):
                dx = 2 * nx
                if bx1 + dx < ax0 or bx0 + dx > ax1:
                    continue
                for ny in range(-ny_max, ny_max + 1):
                    dy = 2 * ny
                    if by1 + dy < ay0 or by0 + dy > ay1:
                        continue
                    hit = _proper_crossing(sa, sb.shift(dx, dy))
                    if hit is not None:
                        yield _canonical(sa, *hit)


def count_crossings(a: RealizedPair, b: RealizedPair, margin: int = 1) -> int:
    """Exact number of crossings of two realized pairs in the pillowcase.

    Crossings at the punctures are not counted.  ``margin`` widens the
    translate window (in lattice units); the count does not depend on it.
    """
    return len(set(_quotient_hits(a, b, margin)))


def crossing_points(a: RealizedPair, b: RealizedPair, margin: int = 1) -> list[PillowPoint]:
    """Crossing points, each as its canonical point of the unit square."""
    pts = set()
    for xn, yn, den in _quotient_hits(a, b, margin):
        pts.add(PillowPoint(Fraction(xn, 2 * den), Fraction(yn, 2 * den)))
    return sorted(pts)


def _closed_intersection(a: Segment, b: Segment) -> tuple[Fraction, Fraction] | None:
    rx, ry = a.x1 - a.x0, a.y1 - a.y0
    sx, sy = b.x1 - b.x0, b.y1 - b.y0
    den = _cross(rx, ry, sx, sy)
    if den == 0:
        return None
    wx, wy = b.x0 - a.x0, b.y0 - a.y0
    t = Fraction(_cross(wx, wy, sx, sy), den)
    u = Fraction(_cross(wx, wy, rx, ry), den)
    if 0 <= t <= 1 and 0 <= u <= 1:
        return a.x0 + t * rx, a.y0 + t * ry
    return None


def torus_lift_counts(a: RealizedPair, b: RealizedPair) -> tuple[int, int, int]:
    """Intersections of the preimages on the torus double cover.

    Each pair lifts to two disjoint closed geodesics.  Returns
    ``(total, at_cone_points, surviving_in_quotient)`` where the last entry
    is ``(total - at_cone_points) / 2``.
    """
    if a.slope == b.slope:
        raise EqualSlopes(f"both configurations have slope {a.slope}")

    def closed(seg: Segment) -> Segment:
        # the full closed geodesic: twice the arc, in doubled coordinates
        return Segment(seg.x0, seg.y0, seg.x0 + 2 * (seg.x1 - seg.x0),
                       seg.y0 + 2 * (seg.y1 - seg.y0))

    la = [closed(s) for s in a.arcs]
    lb = [closed(s) for s in b.arcs]
    def extent(curves: list[Segment]) -> int:
        return max(max(bx[2] - bx[0], bx[3] - bx[1]) for bx in (c.bbox() for c in curves))

    # a translate 2n can only bring the curves together if |2n| is at most
    # the sum of their extents plus the cone-point offsets
    ext = (extent(la) + extent(lb)) // 2 + 2
    points = set()
    for sa, sb in product(la, lb):
        for nx, ny in product(range(-ext, ext + 1), repeat=2):
            hit = _closed_intersection(sa, sb.shift(2 * nx, 2 * ny))
            if hit is not None:
                points.add((hit[0] % 2, hit[1] % 2))
    total = len(points)
    at_cones = sum(1 for x, y in points if x.denominator == 1 and y.denominator == 1)
    survivors, rem = divmod(total - at_cones, 2)
    assert rem == 0
    return total, at_cones, survivors
