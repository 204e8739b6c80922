"""Slopes of complete arc pairs on the 4-punctured sphere.

A complete pair of arcs is classified up to isotopy by an extended rational
``p/q``: ``|p|`` counts crossings of one arc with the separating meridian
``mu_perp`` and ``q`` counts crossings with the tunnel meridian ``mu_t``.
Slopes are stored in a single canonical form (``q >= 0``, sign on ``p``),
so equality and hashing coincide with isotopy.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import InfiniteSlope

__all__ = [
    "Slope",
    "SlopeMod2",
    "Parity",
    "INFINITY",
    "ZERO",
    "ONE",
    "parse_slope",
    "delta",
    "min_intersections",
    "parity",
    "add_full_twists",
    "reduce_mod2",
]


@dataclass(frozen=True, order=True)
class Slope:
    """Reduced extended rational ``p/q``.

    Construction normalizes any integer pair that is not ``(0, 0)``::

        >>> Slope(4, -6)
        Slope(p=-2, q=3)
        >>> Slope(-5, 0)
        Slope(p=1, q=0)
    """

    p: int
    q: int

    def __post_init__(self) -> None:
        p, q = int(self.p), int(self.q)
        if p == 0 and q == 0:
            raise ValueError("0/0 is not a slope")
        g = math.gcd(p, q)
        p, q = p // g, q // g
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"

    def __add__(self, k: int) -> Slope:
        # integer shift only; used by the twist action
        if not isinstance(k, int):
            return NotImplemented
        return Slope(self.p + k * self.q, self.q)


INFINITY = Slope(1, 0)
ZERO = Slope(0, 1)
ONE = Slope(1, 1)


def parse_slope(text: str) -> Slope:
    """Parse ``"p/q"``, a bare integer, or ``"inf"``.

    Non-reduced input is normalized silently (``"2/6"`` gives ``1/3``).
    Raises ``ValueError`` on anything else.
    """
    s = text.strip()
    if s.lower() in ("inf", "infinity", "∞"):
        return INFINITY
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a slope: {text!r}") from None
    return Slope(p, q)


class Parity(enum.Enum):
    ODD = "Odd"
    EVEN = "Even"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class SlopeMod2:
    """Element of Q/2Z, held by its canonical representative.

    The representative has numerator in the half-open interval ``(-q, q]``.
    """

    rep: Slope

    def __post_init__(self) -> None:
        r = self.rep
        if r.is_infinite:
            raise InfiniteSlope("the infinite slope has no class in Q/2Z")
        if not (-r.q < r.p <= r.q):
            raise ValueError(f"{r} is not a canonical Q/2Z representative")

    def __str__(self) -> str:
        return f"{self.rep} (mod 2)"


def delta(a: Slope, b: Slope) -> int:
    """Distance ``|p q' - p' q|`` between two slopes."""
    return abs(a.p * b.q - b.p * a.q)


def min_intersections(a: Slope, b: Slope) -> int:
    """Minimal number of intersection points of the two complete pairs."""
    d = delta(a, b)
    return 0 if d <= 1 else 2 * d - 2


def parity(a: Slope) -> Parity:
    return Parity.ODD if a.p % 2 else Parity.EVEN


def add_full_twists(a: Slope, k: int) -> Slope:
    """Apply ``k`` full Dehn twists about ``mu_t``: ``p/q -> (p + 2kq)/q``."""
    if a.is_infinite:
        raise InfiniteSlope("full twists about mu_t fix the infinite slope")
    return a + 2 * k


def reduce_mod2(a: Slope) -> SlopeMod2:
    if a.is_infinite:
        raise InfiniteSlope("the infinite slope has no class in Q/2Z")
    p = a.p % (2 * a.q)
    if p > a.q:
        p -= 2 * a.q
    return SlopeMod2(Slope(p, a.q))
