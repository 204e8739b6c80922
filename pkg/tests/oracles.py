"""Brute-force oracles, kept independent of the code paths they check."""
from fractions import Fraction
from itertools import product


def companion_search(m, n):
    """All (p, q) with 0 < p < m, 0 < q < n and mq - np = 1."""
    return [(p, q) for p in range(1, m) for q in range(1, n) if m * q - n * p == 1]


def interior_points_fraction(corners):
    """Lattice points strictly inside a convex polygon, via Fraction barycentrics."""
    xs = [c[0] for c in corners]
    ys = [c[1] for c in corners]
    o, a, _, b = corners  # parallelogram o, o+a, o+a+b, o+b
    ax, ay = a[0] - o[0], a[1] - o[1]
    bx, by = b[0] - o[0], b[1] - o[1]
    det = ax * by - ay * bx
    found = []
    for x, y in product(range(min(xs), max(xs) + 1), range(min(ys), max(ys) + 1)):
        dx, dy = x - o[0], y - o[1]
        s = Fraction(dx * by - dy * bx, det)
        t = Fraction(ax * dy - ay * dx, det)
        if 0 < s < 1 and 0 < t < 1:
            found.append((x, y))
    return found


def pick_interior(area2, boundary):
    """Interior lattice count from Pick's theorem, given twice the area."""
    i2 = area2 - boundary + 2
    assert i2 % 2 == 0
    return i2 // 2


def words(letters, length):
    return product(letters, repeat=length)


def _matmul(x, y):
    return [[x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]],
            [x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]]]


def _inv(m):
    (a, b), (c, d) = m
    det = a * d - b * c
    return [[det * d, -det * b], [-det * c, det * a]]


def orbit_by_words(start, generators, radius):
    """Every reduced fraction reached by some word of length <= radius.

    ``generators`` maps names to 2x2 nested lists; slopes are (p, q) pairs
    normalized by gcd with q >= 0 (and 1/0 for the point at infinity).
    """
    from math import gcd

    def norm(p, q):
        g = gcd(p, q)
        p, q = p // g, q // g
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        return p, q

    mats = []
    for m in generators.values():
        mats += [m, _inv(m)]
    out = set()
    for length in range(radius + 1):
        for w in words(range(len(mats)), length):
            total = [[1, 0], [0, 1]]
            for i in w:
                # left-to-right action: later letters act after earlier ones
                total = _matmul(mats[i], total)
            p = total[0][0] * start[0] + total[0][1] * start[1]
            q = total[1][0] * start[0] + total[1][1] * start[1]
            out.add(norm(p, q))
    return out
