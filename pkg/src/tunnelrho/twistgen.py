"""Unimodular actions on slopes and breadth-first search over their words.

Models the tangle replacement that moves the torus-knot value ``rho = 1`` to
other classes of Q/2Z.  Only the full twist ``T`` about the tunnel meridian
is anchored in the topology (it shifts a slope by 2).  The other default
generators are a configurable model of vertical full twists (``U``) and
strand half-twists (``H``), and every claim here is relative to that model.

Words act left to right: ``apply_word(w1 + w2, s) == apply_word(w2, apply_word(w1, s))``.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from importlib import resources
from itertools import groupby
from typing import Iterable, Mapping

import jsonschema

from .errors import EvenNumeratorTarget, NotFound, NotUnimodular, UnknownGenerator
from .slope import ONE, Parity, Slope, SlopeMod2, parity, reduce_mod2

__all__ = [
    "Matrix",
    "GeneratorSet",
    "TwistWord",
    "DEFAULT_GENERATORS",
    "FULL_TWIST",
    "load_generators",
    "apply_word",
    "word_trace",
    "orbit",
    "realize",
]

Matrix = tuple[int, int, int, int]  # rows (a, b), (c, d)

FULL_TWIST: Matrix = (1, 2, 0, 1)


def _det(m: Matrix) -> int:
    a, b, c, d = m
    return a * d - b * c


def _inverse(m: Matrix) -> Matrix:
    a, b, c, d = m
    det = _det(m)
    return (det * d, -det * b, -det * c, det * a)


def _act(m: Matrix, s: Slope) -> Slope:
    a, b, c, d = m
    return Slope(a * s.p + b * s.q, c * s.p + d * s.q)


@dataclass(frozen=True)
class GeneratorSet:
    """Named unimodular matrices acting on column vectors ``(p, q)``.

    ``T`` is always present and equal to the full twist ``[[1, 2], [0, 1]]``.
    Every generator must keep odd numerators odd (upper row ``odd, even``).
    """

    matrices: tuple[tuple[str, Matrix], ...]

    def __init__(self, matrices: Mapping[str, Iterable[int]]) -> None:
        mats = {name: tuple(int(v) for v in m) for name, m in matrices.items()}
        mats.setdefault("T", FULL_TWIST)
        if mats["T"] != FULL_TWIST:
            raise ValueError(f"T must be the full twist {FULL_TWIST}, got {mats['T']}")
        for name, m in mats.items():
            if len(m) != 4:
                raise ValueError(f"generator {name} needs four entries")
            if abs(_det(m)) != 1:
                raise NotUnimodular(f"generator {name} = {m} has determinant {_det(m)}")
            if m[0] % 2 != 1 or m[1] % 2 != 0:
                raise ValueError(f"generator {name} = {m} does not preserve odd numerators")
        object.__setattr__(self, "matrices", tuple(sorted(mats.items())))

    @property
    def names(self) -> list[str]:
        return [name for name, _ in self.matrices]

    def __getitem__(self, name: str) -> Matrix:
        for n, m in self.matrices:
            if n == name:
                return m
        raise UnknownGenerator(f"no generator named {name!r}")

    def letters(self) -> list[tuple[str, int]]:
        """Single-step moves in search order: each name, positive power first."""
        return [(name, e) for name in self.names for e in (1, -1)]

    def power(self, name: str, k: int) -> Matrix:
        m = self[name] if k >= 0 else _inverse(self[name])
        out: Matrix = (1, 0, 0, 1)
        for _ in range(abs(k)):
            a, b, c, d = out
            e, f, g, h = m
            out = (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
        return out


DEFAULT_GENERATORS = GeneratorSet({"T": FULL_TWIST, "U": (1, 0, 2, 1), "H": (1, 0, 1, 1)})


def load_generators(path) -> GeneratorSet:
    """Read a JSON object mapping generator names to ``[a, b, c, d]``."""
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    schema = json.loads(resources.files("tunnelrho.schemas")
                        .joinpath("generators.schema.json").read_text())
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as exc:
        raise ValueError(f"generator file: {exc.message}") from None
    return GeneratorSet(doc)


@dataclass(frozen=True)
class TwistWord:
    """Sequence of ``(generator, power)`` pairs; empty means identity."""

    letters: tuple[tuple[str, int], ...] = ()

    @classmethod
    def from_steps(cls, steps: Iterable[tuple[str, int]]) -> TwistWord:
        """Merge consecutive steps on the same generator into powers."""
        merged = []
        for name, group in groupby(steps, key=lambda st: st[0]):
            k = sum(e for _, e in group)
            if k:
                merged.append((name, k))
        return cls(tuple(merged))

    @classmethod
    def parse(cls, text: str) -> TwistWord:
        """Parse ``"T^2 H^-1"``; ``""`` or ``"e"`` is the identity."""
        letters = []
        for tok in text.split():
            if tok == "e":
                continue
            name, _, k = tok.partition("^")
            letters.append((name, int(k) if k else 1))
        return cls(tuple(letters))

    def __add__(self, other: TwistWord) -> TwistWord:
        return TwistWord(self.letters + other.letters)

    def __len__(self) -> int:
        return sum(abs(k) for _, k in self.letters)

    def __str__(self) -> str:
        return " ".join(f"{n}^{k}" for n, k in self.letters) or "e"


def apply_word(word: TwistWord, s: Slope, gens: GeneratorSet = DEFAULT_GENERATORS) -> Slope:
    for name, k in word.letters:
        s = _act(gens.power(name, k), s)
    return s


def word_trace(word: TwistWord, s: Slope, gens: GeneratorSet = DEFAULT_GENERATORS) -> list[Slope]:
    """Slopes visited, one per unit step, starting with ``s``."""
    out = [s]
    for name, k in word.letters:
        m = gens[name] if k > 0 else _inverse(gens[name])
        for _ in range(abs(k)):
            out.append(_act(m, out[-1]))
    return out


def orbit(start: Slope, gens: GeneratorSet = DEFAULT_GENERATORS, radius: int = 1) -> set[Slope]:
    """Every slope reachable from ``start`` by at most ``radius`` unit steps."""
    if radius < 0:
        raise ValueError("radius must be non-negative")
    moves = [(gens[n] if e > 0 else _inverse(gens[n])) for n, e in gens.letters()]
    seen = {start}
    frontier = [start]
    for _ in range(radius):
        nxt = []
        for s in frontier:
            for m in moves:
                t = _act(m, s)
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return seen


def realize(target: SlopeMod2 | Slope, gens: GeneratorSet = DEFAULT_GENERATORS,
            max_len: int = 8, start: Slope = ONE) -> TwistWord:
    """Shortest word carrying ``start`` into the Q/2Z class ``target``.

    Among shortest words the lexicographically smallest step sequence wins
    (generators by name, positive step before negative).  The result is
    re-applied and checked before it is returned.
    """
    if isinstance(target, Slope):
        target = reduce_mod2(target)
    if parity(target.rep) is not Parity.ODD:
        raise EvenNumeratorTarget(f"{target.rep} has even numerator; rho is always odd")
    letters = gens.letters()
    moves = {(n, e): (gens[n] if e > 0 else _inverse(gens[n])) for n, e in letters}

    def hit(s: Slope) -> bool:
        return not s.is_infinite and reduce_mod2(s) == target

    parent: dict[Slope, tuple[Slope, tuple[str, int]] | None] = {start: None}
    queue = deque([(start, 0)])
    found = start if hit(start) else None
    while queue and found is None:
        s, depth = queue.popleft()
        if depth == max_len:
            continue
        for letter in letters:
            t = _act(moves[letter], s)
            if t in parent:
                continue
            parent[t] = (s, letter)
            if hit(t):
                found = t
                break
            queue.append((t, depth + 1))
    if found is None:
        raise NotFound(f"no word of length <= {max_len} reaches {target}")
    steps = []
    node = found
    while parent[node] is not None:
        node, letter = parent[node]
        steps.append(letter)
    word = TwistWord.from_steps(reversed(steps))
    assert reduce_mod2(apply_word(word, start, gens)) == target
    return word
