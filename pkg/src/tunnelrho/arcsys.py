"""Arc systems on the 4-punctured sphere and the augmented slope they define.

An :class:`ArcSystem` is the isotopy-level trace of a splitting sphere on the
4-punctured sphere: a multiset of arc classes, each recorded by its two ends
and a slope.  For a joining arc the slope is that of the complete pair it
belongs to.  A wave (both ends on one puncture ``X``) is the frontier of a
neighbourhood of an arc from ``X`` to some puncture ``Y`` of the other
meridian; the wave's slope is the slope of that spanning arc, and ``Y`` is
read off the pillowcase realization.
"""
from __future__ import annotations

import enum
import json
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable

import jsonschema

from .errors import InvalidSystem, MixedBases, NoWaves
from .pillowcase import Puncture, partner, realize_pair
from .slope import (
    Parity,
    Slope,
    SlopeMod2,
    add_full_twists,
    delta,
    parity,
    parse_slope,
    reduce_mod2,
)

__all__ = [
    "Puncture",
    "Base",
    "ArcClass",
    "ArcSystem",
    "AugmentedSlope",
    "ValidationReport",
    "validate",
    "waves_of",
    "derive_augmented_slope",
    "rho_of_system",
    "twist_system",
    "waves_from_pair",
    "load_system",
    "system_from_json",
    "system_to_json",
]


class Base(enum.Enum):
    MINUS = "MinusMeridian"
    PLUS = "PlusMeridian"

    @classmethod
    def of(cls, puncture: Puncture) -> Base:
        return cls.MINUS if puncture.is_minus else cls.PLUS

    def __str__(self) -> str:
        return self.value


_PUNCTURE_ORDER = list(Puncture)


@dataclass(frozen=True)
class ArcClass:
    end1: Puncture
    end2: Puncture
    slope: Slope

    def __post_init__(self) -> None:
        if _PUNCTURE_ORDER.index(self.end1) > _PUNCTURE_ORDER.index(self.end2):
            e1, e2 = self.end2, self.end1
            object.__setattr__(self, "end1", e1)
            object.__setattr__(self, "end2", e2)
        if self.is_wave:
            if parity(self.slope) is not Parity.ODD:
                raise ValueError(
                    f"wave at {self.end1} has spanning slope {self.slope}; "
                    "a spanning arc joins the two meridians, so p must be odd")
            return
        if self.end1.is_minus != self.end2.is_minus:
            if parity(self.slope) is not Parity.ODD:
                raise ValueError(f"{self.end1}-{self.end2} arc needs odd numerator, got {self.slope}")
        if partner(self.end1, self.slope) is not self.end2:
            raise ValueError(
                f"an arc of slope {self.slope} from {self.end1} ends at "
                f"{partner(self.end1, self.slope)}, not {self.end2}")

    @property
    def is_wave(self) -> bool:
        return self.end1 is self.end2

    @property
    def ends(self) -> tuple[Puncture, Puncture]:
        return self.end1, self.end2

    @property
    def enclosed(self) -> Puncture:
        """For a wave, the puncture cut off in the annulus it bounds."""
        if not self.is_wave:
            raise ValueError("only waves enclose a puncture")
        return partner(self.end1, self.slope)

    def sort_key(self) -> tuple:
        return (_PUNCTURE_ORDER.index(self.end1), _PUNCTURE_ORDER.index(self.end2),
                self.slope.q, self.slope.p)

    def __str__(self) -> str:
        kind = "wave" if self.is_wave else "arc"
        return f"{kind} {self.end1}-{self.end2} slope {self.slope}"


@dataclass(frozen=True)
class ArcSystem:
    """Multiset of arc classes with positive multiplicities."""

    classes: tuple[tuple[ArcClass, int], ...]

    def __init__(self, classes: Iterable[tuple[ArcClass, int]] | dict = ()) -> None:
        counts: Counter = Counter()
        items = classes.items() if isinstance(classes, dict) else classes
        for cls, mult in items:
            if mult <= 0:
                raise ValueError(f"multiplicity must be positive, got {mult}")
            counts[cls] += mult
        ordered = tuple(sorted(counts.items(), key=lambda kv: kv[0].sort_key()))
        object.__setattr__(self, "classes", ordered)

    def __iter__(self):
        return iter(self.classes)

    def __len__(self) -> int:
        return len(self.classes)

    def end_counts(self) -> dict[Puncture, int]:
        counts = {x: 0 for x in Puncture}
        for cls, mult in self.classes:
            counts[cls.end1] += mult
            counts[cls.end2] += mult
        return counts


@dataclass(frozen=True)
class AugmentedSlope:
    slope: Slope
    base: Base

    def __post_init__(self) -> None:
        if parity(self.slope) is not Parity.ODD:
            raise ValueError(f"augmented slope must have odd numerator, got {self.slope}")

    @property
    def is_infinite(self) -> bool:
        return self.slope.is_infinite

    def __str__(self) -> str:
        return f"{self.slope} based at {self.base}"


@dataclass
class ValidationReport:
    end_counts: dict[Puncture, int]
    violations: list[str] = field(default_factory=list)

    @property
    def minus_balanced(self) -> bool:
        c = self.end_counts
        return c[Puncture.MINUS_LEFT] == c[Puncture.MINUS_RIGHT]

    @property
    def plus_balanced(self) -> bool:
        c = self.end_counts
        return c[Puncture.PLUS_LEFT] == c[Puncture.PLUS_RIGHT]

    @property
    def balanced(self) -> bool:
        return self.minus_balanced and self.plus_balanced

    @property
    def valid(self) -> bool:
        return self.balanced and not self.violations


def _conflict(a: ArcClass, b: ArcClass) -> str | None:
    """Reason two distinct classes cannot be made disjoint, or None."""
    if a.is_wave and b.is_wave:
        if Base.of(a.end1) is not Base.of(b.end1):
            return f"waves on both meridians: {a}; {b}"
        if a.slope != b.slope:
            return f"waves with different slopes: {a}; {b}"
        return None
    if not a.is_wave and not b.is_wave:
        if delta(a.slope, b.slope) > 1:
            return f"delta {delta(a.slope, b.slope)} > 1: {a}; {b}"
        return None
    wave, arc = (a, b) if a.is_wave else (b, a)
    if delta(wave.slope, arc.slope) > 1:
        return f"delta {delta(wave.slope, arc.slope)} > 1: {wave}; {arc}"
    # the only arcs reaching the enclosed puncture are parallel to the
    # spanning arc of the annulus
    if wave.enclosed in arc.ends:
        spanning = {wave.end1, wave.enclosed}
        if arc.slope != wave.slope or set(arc.ends) != spanning:
            return f"arc reaches {wave.enclosed} inside the annulus of {wave}: {arc}"
    return None


def validate(system: ArcSystem) -> ValidationReport:
    report = ValidationReport(system.end_counts())
    if not report.minus_balanced:
        report.violations.append("unbalanced ends on the minus meridian")
    if not report.plus_balanced:
        report.violations.append("unbalanced ends on the plus meridian")
    classes = [c for c, _ in system.classes]
    for i, a in enumerate(classes):
        for b in classes[i + 1:]:
            reason = _conflict(a, b)
            if reason:
                report.violations.append(reason)
    return report


def _require_valid(system: ArcSystem) -> None:
    report = validate(system)
    if not report.valid:
        raise InvalidSystem("; ".join(report.violations))


def waves_of(system: ArcSystem) -> list[tuple[Puncture, ArcClass]]:
    """All waves, tagged by base puncture.  The system must be valid."""
    _require_valid(system)
    waves = [(cls.end1, cls) for cls, _ in system.classes if cls.is_wave]
    bases = {x for x, _ in waves}
    for x in bases:
        assert x.other_copy in bases, f"wave at {x} without a wave at {x.other_copy}"
    return waves


def derive_augmented_slope(system: ArcSystem) -> AugmentedSlope:
    """Slope of the complete pair spanned by the waves, plus the wave meridian.

    Raises :class:`NoWaves` when the trace has no waves (the disk misses both
    meridians) and :class:`MixedBases` when waves sit on both meridians.
    The result may be infinite; check ``is_infinite``.
    """
    raw = [cls for cls, _ in system.classes if cls.is_wave]
    if not raw:
        raise NoWaves("no waves: the splitting disk misses both meridians")
    bases = {Base.of(cls.end1) for cls in raw}
    if len(bases) > 1:
        raise MixedBases("waves are based on both the plus and minus meridian")
    waves = waves_of(system)
    slopes = {cls.slope for _, cls in waves}
    assert len(slopes) == 1
    return AugmentedSlope(slopes.pop(), bases.pop())


def rho_of_system(system: ArcSystem) -> SlopeMod2:
    return reduce_mod2(derive_augmented_slope(system).slope)


def twist_system(system: ArcSystem, k: int) -> ArcSystem:
    """Apply ``k`` full twists about ``mu_t`` to every class."""
    return ArcSystem([(ArcClass(c.end1, c.end2, add_full_twists(c.slope, k)), m)
                      for c, m in system.classes])


def waves_from_pair(s: Slope, base: Base, *, with_arcs: bool = True) -> ArcSystem:
    """Double the realized complete pair of slope ``s`` into waves.

    Each arc of the pair is replaced by the frontier of a neighbourhood of
    itself and its end on the far meridian, giving a wave at its end on
    ``base``.  With ``with_arcs`` the pair itself is kept alongside.
    """
    if parity(s) is not Parity.ODD:
        raise ValueError(f"slope {s} does not join the two meridians")
    classes = []
    for a, b in realize_pair(s).endpoints():
        here = a if Base.of(a) is base else b
        classes.append((ArcClass(here, here, s), 1))
        if with_arcs:
            classes.append((ArcClass(a, b, s), 1))
    return ArcSystem(classes)


def _schema(name: str) -> dict:
    return json.loads(resources.files("tunnelrho.schemas").joinpath(name).read_text())


def system_from_json(doc: dict) -> ArcSystem:
    """Build a system from the strict JSON form; the ``analysis`` key is ignored."""
    try:
        jsonschema.validate(doc, _schema("arc_system.schema.json"))
    except jsonschema.ValidationError as exc:
        raise ValueError(f"arc system JSON: {exc.message}") from None
    classes = []
    for item in doc["classes"]:
        cls = ArcClass(Puncture(item["end1"]), Puncture(item["end2"]), parse_slope(item["slope"]))
        classes.append((cls, item.get("mult", 1)))
    return ArcSystem(classes)


def load_system(path) -> ArcSystem:
    with open(path, encoding="utf-8") as fh:
        return system_from_json(json.load(fh))


def system_to_json(system: ArcSystem) -> dict:
    return {"classes": [{"end1": c.end1.value, "end2": c.end2.value,
                         "slope": str(c.slope), "mult": m}
                        for c, m in system.classes]}
