import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tunnelrho import (
    INFINITY,
    InfiniteSlope,
    InvalidSystem,
    MixedBases,
    NoWaves,
    Parity,
    Slope,
    delta,
    parity,
    parse_slope,
)
from tunnelrho.arcsys import (
    ArcClass,
    ArcSystem,
    AugmentedSlope,
    Base,
    derive_augmented_slope,
    rho_of_system,
    system_from_json,
    system_to_json,
    twist_system,
    validate,
    waves_from_pair,
    waves_of,
)
from tunnelrho.pillowcase import Puncture, count_crossings, realize_pair

S = parse_slope
ML, MR, PL, PR = Puncture.MINUS_LEFT, Puncture.MINUS_RIGHT, Puncture.PLUS_LEFT, Puncture.PLUS_RIGHT


def wave(x, s):
    return ArcClass(x, x, S(s))


def test_arc_class_ends_must_match_slope():
    assert ArcClass(ML, PR, S("1/3")).ends == (ML, PR)
    assert ArcClass(PR, ML, S("1/3")) == ArcClass(ML, PR, S("1/3"))
    with pytest.raises(ValueError):
        ArcClass(ML, PL, S("1/3"))
    with pytest.raises(ValueError):
        ArcClass(ML, PR, S("2/3"))


def test_wave_needs_odd_slope():
    with pytest.raises(ValueError):
        wave(ML, "2/3")
    assert wave(ML, "1/3").enclosed is PR
    assert wave(MR, "1/3").enclosed is PL


def test_single_wave_is_unbalanced():
    report = validate(ArcSystem([(wave(ML, "1/3"), 1)]))
    assert not report.valid
    assert report.end_counts[MR] == 0


def test_paired_waves_are_balanced():
    report = validate(ArcSystem([(wave(ML, "1/3"), 1), (wave(MR, "1/3"), 1)]))
    assert report.balanced and report.valid


def test_complete_pair_is_valid():
    system = ArcSystem([(ArcClass(ML, PR, S("1/3")), 1), (ArcClass(MR, PL, S("1/3")), 1)])
    assert validate(system).valid
    assert waves_of(system) == []
    with pytest.raises(NoWaves):
        derive_augmented_slope(system)


def test_waves_of_lists_bases():
    system = waves_from_pair(S("1/3"), Base.MINUS)
    bases = [x for x, _ in waves_of(system)]
    assert bases == [ML, MR]


def test_waves_of_rejects_unbalanced():
    with pytest.raises(InvalidSystem):
        waves_of(ArcSystem([(wave(PL, "1/3"), 1)]))


@pytest.mark.parametrize("base, tag", [(Base.MINUS, "MinusMeridian"), (Base.PLUS, "PlusMeridian")])
def test_derive_from_doubled_pair(base, tag):
    system = waves_from_pair(S("1/3"), base)
    assert validate(system).valid
    aug = derive_augmented_slope(system)
    assert aug == AugmentedSlope(S("1/3"), base)
    assert aug.base.value == tag


def test_infinite_augmented_slope_is_flagged():
    system = waves_from_pair(INFINITY, Base.MINUS)
    aug = derive_augmented_slope(system)
    assert aug.is_infinite
    with pytest.raises(InfiniteSlope):
        rho_of_system(system)


def test_mixed_bases():
    system = ArcSystem([(wave(ML, "1/3"), 1), (wave(MR, "1/3"), 1),
                        (wave(PL, "1/3"), 1), (wave(PR, "1/3"), 1)])
    assert not validate(system).valid
    with pytest.raises(MixedBases):
        derive_augmented_slope(system)


@pytest.mark.parametrize("derived, rho", [("7/3", "1/3"), ("-1/1", "1/1"), ("1/3", "1/3")])
def test_rho_of_system(derived, rho):
    assert rho_of_system(waves_from_pair(S(derived), Base.MINUS)).rep == S(rho)


def _neighbours(s, bound=6):
    """Slopes at distance exactly 1 from s, from a small search window."""
    out = set()
    for q in range(0, bound + 1):
        for p in range(-bound, bound + 1):
            if (p, q) != (0, 0) and delta(Slope(p, q), s) == 1:
                out.add(Slope(p, q))
    return sorted(out)


def test_compatibility_rule_agrees_with_pillowcase_disjointness():
    # an extra joining pair admitted next to the waves must be disjoint from
    # the spanning pair on the pillowcase, and every rejected one must cross it
    s = S("1/3")
    base_system = waves_from_pair(s, Base.MINUS)
    checked = 0
    for t in _neighbours(s) + [S("1/1"), S("2/1"), S("3/5")]:
        for a, b in realize_pair(t).endpoints():
            extended = ArcSystem(list(base_system) + [(ArcClass(a, b, t), 1)])
            report = validate(extended)
            crossings = count_crossings(realize_pair(t), realize_pair(s))
            if not any("delta" in v for v in report.violations):
                assert crossings == 0
            else:
                assert crossings > 0
            checked += 1
    assert checked > 10


def test_minus_minus_arc_allowed_beside_minus_waves_only():
    arc = (ArcClass(ML, MR, S("0/1")), 1)
    minus = ArcSystem(list(waves_from_pair(S("1/3"), Base.MINUS, with_arcs=False)) + [arc])
    plus = ArcSystem(list(waves_from_pair(S("1/3"), Base.PLUS, with_arcs=False)) + [arc, arc])
    assert validate(minus).valid
    # the plus waves enclose the minus punctures, which the arc would reach
    assert not validate(plus).valid


def test_arc_inside_annulus_must_be_spanning():
    w = wave(ML, "1/3")  # encloses PlusRight
    bad = ArcClass(PL, PR, S("0/1"))
    report = validate(ArcSystem([(w, 1), (wave(MR, "1/3"), 1), (bad, 1)]))
    assert any("inside the annulus" in v for v in report.violations)


# generated valid systems: waves from a doubled pair plus optional extras
odd_slopes = st.builds(Slope, st.integers(-15, 15).map(lambda k: 2 * k + 1), st.integers(1, 15))


@st.composite
def systems(draw):
    s = draw(odd_slopes)
    base = draw(st.sampled_from(list(Base)))
    mult = draw(st.integers(1, 3))
    classes = [(c, m * mult) for c, m in waves_from_pair(s, base, with_arcs=draw(st.booleans()))]
    if draw(st.booleans()):
        # a same-meridian arc that stays outside both annuli
        end = Puncture.MINUS_LEFT if base is Base.MINUS else Puncture.PLUS_LEFT
        for t in _neighbours(s, bound=20):
            arc_ends = realize_pair(t).endpoints()
            for a, b in arc_ends:
                if {a, b} == {end, end.other_copy}:
                    classes.append((ArcClass(a, b, t), draw(st.integers(1, 2))))
                    break
            else:
                continue
            break
    return ArcSystem(classes), s, base


@given(systems())
def test_generated_systems_are_valid(data):
    system, s, base = data
    assert validate(system).valid, validate(system).violations
    waves = waves_of(system)
    bases = {x for x, _ in waves}
    assert all(x.other_copy in bases for x in bases)
    aug = derive_augmented_slope(system)
    assert aug == AugmentedSlope(s, base)
    assert parity(aug.slope) is Parity.ODD


@given(systems(), st.integers(-5, 5))
def test_uniform_twist_equivariance(data, k):
    system, s, _ = data
    twisted = twist_system(system, k)
    assert validate(twisted).valid
    assert derive_augmented_slope(twisted).slope == Slope(s.p + 2 * k * s.q, s.q)
    assert rho_of_system(twisted) == rho_of_system(system)


def test_json_round_trip():
    system = waves_from_pair(S("3/5"), Base.PLUS)
    doc = json.loads(json.dumps(system_to_json(system)))
    assert system_from_json(doc) == system


@pytest.mark.parametrize("doc", [
    {"classes": [{"end1": "MinusLeft", "end2": "MinusLeft", "slope": "1/3", "colour": "red"}]},
    {"classes": [{"end1": "Nowhere", "end2": "MinusLeft", "slope": "1/3"}]},
    {"classes": [{"end1": "MinusLeft", "end2": "MinusLeft", "slope": "one third"}]},
    {"classes": [{"end1": "MinusLeft", "end2": "MinusLeft", "slope": "1/3", "mult": 0}]},
    {"classes": [], "extra": 1},
])
def test_json_strict_schema(doc):
    with pytest.raises(ValueError):
        system_from_json(doc)


def test_json_mult_defaults_to_one():
    doc = {"classes": [{"end1": "MinusLeft", "end2": "MinusLeft", "slope": "1/3"},
                       {"end1": "MinusRight", "end2": "MinusRight", "slope": "1/3", "mult": 1}]}
    system = system_from_json(doc)
    assert [m for _, m in system] == [1, 1]
