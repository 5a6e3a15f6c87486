"""Regime classification, exact capacity regions, corners, and the q=1 display."""

import random
from fractions import Fraction

import pytest

from layercap import (
    ChannelSpec,
    FadingPmf,
    bound_a,
    bound_b,
    bound_c,
    classify,
    equals,
    examples,
    expect_pos_diff,
    mixed_example,
    moderate_bounds,
    outer_region,
    random_moderate_spec,
    random_strong_spec,
    random_weak_spec,
    strong_region,
    support,
    swap_users,
    symmetric_bernoulli,
    symmetric_q1_region,
    weak_corner,
    weak_region,
    weak_sum_capacity,
)

F = Fraction

MOD1 = symmetric_bernoulli(F(4, 5), F(1, 2))
WEAK1 = symmetric_bernoulli(F(9, 10), F(3, 10))
STRONG1 = symmetric_bernoulli(F(1, 2), F(4, 5))


@pytest.mark.parametrize(
    "spec,label",
    [
        (STRONG1, "strong"),
        (WEAK1, "weak"),
        (MOD1, "moderate"),
        (mixed_example(), "mixed"),
    ],
)
def test_classify_labels(spec, label):
    assert classify(spec).regime == label


def test_classify_zero_levels_is_strong():
    zero = FadingPmf.point(0, 0)
    spec = ChannelSpec(n11=zero, n12=zero, n21=zero, n22=zero)
    rep = classify(spec)
    assert rep.regime == "strong"
    assert rep.conjecture_precondition
    assert rep.strong_1 == () and rep.weak_1 == ()


def test_conjecture_precondition():
    assert classify(STRONG1).conjecture_precondition
    assert classify(WEAK1).conjecture_precondition
    assert not classify(MOD1).conjecture_precondition


def test_strong_region_pinned():
    region = strong_region(STRONG1)
    assert region.vertices == (
        (F(0), F(0)),
        (F(1, 2), F(0)),
        (F(1, 2), F(2, 5)),
        (F(2, 5), F(1, 2)),
        (F(0), F(1, 2)),
    )
    assert support(region, F(1), F(1)) == F(9, 10)
    assert equals(region, outer_region(STRONG1))


def test_strong_region_matches_outer_randomized():
    rng = random.Random(211)
    for _ in range(30):
        spec = random_strong_spec(rng, rng.randint(0, 3))
        assert equals(strong_region(spec), outer_region(spec))


def test_weak_region_pinned():
    region = weak_region(WEAK1)
    assert region.vertices == (
        (F(0), F(0)),
        (F(9, 10), F(0)),
        (F(9, 10), F(3, 100)),
        (F(63, 100), F(63, 100)),
        (F(3, 100), F(9, 10)),
        (F(0), F(9, 10)),
    )
    assert weak_sum_capacity(WEAK1) == F(63, 50)
    assert equals(region, outer_region(WEAK1))


def test_weak_sum_capacity_is_support_value():
    rng = random.Random(77)
    for _ in range(20):
        spec = random_weak_spec(rng, rng.randint(1, 3))
        c_sum = weak_sum_capacity(spec)
        assert c_sum == expect_pos_diff(spec.n22, spec.n12) + expect_pos_diff(
            spec.n11, spec.n21
        )
        assert support(outer_region(spec), F(1), F(1)) == c_sum
        assert bound_b(spec, 1, F(1)) == c_sum
        assert bound_b(spec, 2, F(1)) == c_sum


def test_weak_corner_pinned():
    hi = weak_corner(WEAK1, F(1))
    assert hi.corner == (F(63, 100), F(63, 100))
    assert hi.private_layers == frozenset({1})
    assert hi.common_layers == frozenset()
    lo = weak_corner(WEAK1, F(1, 10))
    assert lo.corner == (F(9, 10), F(3, 100))
    assert lo.private_layers == frozenset()
    assert lo.common_layers == frozenset({1})


def test_weak_corner_interference_free():
    zero = FadingPmf.point(0, 2)
    spec = ChannelSpec(
        n11=FadingPmf.uniform(2), n12=zero, n21=zero, n22=FadingPmf.uniform(2)
    )
    assert classify(spec).regime == "weak"
    # with no cross links the corner is the rectangle corner (E N11, E N22)
    for omega in (F(1, 4), F(1)):
        alloc = weak_corner(spec, omega)
        assert alloc.corner == (F(1), F(1))
        assert alloc.private_layers == frozenset({1, 2})


def test_weak_corner_tightness_randomized():
    rng = random.Random(55)
    for _ in range(20):
        spec = random_weak_spec(rng, rng.randint(1, 2))
        for k in (1, 3, 8):
            omega = F(k, 8)
            alloc = weak_corner(spec, omega)
            r1, r2 = alloc.corner
            assert r1 + omega * r2 == bound_b(spec, 1, omega)
            assert alloc.private_layers | alloc.common_layers == set(
                range(1, spec.q + 1)
            )
            assert not alloc.private_layers & alloc.common_layers


def test_weak_corner_rejects_bad_arguments():
    with pytest.raises(ValueError):
        weak_corner(WEAK1, F(0))
    with pytest.raises(ValueError):
        weak_corner(WEAK1, F(3, 2))
    with pytest.raises(ValueError):
        weak_corner(STRONG1, F(1))


def test_region_gating():
    with pytest.raises(ValueError):
        strong_region(WEAK1)
    with pytest.raises(ValueError):
        weak_region(MOD1)
    with pytest.raises(ValueError):
        weak_sum_capacity(STRONG1)
    with pytest.raises(ValueError):
        moderate_bounds(WEAK1, 1, "a", F(1))


@pytest.mark.parametrize(
    "family,args,value",
    [
        ("a", (F(1), None), F(6, 5)),
        ("b", (F(1), None), F(1)),
        ("c", (F(1), F(5, 8)), F(7, 5)),
        ("c", (F(1), F(1)), F(17, 10)),
    ],
)
def test_moderate_bounds_pinned(family, args, value):
    omega, mu = args
    assert moderate_bounds(MOD1, 1, family, omega, mu) == value


def test_moderate_simplifications_match_general_bounds():
    # the b and c short forms agree with the general bounds everywhere;
    # the a short form drops a clamp and only agrees above the last kink
    rng = random.Random(6021)
    for _ in range(15):
        spec = random_moderate_spec(rng, rng.randint(1, 3))
        for user in (1, 2):
            for k in range(0, 9):
                omega = F(k, 8)
                assert moderate_bounds(spec, user, "b", omega) == bound_b(
                    spec, user, omega
                )
                mu = omega * F(rng.randint(0, 4), 4)
                assert moderate_bounds(spec, user, "c", omega, mu) == bound_c(
                    spec, user, omega, mu
                )
            assert moderate_bounds(spec, user, "a", F(1)) == bound_a(spec, user, F(1))


def test_moderate_a_form_undershoots_below_kink():
    # at omega = 1/4 the clamp in the general a-bound is active for this
    # channel, so the short form must come out strictly smaller
    assert moderate_bounds(MOD1, 1, "a", F(1, 4)) < bound_a(MOD1, 1, F(1, 4))
    assert moderate_bounds(MOD1, 1, "a", F(4, 7)) == bound_a(MOD1, 1, F(4, 7))


def test_symmetric_q1_pinned():
    rep = symmetric_q1_region(F(4, 5), F(1, 2))
    assert rep.weight_a == F(4, 7)
    assert rep.weight_c == F(8, 13)
    assert rep.crossing == (F(4, 5), F(1, 10))
    assert rep.a_redundant
    # per-user cap, sum bound, and the weighted pair (e)
    cap = [p for p in rep.cap_planes if p.b == 0][0]
    assert (cap.a, cap.b, cap.c) == (5, 0, 4)
    assert (rep.sum_plane.a, rep.sum_plane.b, rep.sum_plane.c) == (1, 1, 1)
    # R1 + (8/13) R2 <= 56/65 clears denominators to 65 R1 + 40 R2 <= 56
    e_plane = [p for p in rep.c_planes if p.a < p.b * 2][0]
    assert (e_plane.a, e_plane.b, e_plane.c) == (65, 40, 56)
    assert equals(rep.region, outer_region(symmetric_bernoulli(F(4, 5), F(1, 2))))


def test_symmetric_q1_crossing_on_both_lines():
    rng = random.Random(14)
    for _ in range(40):
        p_c = F(rng.randint(1, 7), 8)
        p_d = p_c + F(rng.randint(1, 8), 16)
        if p_d >= 1 or not (p_d * p_c > p_d - p_c > 0):
            continue
        rep = symmetric_q1_region(p_d, p_c)
        x, y = rep.crossing
        assert y == p_c * (1 - p_d)
        b_plane = rep.a_planes[0]
        assert b_plane.a * x + b_plane.b * y == b_plane.c
        e_plane = rep.c_planes[0]
        assert e_plane.a * x + e_plane.b * y == e_plane.c


def test_symmetric_q1_redundancy_rule():
    # (b) adds nothing iff p_d - p_c >= p_c^2, including the boundary case
    assert symmetric_q1_region(F(4, 5), F(1, 2)).a_redundant
    assert symmetric_q1_region(F(3, 4), F(1, 2)).a_redundant
    assert not symmetric_q1_region(F(3, 5), F(1, 2)).a_redundant
    rng = random.Random(90)
    for _ in range(40):
        p_c = F(rng.randint(1, 7), 8)
        p_d = p_c + F(rng.randint(1, 15), 32)
        if p_d >= 1 or not (p_d * p_c > p_d - p_c > 0):
            continue
        rep = symmetric_q1_region(p_d, p_c)
        assert rep.a_redundant == (p_d - p_c >= p_c * p_c)


def test_symmetric_q1_argument_validation():
    with pytest.raises(ValueError):
        symmetric_q1_region(F(1, 2), F(1, 2))  # p_d - p_c = 0
    with pytest.raises(ValueError):
        symmetric_q1_region(F(9, 10), F(1, 10))  # p_d*p_c < p_d - p_c
    with pytest.raises(ValueError):
        symmetric_q1_region(F(3, 2), F(1, 2))


def test_examples_classify_as_named():
    ex = examples()
    assert classify(ex["strong"]).regime == "strong"
    assert classify(ex["weak"]).regime == "weak"
    assert classify(ex["moderate"]).regime == "moderate"
    assert classify(ex["det"]).regime in ("strong", "weak", "moderate", "mixed")


def test_mixed_flags_are_split():
    rep = classify(mixed_example())
    assert rep.regime == "mixed"
    assert any(rep.strong_1) or any(rep.strong_2)
    assert not (all(rep.strong_1) and all(rep.strong_2))


def test_classify_swap_symmetry():
    rng = random.Random(4096)
    from layercap import random_spec

    for _ in range(25):
        spec = random_spec(rng, rng.randint(1, 3))
        a = classify(spec)
        b = classify(swap_users(spec))
        assert a.regime == b.regime
        assert a.strong_1 == b.strong_2 and a.weak_1 == b.weak_2
        assert a.moderate_1 == b.moderate_2
