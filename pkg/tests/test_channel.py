"""Fading pmf plumbing: tails, difference tails, expectations, coefficients."""

from fractions import Fraction

import pytest

from layercap import (
    ChannelSpec,
    FadingPmf,
    as_fraction,
    diff_tail,
    expect,
    expect_max,
    expect_pos_diff,
    layer_coefficients,
    pos_diff_pmf,
    random_spec,
    swap_users,
    symmetric_bernoulli,
    tail,
)
import random

F = Fraction


def bern(p, q=1):
    return FadingPmf.bernoulli(F(p))


def test_uniform_tails():
    u = FadingPmf.uniform(2)
    assert tail(u, 0) == 1
    assert tail(u, 1) == F(2, 3)
    assert tail(u, 2) == F(1, 3)
    assert tail(u, 3) == 0
    assert expect(u) == 1


def test_point_mass_tails():
    p = FadingPmf.point(2, 3)
    assert [tail(p, l) for l in range(5)] == [1, 1, 1, 0, 0]
    assert expect(p) == 2


@pytest.mark.parametrize("levels", [[], [F(1, 2)], [F(1, 2), F(1, 3)]])
def test_pmf_rejects_bad_mass_vectors(levels):
    with pytest.raises(ValueError):
        FadingPmf(levels)


def test_pmf_rejects_negative_mass():
    with pytest.raises(ValueError):
        FadingPmf([F(3, 2), F(-1, 2)])


def test_as_fraction_rejects_floats():
    with pytest.raises(TypeError):
        as_fraction(0.5)
    assert as_fraction("1/3") == F(1, 3)
    assert as_fraction(2) == 2


def test_tail_range_checks():
    u = FadingPmf.uniform(2)
    with pytest.raises(ValueError):
        tail(u, -1)
    with pytest.raises(ValueError):
        tail(u, 4)


def test_diff_tail_pinned_values():
    # P(U - 1 >= 1) for U uniform on {0,1,2} is P(U = 2) = 1/3
    u = FadingPmf.uniform(2)
    one = FadingPmf.point(1, 2)
    assert diff_tail(u, one, 1) == F(1, 3)
    # independent Bernoulli levels: P(A=1, B=0) = (9/10)(7/10)
    assert diff_tail(bern("9/10"), bern("3/10"), 1) == F(63, 100)


def test_diff_tail_rejects_mismatched_supports():
    with pytest.raises(ValueError):
        diff_tail(FadingPmf.uniform(1), FadingPmf.uniform(2), 1)


def test_expect_max_pinned():
    assert expect_max(bern("1/2"), bern("1/3")) == F(2, 3)


def test_expectation_identities_random():
    rng = random.Random(20260819)
    for _ in range(60):
        spec = random_spec(rng, rng.randint(0, 3))
        a, b = spec.n11, spec.n21
        q = spec.q
        assert expect(a) == sum(tail(a, l) for l in range(1, q + 1))
        if q >= 1:
            assert expect_pos_diff(a, b) == sum(
                diff_tail(a, b, l) for l in range(1, q + 1)
            )
            total = sum(
                1 - (1 - tail(a, l)) * (1 - tail(b, l)) for l in range(1, q + 1)
            )
            assert expect_max(a, b) == total
        d = pos_diff_pmf(a, b)
        assert sum(d.masses) == 1
        for l in range(1, q + 1):
            assert tail(d, l) == diff_tail(a, b, l)


def test_pos_diff_pmf_point_masses():
    three = FadingPmf.point(3, 3)
    one = FadingPmf.point(1, 3)
    assert pos_diff_pmf(three, one) == FadingPmf.point(2, 3)
    assert pos_diff_pmf(one, three) == FadingPmf.point(0, 3)


def test_moderate_example_coefficients():
    spec = symmetric_bernoulli(F(4, 5), F(1, 2))
    co = layer_coefficients(spec)
    assert co.alpha1 == (F(2, 5),)
    assert co.beta1 == (F(7, 10),)
    assert co.gamma1 == (F(3, 10),)
    # the channel is symmetric, so user 2 sees the same coefficients
    assert co.alpha2 == co.alpha1
    assert co.beta2 == co.beta1
    assert co.gamma2 == co.gamma1


def test_constant_channel_coefficients():
    spec = ChannelSpec(
        n11=FadingPmf.point(3, 3),
        n12=FadingPmf.point(2, 3),
        n21=FadingPmf.point(2, 3),
        n22=FadingPmf.point(3, 3),
    )
    co = layer_coefficients(spec)
    assert co.alpha1 == (1, 1, 0)
    assert co.beta1 == (1, 1, 1)
    assert co.gamma1 == (1, 0, 0)


def test_coefficient_ranges_random():
    rng = random.Random(11)
    for _ in range(40):
        spec = random_spec(rng, rng.randint(1, 3))
        co = layer_coefficients(spec)
        for seq in (co.alpha1, co.beta1, co.gamma1, co.alpha2, co.beta2, co.gamma2):
            assert len(seq) == spec.q
            assert all(0 <= v <= 1 for v in seq)
        # beta dominates gamma: the cross tail is at least the tail of the
        # cross-minus-direct difference
        assert all(b >= g for b, g in zip(co.beta1, co.gamma1))
        assert all(b >= g for b, g in zip(co.beta2, co.gamma2))


def test_swap_users_involution():
    rng = random.Random(5)
    for _ in range(20):
        spec = random_spec(rng, rng.randint(0, 2))
        flipped = swap_users(spec)
        assert swap_users(flipped) == spec
        a = layer_coefficients(spec)
        b = layer_coefficients(flipped)
        assert a.alpha1 == b.alpha2 and a.beta1 == b.beta2 and a.gamma1 == b.gamma2


def test_channel_spec_rejects_mixed_support():
    with pytest.raises(ValueError):
        ChannelSpec(
            n11=FadingPmf.uniform(1),
            n12=FadingPmf.uniform(2),
            n21=FadingPmf.uniform(1),
            n22=FadingPmf.uniform(1),
        )
