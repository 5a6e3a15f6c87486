"""The named examples and the seeded regime-specific generators."""

import random
from fractions import Fraction

from layercap import (
    classify,
    examples,
    random_moderate_spec,
    random_pmf,
    random_spec,
    random_strong_spec,
    random_weak_spec,
)

F = Fraction


def test_examples_cover_the_regimes():
    ex = examples()
    assert set(ex) == {"det", "strong", "weak", "moderate"}
    assert ex["det"].q == 3
    assert classify(ex["strong"]).regime == "strong"
    assert classify(ex["weak"]).regime == "weak"
    assert classify(ex["moderate"]).regime == "moderate"


def test_random_pmf_shape_and_denominators():
    rng = random.Random(1)
    for _ in range(100):
        q = rng.randint(0, 3)
        pmf = random_pmf(rng, q, max_denominator=8)
        assert len(pmf.masses) == q + 1
        assert sum(pmf.masses) == 1
        assert all(m.denominator <= 8 for m in pmf.masses)


def test_random_spec_is_reproducible():
    a = random_spec(random.Random(42), 2)
    b = random_spec(random.Random(42), 2)
    assert a == b


def test_strong_generator():
    rng = random.Random(17)
    for _ in range(50):
        spec = random_strong_spec(rng, rng.randint(0, 3))
        rep = classify(spec)
        assert rep.regime == "strong"
        for pmf in spec.links().values():
            assert all(m.denominator <= 8 for m in pmf.masses)


def test_weak_generator():
    # the label can come out "strong" when both condition sets hold at once,
    # so assert the weak per-layer flags rather than the label
    rng = random.Random(23)
    for _ in range(50):
        spec = random_weak_spec(rng, rng.randint(1, 3))
        rep = classify(spec)
        assert all(rep.weak_1) and all(rep.weak_2)


def test_moderate_generator_both_branches():
    rng = random.Random(29)
    for _ in range(30):
        spec = random_moderate_spec(rng, 1)
        assert classify(spec).regime == "moderate"
    for _ in range(30):
        spec = random_moderate_spec(rng, rng.randint(2, 3))
        assert classify(spec).regime == "moderate"
