"""Batch verification suites shared by the CLI and the acceptance tests.

Each suite returns a SuiteResult with one human-readable line per check
group; everything compared exactly is compared exactly, and the Monte Carlo
suite states its tolerance in the output.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from fractions import Fraction

from .bounds import bound_b, critical_weights, family_region, outer_region
from .channel import ChannelSpec, FadingPmf, expect, expect_pos_diff
from .corpus import examples, random_weak_spec
from .deterministic import DetChannel, verify_recovery
from .geometry import subset, support
from .oracles import SimConfig, coupling_check, exact_stats, mc_estimate_stats
from .regimes import weak_corner, weak_region, weak_sum_capacity

MC_TOLERANCE = Fraction(1, 200)  # 5e-3 absolute


@dataclass(frozen=True)
class SuiteResult:
    name: str
    ok: bool
    lines: tuple

    def render(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        body = "\n".join(self.lines)
        return f"{body}\n[{self.name}] {status}"


def verify_deterministic(level_cap: int = 3) -> SuiteResult:
    """Sweep every constant channel with levels in {0..level_cap}."""
    total = 0
    failures = []
    rng = range(level_cap + 1)
    for n11, n12, n21, n22 in itertools.product(rng, rng, rng, rng):
        total += 1
        report = verify_recovery(DetChannel(n11, n12, n21, n22))
        if not report.ok:
            failures.append((n11, n12, n21, n22))
    lines = [f"[deterministic] {total - len(failures)}/{total} constant channels recovered exactly"]
    for tup in failures[:10]:
        lines.append(f"[deterministic]   mismatch at levels {tup}")
    return SuiteResult("deterministic", not failures, tuple(lines))


def _small_pmfs() -> list:
    """All pmfs on {0, 1, 2} with masses in quarters."""
    out = []
    for a in range(5):
        for b in range(5 - a):
            c = 4 - a - b
            out.append(FadingPmf([Fraction(a, 4), Fraction(b, 4), Fraction(c, 4)]))
    return out


def verify_coupling() -> SuiteResult:
    """Exhaust the coupling identities over every small-pmf channel."""
    pmfs = _small_pmfs()
    total = 0
    bad = 0
    first = None
    for n11, n12, n21, n22 in itertools.product(pmfs, repeat=4):
        total += 1
        report = coupling_check(ChannelSpec(n11=n11, n12=n12, n21=n21, n22=n22))
        if not report.ok:
            bad += 1
            if first is None:
                first = (n11, n12, n21, n22)
    lines = [
        f"[coupling] {total - bad}/{total} channels satisfy both identities and the pointwise order"
    ]
    if first is not None:
        lines.append(f"[coupling]   first failure at {first}")
    return SuiteResult("coupling", bad == 0, tuple(lines))


def stats_json(report) -> str:
    """Canonical serialization of an MC report, used for byte-identity checks."""
    doc = {
        "samples": report.samples,
        "seed": report.seed,
        "entries": [
            {"name": e.name, "estimate": str(e.estimate), "stderr": e.stderr}
            for e in report.entries
        ],
    }
    return json.dumps(doc, separators=(",", ":"))


def verify_montecarlo(samples: int = 10 ** 6, seed: int = 0) -> SuiteResult:
    """Estimate every statistic on the example corpus and compare exactly."""
    ok = True
    lines = []
    for label, spec in examples().items():
        cfg = SimConfig(spec=spec, samples=samples, seed=seed)
        report = mc_estimate_stats(cfg)
        exact = exact_stats(spec)
        worst = Fraction(0)
        bad = []
        for entry in report.entries:
            err = abs(entry.estimate - exact[entry.name])
            worst = max(worst, err)
            if err > MC_TOLERANCE:
                bad.append((entry.name, err))
        rerun = stats_json(mc_estimate_stats(cfg))
        identical = rerun == stats_json(report)
        ok = ok and not bad and identical
        lines.append(
            f"[montecarlo] {label}: {len(report.entries)} statistics, "
            f"worst |error| = {float(worst):.2e} "
            f"(tolerance {float(MC_TOLERANCE):.0e}), rerun identical: {identical}"
        )
        for name, err in bad[:5]:
            lines.append(f"[montecarlo]   {label}:{name} off by {float(err):.3e}")
    return SuiteResult("montecarlo", ok, tuple(lines))


def _check_weak_spec(spec: ChannelSpec) -> list:
    """All weak-regime facts for one spec; returns failure descriptions."""
    problems = []
    r1a = family_region(spec, 1, "a")
    r1b = family_region(spec, 1, "b")
    r1c = family_region(spec, 1, "c")
    r2a = family_region(spec, 2, "a")
    r2b = family_region(spec, 2, "b")
    r2c = family_region(spec, 2, "c")
    if not subset(r1b, r1a):
        problems.append("user-1 b-region escapes the a-region")
    if not subset(r1b, r1c):
        problems.append("user-1 b-region escapes the c-region")
    if not subset(r2b, r2a):
        problems.append("user-2 b-region escapes the a-region")
    if not subset(r2b, r2c):
        problems.append("user-2 b-region escapes the c-region")
    c_sum = weak_sum_capacity(spec)
    if support(outer_region(spec), 1, 1) != c_sum:
        problems.append("outer-region sum support differs from the sum capacity")
    tin = (expect_pos_diff(spec.n11, spec.n21), expect_pos_diff(spec.n22, spec.n12))
    for name, region, user in (("user-1", r1b, 1), ("user-2", r2b, 2)):
        if not region.contains(tin):
            problems.append(f"noise-tolerant point outside {name} b-region")
        elif bound_b(spec, user, 1) != tin[0] + tin[1]:
            problems.append(f"noise-tolerant point not on {name} b-boundary")
    cap2 = expect_pos_diff(spec.n22, spec.n12)
    mirror = ChannelSpec(n11=spec.n22, n12=spec.n21, n21=spec.n12, n22=spec.n11)
    for omega_a in critical_weights(spec, 1, "b"):
        if omega_a == 0:
            continue
        try:
            alloc = weak_corner(spec, omega_a)
            mirrored = weak_corner(mirror, omega_a)
        except RuntimeError as exc:
            problems.append(str(exc))
            continue
        if alloc.corner[1] > cap2:
            problems.append(f"corner at weight {omega_a} exceeds the user-2 rate cap")
        if not r1b.contains(alloc.corner):
            problems.append(f"corner at weight {omega_a} escapes the b-region")
        if mirrored.corner[0] < cap2:
            problems.append(f"mirrored corner at weight {omega_a} undercuts the user-2 rate cap")
    if weak_corner(spec, 1).corner != tin:
        problems.append("weight-1 corner is not the noise-tolerant point")
    if not equals_region(weak_region(spec), outer_region(spec)):
        problems.append("b-region intersection differs from the full outer region")
    return problems


def equals_region(p, q) -> bool:
    return subset(p, q) and subset(q, p)


def verify_inclusions(count: int = 25, seed: int = 0) -> SuiteResult:
    """Randomized weak-regime battery: inclusions, sum capacity, corners."""
    rng = random.Random(seed)
    bad = []
    for i in range(count):
        spec = random_weak_spec(rng, rng.randint(1, 3))
        problems = _check_weak_spec(spec)
        if problems:
            bad.append((i, problems[0]))
    lines = [f"[inclusions] {count - len(bad)}/{count} random weak channels pass every check"]
    for i, problem in bad[:10]:
        lines.append(f"[inclusions]   spec {i}: {problem}")
    return SuiteResult("inclusions", not bad, tuple(lines))


SUITES = {
    "deterministic": verify_deterministic,
    "coupling": verify_coupling,
    "montecarlo": verify_montecarlo,
    "inclusions": verify_inclusions,
}
