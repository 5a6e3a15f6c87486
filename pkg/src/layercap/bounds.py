"""The six weighted-bound families and their critical weights.

Each user k has three families of weighted rate bounds.  For user 1 with
weight omega in [0, 1] (user 2 mirrors R1 and R2):

    a:  R1 + omega*R2 <= E[N11] + omega*E[(N21-N11)^+]
                         + sum_l [omega*beta1(l) - alpha1(l)]^+
    b:  R1 + omega*R2 <= (1-omega)*E[N11] + omega*E[N21]
                         + sum_l [omega*gamma1(l) - alpha1(l)]^+
                         + omega * sum_l max(P(N11-N21 >= l), P(N12 >= l))
    c:  (1+mu)*R1 + omega*R2 <= E[N11] + omega*E[(N21-N11)^+]
                         + sum_l [omega*gamma1(l) - alpha1(l)]^+
                         + sum_l max(mu*P(N11 >= l), omega*P(N12 >= l))
        for 0 <= mu <= omega.

Every family is piecewise-linear in its weights, so intersecting the
half-planes at the finitely many kink weights already yields the full
region; that critical-weight enumeration is the primary mode, with a dense
weight grid available as a cross-checking fallback.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .channel import (
    ChannelSpec,
    as_fraction,
    diff_tail,
    expect,
    expect_pos_diff,
    layer_coefficients,
    swap_users,
    tail,
)
from .geometry import HalfPlane, RegionPolytope, intersect

FAMILIES = ("1a", "1b", "1c", "2a", "2b", "2c")


def _pos(x: Fraction) -> Fraction:
    return x if x > 0 else Fraction(0)


def _check_user(user):
    if user not in (1, 2):
        raise ValueError(f"user must be 1 or 2, got {user!r}")


def _check_omega(omega) -> Fraction:
    omega = as_fraction(omega)
    if not 0 <= omega <= 1:
        raise ValueError(f"omega must lie in [0, 1], got {omega}")
    return omega


@dataclass(frozen=True)
class WeightedBound:
    """One evaluated bound: family tag, weights and right-hand side.

    Families 1a/1b induce R1 + omega*R2 <= value, family 1c induces
    (1+mu)*R1 + omega*R2 <= value; the 2-families mirror R1 and R2.
    """

    family: str
    omega: Fraction
    mu: Optional[Fraction]
    value: Fraction

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if not 0 <= self.omega <= 1:
            raise ValueError(f"omega must lie in [0, 1], got {self.omega}")
        if self.family.endswith("c"):
            if self.mu is None or not 0 <= self.mu <= self.omega:
                raise ValueError(f"c-family needs mu in [0, omega], got {self.mu}")
        elif self.mu is not None:
            raise ValueError("mu only applies to c-families")
        if self.value < 0:
            raise ValueError(f"bound value must be nonnegative, got {self.value}")

    def halfplane(self) -> HalfPlane:
        own = 1 if self.mu is None else 1 + self.mu
        if self.family[0] == "1":
            return HalfPlane(own, self.omega, self.value)
        return HalfPlane(self.omega, own, self.value)


def bound_a(spec: ChannelSpec, user, omega) -> Fraction:
    """Right-hand side of the a-family bound at weight omega."""
    _check_user(user)
    omega = _check_omega(omega)
    sp = spec if user == 1 else swap_users(spec)
    co = layer_coefficients(sp)
    kinks = sum(
        (_pos(omega * b - a) for a, b in zip(co.alpha1, co.beta1)), Fraction(0)
    )
    return expect(sp.n11) + omega * expect_pos_diff(sp.n21, sp.n11) + kinks


def bound_b(spec: ChannelSpec, user, omega) -> Fraction:
    """Right-hand side of the b-family bound at weight omega."""
    _check_user(user)
    omega = _check_omega(omega)
    sp = spec if user == 1 else swap_users(spec)
    co = layer_coefficients(sp)
    kinks = sum(
        (_pos(omega * g - a) for a, g in zip(co.alpha1, co.gamma1)), Fraction(0)
    )
    cross = sum(
        (max(diff_tail(sp.n11, sp.n21, l), tail(sp.n12, l)) for l in range(1, sp.q + 1)),
        Fraction(0),
    )
    return (1 - omega) * expect(sp.n11) + omega * expect(sp.n21) + kinks + omega * cross


def bound_c(spec: ChannelSpec, user, omega, mu) -> Fraction:
    """Right-hand side of the c-family bound at weights (omega, mu), mu <= omega."""
    _check_user(user)
    omega = _check_omega(omega)
    mu = as_fraction(mu)
    if not 0 <= mu <= omega:
        raise ValueError(f"mu must lie in [0, omega], got mu={mu}, omega={omega}")
    sp = spec if user == 1 else swap_users(spec)
    co = layer_coefficients(sp)
    kinks = sum(
        (_pos(omega * g - a) for a, g in zip(co.alpha1, co.gamma1)), Fraction(0)
    )
    top = sum(
        (max(mu * tail(sp.n11, l), omega * tail(sp.n12, l)) for l in range(1, sp.q + 1)),
        Fraction(0),
    )
    return expect(sp.n11) + omega * expect_pos_diff(sp.n21, sp.n11) + kinks + top


def critical_weights(spec: ChannelSpec, user, family):
    """Finite weight set whose half-planes already carve the family's region.

    Families a and b return a sorted tuple of omegas, family c a sorted tuple
    of (omega, mu) pairs.  Between adjacent kinks each bound is affine in its
    weights, so the constraint continuum there is implied by the kink
    constraints; ratio kinks above 1 fall outside the weight range and are
    dropped.
    """
    _check_user(user)
    if family not in ("a", "b", "c"):
        raise ValueError(f"family must be 'a', 'b' or 'c', got {family!r}")
    sp = spec if user == 1 else swap_users(spec)
    co = layer_coefficients(sp)

    def ratio_set(nums, dens):
        out = {Fraction(0), Fraction(1)}
        for n, d in zip(nums, dens):
            if d > 0 and n <= d:
                out.add(n / d)
        return out

    if family == "a":
        return tuple(sorted(ratio_set(co.alpha1, co.beta1)))
    if family == "b":
        return tuple(sorted(ratio_set(co.alpha1, co.gamma1)))
    # family c: omega kinks as in family b, mu kinks along rays mu = r*omega;
    # all cell corners of that subdivision of {0 <= mu <= omega <= 1} are
    # products of an omega kink with a ray slope
    omegas = ratio_set(co.alpha1, co.gamma1)
    slopes = {Fraction(0), Fraction(1)}
    for l in range(1, sp.q + 1):
        t_own, t_cross = tail(sp.n11, l), tail(sp.n12, l)
        if t_own > 0 and t_cross <= t_own:
            slopes.add(t_cross / t_own)
    return tuple(sorted({(om, r * om) for om in omegas for r in slopes}))


def family_bounds(spec: ChannelSpec, user, family) -> list:
    """WeightedBounds of one family at its critical weights, omega ascending."""
    tag = f"{user}{family}"
    if family == "a":
        return [
            WeightedBound(tag, om, None, bound_a(spec, user, om))
            for om in critical_weights(spec, user, "a")
        ]
    if family == "b":
        return [
            WeightedBound(tag, om, None, bound_b(spec, user, om))
            for om in critical_weights(spec, user, "b")
        ]
    return [
        WeightedBound(tag, om, mu, bound_c(spec, user, om, mu))
        for om, mu in critical_weights(spec, user, "c")
    ]


def family_region(spec: ChannelSpec, user, family) -> RegionPolytope:
    """Region cut out by a single family over all of its weights."""
    return intersect([wb.halfplane() for wb in family_bounds(spec, user, family)])


def outer_halfplanes(spec: ChannelSpec) -> list:
    """All six families' bounds at their critical weights, in family order."""
    out = []
    for user in (1, 2):
        for family in ("a", "b", "c"):
            out.extend(family_bounds(spec, user, family))
    return out


def outer_region(spec: ChannelSpec) -> RegionPolytope:
    """The full outer bound: intersection of every family's half-planes."""
    return intersect([wb.halfplane() for wb in outer_halfplanes(spec)])


def grid_bounds(spec: ChannelSpec, steps: int) -> list:
    """Dense-grid fallback: every family at omega = k/steps, mu = j/steps <= omega."""
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    out = []
    omegas = [Fraction(k, steps) for k in range(steps + 1)]
    for user in (1, 2):
        for om in omegas:
            out.append(WeightedBound(f"{user}a", om, None, bound_a(spec, user, om)))
        for om in omegas:
            out.append(WeightedBound(f"{user}b", om, None, bound_b(spec, user, om)))
        for k, om in enumerate(omegas):
            for j in range(k + 1):
                mu = Fraction(j, steps)
                out.append(WeightedBound(f"{user}c", om, mu, bound_c(spec, user, om, mu)))
    return out


def active_bounds(bounds, region: RegionPolytope) -> list:
    """Bounds whose half-planes support the region along an edge.

    Identical half-planes keep only the first occurrence, so the family
    order of outer_halfplanes decides the reported provenance.  Degenerate
    regions (< 3 vertices) only require tightness at one vertex.
    """
    needed = 2 if len(region.vertices) >= 3 else 1
    seen = set()
    out = []
    for wb in bounds:
        plane = wb.halfplane()
        if plane in seen:
            continue
        seen.add(plane)
        if sum(1 for v in region.vertices if plane.tight(v)) >= needed:
            out.append(wb)
    return out
