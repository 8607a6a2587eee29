"""Invariants of specialized circuit ideals under a degree assignment.

Substituting forms of degrees delta_1..delta_n for the variables turns the
circuit ideal of a matroid into the defining ideal of a configuration of
complete intersections; its initial degree, Waldschmidt constant and
regularity follow from circuit data weighted by delta.  Resurgence is never
computed exactly here: the report carries named, provenance-tagged bounds,
plus an exact asymptotic value in the two situations where one is known
(sparse paving with equal circuit sizes; paving with a dual loop in the
linear, equal-degree case).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (
    DimensionMismatch,
    MixedDegreesForEqualDegreeBound,
    RankHypothesisViolated,
)
from .matroid import Matroid
from .weights import circuits_of_elongation, ghw


def as_degrees(m: Matroid, delta: Sequence[int]) -> tuple[int, ...]:
    degrees = tuple(int(x) for x in delta)
    if len(degrees) != m.n:
        raise DimensionMismatch(
            f"degree assignment has length {len(degrees)}, need {m.n}"
        )
    if any(d < 1 for d in degrees):
        raise ValueError(f"degrees must be positive: {degrees}")
    return degrees


@dataclass(frozen=True)
class SpecializedInvariants:
    alpha: int
    waldschmidt: Fraction
    regularity: int


@dataclass(frozen=True)
class NamedBound:
    name: str
    kind: str  # "lower" | "upper" | "upper_strict" | "exact"
    value: Fraction


@dataclass(frozen=True)
class BoundsReport:
    """Resurgence bounds; ``exact`` is the asymptotic resurgence when known."""

    lower: Fraction
    upper: Fraction
    exact: Fraction | None = None
    bounds: tuple[NamedBound, ...] = field(default_factory=tuple)


def _delta_sum(degrees: Sequence[int], subset: Sequence[int]) -> int:
    return sum(degrees[e - 1] for e in subset)


def specialized_invariants(
    m: Matroid, delta: Sequence[int], guard: int | None = None
) -> SpecializedInvariants:
    """Initial degree, Waldschmidt constant and regularity of the
    specialized ideal: circuit delta-sums replace circuit sizes, and the
    regularity sums delta over the non-coloop elements."""
    degrees = as_degrees(m, delta)
    crk = m.corank
    circuits = circuits_of_elongation(m, 1, guard)
    alpha = min(_delta_sum(degrees, c) for c in circuits)
    wald = min(
        Fraction(_delta_sum(degrees, u), r)
        for r in range(1, crk + 1)
        for u in circuits_of_elongation(m, r, guard)
    )
    dual_loops = m.dual().loops()
    reg = (
        sum(d for e, d in enumerate(degrees, start=1) if e not in dual_loops)
        - crk
        + 1
    )
    return SpecializedInvariants(alpha=alpha, waldschmidt=wald, regularity=reg)


def resurgence_sandwich(m: Matroid, guard: int | None = None):
    """Generic resurgence bracket for the unspecialized ideal:
    alpha / waldschmidt below, the height n - rk above."""
    seq = ghw(m, guard)
    wald = min(Fraction(dv, r) for r, dv in enumerate(seq.values, start=1))
    return BoundsReport(
        lower=Fraction(seq.values[0]) / wald,
        upper=Fraction(m.corank),
        exact=None,
        bounds=(
            NamedBound("initial degree over Waldschmidt", "lower", Fraction(seq.values[0]) / wald),
            NamedBound("height", "upper", Fraction(m.corank)),
        ),
    )


def resurgence_bounds(
    m: Matroid,
    delta: Sequence[int],
    points_case: bool = False,
    guard: int | None = None,
) -> BoundsReport:
    """Bounds on the resurgence and asymptotic resurgence of the
    specialization along equal-degree forms.

    The lower bound (initial degree over Waldschmidt constant) needs all
    delta_i equal; mixed degrees are rejected.  ``points_case`` unlocks the
    upper bounds valid when the specialized ideal cuts out points, and the
    two families where the asymptotic resurgence is known exactly.
    """
    degrees = as_degrees(m, delta)
    if len(set(degrees)) != 1:
        raise MixedDegreesForEqualDegreeBound(
            "resurgence bounds need a constant degree assignment"
        )
    delta0 = degrees[0]
    n, k, crk = m.n, m.full_rank, m.corank
    seq = ghw(m, guard).values
    d1 = seq[0]
    dual_loops = m.dual().loops()
    ell = len(dual_loops)

    bounds: list[NamedBound] = []
    lower = max(Fraction(r * d1, seq[r - 1]) for r in range(1, crk + 1))
    bounds.append(NamedBound("initial degree over Waldschmidt", "lower", lower))

    strict_upper = Fraction(crk)
    bounds.append(NamedBound("height (strict)", "upper_strict", strict_upper))

    exact: Fraction | None = None
    uppers: list[Fraction] = []
    if points_case:
        # largest circuit of m, via the complements of corank-1 dual flats
        circuits = circuits_of_elongation(m, 1, guard)
        omega = max(len(c) for c in circuits)
        reg = delta0 * (n - ell) - crk + 1
        up_reg = max(Fraction(r * reg, delta0 * seq[r - 1]) for r in range(1, crk + 1))
        bounds.append(NamedBound("points: regularity over Waldschmidt", "upper", up_reg))
        uppers.append(up_reg)
        up_omega = max(Fraction(r * omega, seq[r - 1]) for r in range(1, crk + 1))
        bounds.append(
            NamedBound("points: largest generator degree over Waldschmidt", "upper", up_omega)
        )
        uppers.append(up_omega)

        sparse = False
        if 2 <= k <= n - 2:
            try:
                sparse = m.is_sparse_paving(guard)
            except RankHypothesisViolated:
                sparse = False
        if sparse:
            up_sparse = Fraction(crk, n) * (n - Fraction(crk - 1, delta0))
            bounds.append(NamedBound("points, sparse paving", "upper", up_sparse))
            uppers.append(up_sparse)

        if len({len(c) for c in circuits}) == 1:
            # All circuits share one size, so the smallest and largest
            # generator degrees agree and the lower bound meets the
            # points-case upper bound: the asymptotic resurgence is pinned.
            exact = lower
            bounds.append(
                NamedBound(
                    "points, equal circuit sizes: exact asymptotic resurgence",
                    "exact",
                    exact,
                )
            )

        paving = False
        if 2 <= k <= n - 1:
            try:
                paving = m.is_paving(guard)
            except RankHypothesisViolated:
                paving = False
        if paving and ell > 0 and delta0 == 1:
            exact = Fraction(crk * k, n - 1)
            bounds.append(
                NamedBound(
                    "points, paving with a dual loop, linear forms: "
                    "exact resurgence and asymptotic resurgence",
                    "exact",
                    exact,
                )
            )

    upper = min(uppers) if uppers else strict_upper
    return BoundsReport(lower=lower, upper=upper, exact=exact, bounds=tuple(bounds))
