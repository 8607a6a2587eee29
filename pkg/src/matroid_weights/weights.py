"""Generalized Hamming weights of matroids and subadditivity classification.

The r-th weight of a matroid M is the minimum circuit size of the (r-1)-st
elongation of M, computed here without touching elongations at all: those
circuits are exactly the complements of the flats of the dual of corank r,
so d_r = n - (largest such flat).  The elongation-circuit route survives as
a test oracle (:func:`circuits_of_elongation`).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotStrictlyIncreasing, RankOutOfRange, RankHypothesisViolated
from .matroid import Matroid, elements_of


@dataclass(frozen=True)
class GhwSequence:
    """The weights d_1 < d_2 < ... < d_D plus provenance.

    ``rank`` is the rank of the originating matroid when there is one; it
    enables the d_r <= rank + r sanity bound.
    """

    values: tuple[int, ...]
    source: str = "matroid"
    rank: int | None = None

    def __post_init__(self):
        if not self.values:
            raise NotStrictlyIncreasing("empty weight sequence")
        if any(v <= 0 for v in self.values):
            raise NotStrictlyIncreasing(f"weights must be positive: {self.values}")
        for a, b in zip(self.values, self.values[1:]):
            if a >= b:
                raise NotStrictlyIncreasing(
                    f"weights must strictly increase: {self.values}"
                )
        if self.rank is not None:
            for r, d in enumerate(self.values, start=1):
                if d > self.rank + r:
                    raise ValueError(
                        f"d_{r} = {d} exceeds rank + r = {self.rank + r}"
                    )

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, r: int) -> int:
        """1-based access: seq[r] = d_r."""
        if not 1 <= r <= len(self.values):
            raise RankOutOfRange(f"weight index {r} outside 1..{len(self.values)}")
        return self.values[r - 1]


def ghw(m: Matroid, guard: int | None = None) -> GhwSequence:
    """All generalized Hamming weights d_1..d_crk of a matroid."""
    crk = m.corank
    if crk < 1:
        raise RankOutOfRange(
            "matroid is free (corank 0); it has no Hamming weights"
        )
    dual = m.dual()
    values = []
    for r in range(1, crk + 1):
        flats = dual.flat_masks_of_rank(crk - r, guard)
        values.append(m.n - max(f.bit_count() for f in flats))
    return GhwSequence(tuple(values), source="matroid", rank=m.full_rank)


def circuits_of_elongation(m: Matroid, r: int, guard: int | None = None) -> list[tuple[int, ...]]:
    """Circuits of the (r-1)-st elongation: complements of dual flats of corank r.

    Shared with the configuration invariants; also the fast route behind
    :func:`ghw`.
    """
    crk = m.corank
    if not 1 <= r <= crk:
        raise RankOutOfRange(f"elongation order {r} outside 1..{crk}")
    dual = m.dual()
    masks = [m.full_mask & ~f for f in dual.flat_masks_of_rank(crk - r, guard)]
    sets = [elements_of(mk) for mk in masks]
    sets.sort(key=lambda s: (len(s), s))
    return sets


@dataclass(frozen=True)
class SubadditivityReport:
    """Per-index subadditivity flags (1-based semantics, index 0 = d_1)."""

    values: tuple[int, ...]
    subadditive_term: tuple[bool, ...]
    strictly_subadditive_term: tuple[bool, ...]
    is_subadditive: bool
    is_extended_subadditive: bool
    witnesses: tuple[dict, ...] = field(default_factory=tuple)


def classify(seq) -> SubadditivityReport:
    """Check all index pairs for (strict) subadditivity and the extended law.

    Accepts a GhwSequence or any strictly increasing sequence of positive
    integers.  d_1 counts as both a subadditive and a strictly subadditive
    term by convention.  Witnesses list every violated pair.
    """
    values = tuple(getattr(seq, "values", seq))
    GhwSequence(values)  # validates: nonempty, positive, strictly increasing
    d = len(values)

    def dv(i: int) -> int:
        return values[i - 1]

    sub = [True] * d
    strict = [True] * d
    witnesses: list[dict] = []
    for ell in range(2, d + 1):
        for i in range(1, ell // 2 + 1):
            j = ell - i
            if dv(ell) > dv(i) + dv(j):
                sub[ell - 1] = False
                witnesses.append(
                    {"kind": "subadditive", "index": ell, "i": i, "j": j}
                )
            if dv(ell) >= dv(i) + dv(j):
                strict[ell - 1] = False

    is_sub = all(sub)
    is_ext = is_sub
    for r in range(1, d + 1):
        for t in range(r + 1, d + 1):
            if dv(r) + dv(d) > dv(t) + dv(d + r - t):
                is_ext = False
                witnesses.append({"kind": "extended", "r": r, "t": t})

    return SubadditivityReport(
        values=values,
        subadditive_term=tuple(sub),
        strictly_subadditive_term=tuple(strict),
        is_subadditive=is_sub,
        is_extended_subadditive=is_ext,
        witnesses=tuple(witnesses),
    )


@dataclass(frozen=True)
class PavingProfile:
    is_paving: bool
    dual_is_paving: bool
    is_sparse_paving: bool
    is_matroid_design: bool


def paving_profile(m: Matroid, guard: int | None = None) -> PavingProfile:
    """Paving/sparse-paving flags via the weight criteria, plus the
    equal-cardinality matroid-design test on the corank-1 flats."""
    k = m.full_rank
    if k < 2:
        raise RankHypothesisViolated(
            f"paving profile needs rank >= 2, got {k}"
        )
    is_paving = m.ghw_value(1, guard) >= k if k <= m.n - 1 else True
    crk = m.corank
    if crk >= 2:
        dual_is_paving = m.ghw_value(2, guard) == k + 2
    else:
        # A rank-one matroid has only circuits of size one or two, hence is
        # paving by definition.
        dual_is_paving = True
    hyperplane_sizes = {
        f.bit_count() for f in m.flat_masks_of_rank(k - 1, guard)
    }
    return PavingProfile(
        is_paving=is_paving,
        dual_is_paving=dual_is_paving,
        is_sparse_paving=is_paving and dual_is_paving,
        is_matroid_design=len(hyperplane_sizes) == 1,
    )
