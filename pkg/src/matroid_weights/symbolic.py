"""Symbolic powers of the circuit ideal of a matroid, without polynomials.

Membership of a monomial x^a in the s-th symbolic power reduces to the
basis-sum criterion: sum of a over every basis of the dual is at least s.
Everything here (initial degrees, Rees algebra generators, the Waldschmidt
constant) is driven by that single test plus the weight sequence.

Two independent routes compute the initial degree alpha of the s-th
symbolic power: an unbounded-knapsack dynamic program over the weight
sequence (:func:`alpha_fast`) and a brute-force search over exponent
vectors (:func:`alpha_oracle`).  They must agree; the test suite enforces
this on the whole corpus.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    OracleGuardExceeded,
    RankOutOfRange,
    ROutOfRange,
)
from .matroid import Matroid, elements_of
from .weights import GhwSequence, classify, ghw

ORACLE_MAX_N = 10
ORACLE_MAX_S = 8
MINGEN_MAX_N = 8
MINGEN_MAX_S = 4


@dataclass(frozen=True)
class ReesGenerator:
    """Squarefree generator x^support T^order of the symbolic Rees algebra."""

    support: tuple[int, ...]
    order: int


@dataclass(frozen=True)
class DSequence:
    """Initial degrees d_1..d_D read off the Rees algebra generators.

    For matroids this is exactly the weight sequence; arbitrary positive
    sequences are accepted so the knapsack machinery can be exercised on
    its own.  Zero entries (order gaps) are rejected.
    """

    values: tuple[int, ...]

    def __post_init__(self):
        if not self.values:
            raise ValueError("empty degree sequence")
        if any(v < 1 for v in self.values):
            raise ValueError(f"degree sequence must be positive: {self.values}")

    def __len__(self) -> int:
        return len(self.values)


def _degree_values(d) -> tuple[int, ...]:
    values = tuple(getattr(d, "values", d))
    DSequence(values)
    return values


def dual_bases_masks(m: Matroid, guard: int | None = None) -> list[int]:
    """Bases of the dual, enumerated as complements of bases of m."""
    return [m.full_mask & ~b for b in m.bases_masks(guard)]


def in_symbolic_power(m: Matroid, a: Sequence[int], s: int, guard: int | None = None) -> bool:
    """Is x^a in the s-th symbolic power, i.e. does every dual basis see
    total exponent at least s?"""
    if len(a) != m.n:
        raise DimensionMismatch(f"exponent vector has length {len(a)}, need {m.n}")
    if s < 1:
        raise ValueError(f"symbolic power order must be >= 1, got {s}")
    if any(x < 0 for x in a):
        raise ValueError("exponents must be nonnegative")
    for bmask in dual_bases_masks(m, guard):
        total = 0
        rest = bmask
        while rest:
            bit = rest & -rest
            rest ^= bit
            total += a[bit.bit_length() - 1]
        if total < s:
            return False
    return True


def min_squarefree_degree(m: Matroid, r: int, guard: int | None = None) -> int:
    """Least degree of a squarefree monomial in the r-th symbolic power;
    equals the r-th generalized Hamming weight."""
    seq = ghw(m, guard)
    if not 1 <= r <= len(seq):
        raise ROutOfRange(f"r = {r} outside 1..{len(seq)}")
    return seq[r]


def rees_generators(m: Matroid, guard: int | None = None) -> list[ReesGenerator]:
    """One generator per proper flat F of the dual: (complement, corank of F)."""
    dual = m.dual()
    crk = dual.full_rank
    if crk < 1:
        raise RankOutOfRange("free matroid has no Rees generators")
    gens = []
    for flat_rank in range(crk):
        order = crk - flat_rank
        for f in dual.flat_masks_of_rank(flat_rank, guard):
            gens.append(ReesGenerator(elements_of(m.full_mask & ~f), order))
    gens.sort(key=lambda g: (g.order, len(g.support), g.support))
    return gens


# --- initial degrees ----------------------------------------------------------

def alpha_fast(d, s: int) -> int:
    """min sum(b_i d_i) over b >= 0 with sum(i b_i) = s, by an unbounded
    knapsack dynamic program over 1..s."""
    values = _degree_values(d)
    if s < 0:
        raise ValueError(f"symbolic power order must be >= 0, got {s}")
    if s == 0:
        return 0
    big = len(values) * max(values) * s + 1
    best = [0] + [big] * s
    for t in range(1, s + 1):
        b = best[t]
        for i in range(1, min(len(values), t) + 1):
            cand = best[t - i] + values[i - 1]
            if cand < b:
                b = cand
        best[t] = b
    return best[s]


def alpha_fast_witness(d, s: int) -> tuple[int, tuple[int, ...]]:
    """alpha_fast plus one optimal multiplicity vector b.

    Ties break toward smaller part indices, so the witness is reproducible.
    """
    values = _degree_values(d)
    D = len(values)
    if s == 0:
        return 0, (0,) * D
    big = D * max(values) * s + 1
    best = [0] + [big] * s
    for t in range(1, s + 1):
        best[t] = min(
            best[t - i] + values[i - 1] for i in range(1, min(D, t) + 1)
        )
    counts = [0] * D
    t = s
    while t > 0:
        for i in range(1, min(D, t) + 1):
            if best[t - i] + values[i - 1] == best[t]:
                counts[i - 1] += 1
                t -= i
                break
    return best[s], tuple(counts)


def alpha_closed_form(d, s: int) -> int | None:
    """q d_D + d_r for s = qD + r, valid exactly for extended subadditive
    sequences; None otherwise."""
    values = _degree_values(d)
    if s < 1:
        raise ValueError(f"symbolic power order must be >= 1, got {s}")
    if not classify(values).is_extended_subadditive:
        return None
    q, r = divmod(s, len(values))
    return q * values[-1] + (values[r - 1] if r else 0)


def alpha_oracle(m: Matroid, s: int, guard: int | None = None) -> int:
    """Ground-truth initial degree of the s-th symbolic power.

    Iterative deepening on the total degree, starting from the valid lower
    bound ceil(s * min_r d_r / r); at each level a pruned search looks for
    an exponent vector whose every dual-basis sum reaches s.  Independent of
    the knapsack route apart from that starting bound.
    """
    if m.n > ORACLE_MAX_N or s > ORACLE_MAX_S:
        raise OracleGuardExceeded(
            f"oracle guarded to n <= {ORACLE_MAX_N} and s <= {ORACLE_MAX_S} "
            f"(got n = {m.n}, s = {s})"
        )
    if s < 1:
        raise ValueError(f"symbolic power order must be >= 1, got {s}")
    seq = ghw(m, guard).values
    waldschmidt_lb = min(Fraction(dv, r) for r, dv in enumerate(seq, start=1))
    start = max(s, math.ceil(waldschmidt_lb * s))

    n = m.n
    bases = [elements_of(bm) for bm in dual_bases_masks(m, guard)]
    touching = [[bi for bi, b in enumerate(bases) if e in b] for e in range(1, n + 1)]
    # unassigned_in[b][pos]: elements of basis b at 0-based positions >= pos
    unassigned_in = [
        [sum(1 for e in b if e - 1 >= pos) for pos in range(n + 1)] for b in bases
    ]

    def exists_at(t: int) -> bool:
        sums = [0] * len(bases)

        def feasible(pos: int, remaining: int) -> bool:
            if remaining > s * (n - pos):
                return False
            for bi, total in enumerate(sums):
                need = s - total
                if need <= 0:
                    continue
                if need > remaining:
                    return False
                if need > s * unassigned_in[bi][pos]:
                    return False
            return True

        def walk(pos: int, remaining: int) -> bool:
            if pos == n:
                return remaining == 0 and all(v >= s for v in sums)
            if not feasible(pos, remaining):
                return False
            for v in range(min(s, remaining), -1, -1):
                if v:
                    for bi in touching[pos]:
                        sums[bi] += v
                if walk(pos + 1, remaining - v):
                    return True
                if v:
                    for bi in touching[pos]:
                        sums[bi] -= v
            return False

        return walk(0, t)

    cap = s * n
    for t in range(start, cap + 1):
        if exists_at(t):
            return t
    raise AssertionError("oracle search exhausted its degree cap")  # unreachable


def minimal_generators_symbolic(m: Matroid, s: int, guard: int | None = None) -> list[tuple[int, ...]]:
    """All componentwise-minimal exponent vectors in the s-th symbolic power.

    Minimal generators have every exponent <= s (an exponent above s can be
    lowered without leaving the power), so the box {0..s}^n is scanned
    exactly, basis sums vectorized over numpy.
    """
    if m.n > MINGEN_MAX_N or s > MINGEN_MAX_S:
        raise OracleGuardExceeded(
            f"generator enumeration guarded to n <= {MINGEN_MAX_N} and "
            f"s <= {MINGEN_MAX_S} (got n = {m.n}, s = {s})"
        )
    if s < 1:
        raise ValueError(f"symbolic power order must be >= 1, got {s}")
    n = m.n
    shape = (s + 1,) * n
    grid = np.indices(shape, dtype=np.int32).reshape(n, -1)
    member = np.ones(grid.shape[1], dtype=bool)
    for bmask in dual_bases_masks(m, guard):
        idx = [e - 1 for e in elements_of(bmask)]
        member &= grid[idx, :].sum(axis=0) >= s
    member = member.reshape(shape)

    minimal = member.copy()
    for axis in range(n):
        below = np.zeros(shape, dtype=bool)
        to = [slice(None)] * n
        frm = [slice(None)] * n
        to[axis] = slice(1, None)
        frm[axis] = slice(0, -1)
        below[tuple(to)] = member[tuple(frm)]
        minimal &= ~below

    vectors = [tuple(int(x) for x in v) for v in np.argwhere(minimal)]
    vectors.sort(key=lambda v: (sum(v), v))
    return vectors


# --- global invariants ------------------------------------------------------------

def waldschmidt(m: Matroid, guard: int | None = None) -> Fraction:
    """Exact Waldschmidt constant min_r d_r / r of the circuit ideal."""
    seq = ghw(m, guard)
    return min(Fraction(dv, r) for r, dv in enumerate(seq.values, start=1))


def waldschmidt_of_sequence(d) -> Fraction:
    values = _degree_values(d)
    return min(Fraction(dv, r) for r, dv in enumerate(values, start=1))


def regularity(m: Matroid) -> int:
    """Castelnuovo-Mumford regularity of the quotient ring: rank minus the
    number of dual loops.  The ideal's regularity is this plus one."""
    return m.full_rank - len(m.dual().loops())
