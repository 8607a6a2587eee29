"""Linear codes over GF(q): duality, weights, generalized Hamming weights.

A code is wrapped around its generator matrix; the parity-check matrix is
the right-kernel basis, computed once.  Generalized Hamming weights come in
two independent flavours: direct support-subset enumeration against the
parity-check columns, and the weight sequence of the dual column matroid.
They must agree everywhere, which the tests exploit.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from . import algebra, weights
from .errors import BadParams, NotFullRowRank, ROutOfRange
from .guards import check_enumeration
from .matroid import LinearMatroid, mask_of


def weight(v: Sequence[int]) -> int:
    """Number of nonzero entries."""
    return sum(1 for x in v if x)


class LinearCode:
    """A k-dimensional code of length n, held as a full-row-rank generator.

    k = n is degenerate (the whole space) and allowed only on request;
    codes with zero generator columns are accepted but flagged.
    """

    def __init__(self, gen: algebra.Mat, allow_degenerate: bool = False):
        self.gen = gen
        self.k = gen.nrows
        self.n = gen.ncols
        if self.k < 1:
            raise BadParams("a code needs at least one generator row")
        if self.k > self.n or (self.k == self.n and not allow_degenerate):
            raise BadParams(
                f"dimension {self.k} needs length > {self.n} "
                "(pass allow_degenerate for k = n)"
            )
        if algebra.rank(gen) != self.k:
            raise NotFullRowRank("generator matrix does not have full row rank")
        self.has_zero_column = any(
            all(row[j] == 0 for row in gen.rows) for j in range(self.n)
        )
        self._parity: algebra.Mat | None = None
        self._matroid: LinearMatroid | None = None
        self._parity_matroid: LinearMatroid | None = None
        self._wei_prefix: list[int] = []

    @property
    def field(self) -> algebra.FieldSpec:
        return self.gen.field

    @property
    def parity(self) -> algebra.Mat:
        if self._parity is None:
            self._parity = algebra.nullspace_basis(self.gen)
        return self._parity

    def matroid(self) -> LinearMatroid:
        """Column matroid of the generator matrix."""
        if self._matroid is None:
            self._matroid = LinearMatroid(self.gen)
        return self._matroid

    def parity_matroid(self) -> LinearMatroid:
        """Column matroid of the parity-check matrix (= dual of matroid())."""
        if self._parity_matroid is None:
            self._parity_matroid = LinearMatroid(self.parity)
        return self._parity_matroid

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}] over GF({self.field.q}))"


def dual_code(c: LinearCode) -> LinearCode:
    """The orthogonal code, generated by the parity-check rows."""
    return LinearCode(c.parity)


def ghw_wei(c: LinearCode, r: int, guard: int | None = None) -> int:
    """r-th generalized Hamming weight by support-subset enumeration:
    the least |J| with |J| - rank(parity columns J) >= r.

    Weights are computed in ascending r; each search starts one past the
    previous weight (the sequence is strictly increasing), with early exit
    on the first qualifying subset of a size class.
    """
    if not 1 <= r <= c.k:
        raise ROutOfRange(f"r = {r} outside 1..{c.k}")
    check_enumeration(c.n, guard, "support enumeration")
    pm = c.parity_matroid()
    prefix = c._wei_prefix
    while len(prefix) < r:
        j = len(prefix) + 1
        lower = max(prefix[-1] + 1 if prefix else 1, j)
        found = None
        for size in range(lower, c.n + 1):
            cap = size - j  # need rank <= |J| - j
            for combo in combinations(range(1, c.n + 1), size):
                if pm.rank_mask(mask_of(c.n, combo)) <= cap:
                    found = size
                    break
            if found is not None:
                break
        if found is None:
            raise AssertionError("weight search failed; code invariant broken")
        prefix.append(found)
    return prefix[r - 1]


def ghw_wei_sequence(c: LinearCode, guard: int | None = None) -> tuple[int, ...]:
    return tuple(ghw_wei(c, r, guard) for r in range(1, c.k + 1))


def ghw_via_matroid(c: LinearCode, r: int, guard: int | None = None) -> int:
    """r-th weight through the matroid route: the weight sequence of the
    dual of the code's column matroid."""
    if not 1 <= r <= c.k:
        raise ROutOfRange(f"r = {r} outside 1..{c.k}")
    return weights.ghw(c.matroid().dual(), guard)[r]


def ghw_matroid_sequence(c: LinearCode, guard: int | None = None) -> weights.GhwSequence:
    return weights.ghw(c.matroid().dual(), guard)


CODEWORD_ENUM_CAP = 1 << 20


def min_distance(c: LinearCode, guard: int | None = None) -> int:
    """Minimum weight of a nonzero codeword.

    Enumerates all q^k codewords when that count is small enough, sharing
    row-combination prefixes; otherwise falls back to the r = 1 weight.
    """
    q = c.field.q
    if q ** c.k > CODEWORD_ENUM_CAP:
        return ghw_wei(c, 1, guard)
    field = c.field
    add, mul = field.add, field.mul
    rows = c.gen.rows
    best = c.n + 1

    def walk(i: int, acc: tuple[int, ...], any_nonzero: bool) -> None:
        nonlocal best
        if i == c.k:
            if any_nonzero:
                w = weight(acc)
                if w < best:
                    best = w
            return
        row = rows[i]
        for coeff in range(q):
            if coeff == 0:
                walk(i + 1, acc, any_nonzero)
            else:
                nxt = tuple(add(a, mul(coeff, x)) for a, x in zip(acc, row))
                walk(i + 1, nxt, True)

    walk(0, (0,) * c.n, False)
    return best
