"""Matroid kernel: rank oracles, circuits, flats, duality, elongation.

A matroid lives on the ground set {1, .., n} and is defined by a rank
oracle.  Backends: column spaces of a matrix over GF(q), uniform matroids,
explicit basis families, and derived views (dual, elongation, truncation)
that chain rank calls to a parent.  Subsets are bitmasks internally
(element i == bit i-1) and sorted 1-based tuples at the API surface.

Every instance memoizes rank queries by mask.  Instances are immutable
apart from that cache; cached values are idempotent, so concurrent readers
under CPython always observe correct results.

Enumeration (circuits, flats, bases) is guarded; see ``guards``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

from . import algebra
from .errors import (
    ElementOutOfRange,
    ElongationOutOfRange,
    InvalidBases,
    ParseError,
    RankHypothesisViolated,
    RankOutOfRange,
    TruncationOutOfRange,
)
from .guards import MAX_GROUND_SET, check_enumeration

GroundSubset = tuple  # sorted tuple of 1-based elements at the API surface


def mask_of(n: int, elements: Iterable[int]) -> int:
    mask = 0
    for e in elements:
        if not 1 <= e <= n:
            raise ElementOutOfRange(f"element {e} outside 1..{n}")
        mask |= 1 << (e - 1)
    return mask


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


def _sorted_sets(masks: Iterable[int]) -> list[tuple[int, ...]]:
    """Deterministic order: cardinality, then lexicographic on sorted elements."""
    sets = [elements_of(m) for m in masks]
    sets.sort(key=lambda s: (len(s), s))
    return sets


class Matroid:
    """Base class; subclasses implement ``_rank_mask_impl``."""

    def __init__(self, n: int):
        if not 1 <= n <= MAX_GROUND_SET:
            raise ElementOutOfRange(
                f"ground set size {n} outside 1..{MAX_GROUND_SET}"
            )
        self.n = n
        self.full_mask = (1 << n) - 1
        self.axioms_verified = True
        self._rank_memo: dict[int, int] = {}
        self._flat_levels: list[list[int]] | None = None
        self._bases_masks_cache: list[int] | None = None
        self._dual_cache: "DualMatroid | None" = None

    # -- rank ------------------------------------------------------------------

    def _rank_mask_impl(self, mask: int) -> int:
        raise NotImplementedError

    def rank_mask(self, mask: int) -> int:
        r = self._rank_memo.get(mask)
        if r is None:
            r = self._rank_memo[mask] = self._rank_mask_impl(mask)
        return r

    def rank(self, subset: Iterable[int]) -> int:
        return self.rank_mask(mask_of(self.n, subset))

    @property
    def full_rank(self) -> int:
        return self.rank_mask(self.full_mask)

    @property
    def corank(self) -> int:
        """Rank of the dual matroid, n - rk(M)."""
        return self.n - self.full_rank

    def is_independent(self, subset: Iterable[int]) -> bool:
        mask = mask_of(self.n, subset)
        return self.rank_mask(mask) == mask.bit_count()

    # -- closure and flats --------------------------------------------------------

    def closure_mask(self, mask: int) -> int:
        r = self.rank_mask(mask)
        out = mask
        rest = self.full_mask & ~mask
        while rest:
            bit = rest & -rest
            rest ^= bit
            if self.rank_mask(mask | bit) == r:
                out |= bit
        return out

    def closure(self, subset: Iterable[int]) -> tuple[int, ...]:
        return elements_of(self.closure_mask(mask_of(self.n, subset)))

    def _flat_levels_up_to(self, r: int) -> list[list[int]]:
        """Flat masks by rank, built level by level from closure(empty)."""
        if self._flat_levels is None:
            self._flat_levels = [[self.closure_mask(0)]]
        levels = self._flat_levels
        while len(levels) <= r:
            prev = levels[-1]
            nxt: set[int] = set()
            for fm in prev:
                rest = self.full_mask & ~fm
                while rest:
                    bit = rest & -rest
                    rest ^= bit
                    # F is a flat and e lies outside it, so rk(F + e) = rk(F) + 1
                    # and the closure is a flat of the next rank.
                    nxt.add(self.closure_mask(fm | bit))
            levels.append(sorted(nxt))
        return levels

    def flats_of_rank(self, r: int, guard: int | None = None) -> list[tuple[int, ...]]:
        if not 0 <= r <= self.full_rank:
            raise RankOutOfRange(f"flat rank {r} outside 0..{self.full_rank}")
        check_enumeration(self.n, guard, "flat enumeration")
        return _sorted_sets(self._flat_levels_up_to(r)[r])

    def flat_masks_of_rank(self, r: int, guard: int | None = None) -> list[int]:
        if not 0 <= r <= self.full_rank:
            raise RankOutOfRange(f"flat rank {r} outside 0..{self.full_rank}")
        check_enumeration(self.n, guard, "flat enumeration")
        return list(self._flat_levels_up_to(r)[r])

    # -- circuits ----------------------------------------------------------------

    def circuits(self, guard: int | None = None) -> list[tuple[int, ...]]:
        """Inclusion-minimal dependent sets, by (cardinality, lexicographic)."""
        check_enumeration(self.n, guard, "circuit enumeration")
        found: list[int] = []
        out: list[tuple[int, ...]] = []
        universe = range(1, self.n + 1)
        for size in range(1, self.full_rank + 2):
            for combo in combinations(universe, size):
                mask = 0
                for e in combo:
                    mask |= 1 << (e - 1)
                if any(c & mask == c for c in found):
                    continue
                if self.rank_mask(mask) < size:
                    found.append(mask)
                    out.append(combo)
        return out

    def min_circuit_size(self, guard: int | None = None) -> int | None:
        check_enumeration(self.n, guard, "circuit search")
        universe = range(1, self.n + 1)
        for size in range(1, self.full_rank + 2):
            for combo in combinations(universe, size):
                mask = mask_of(self.n, combo)
                if self.rank_mask(mask) < size:
                    return size
        return None

    # -- bases ---------------------------------------------------------------------

    def bases_masks(self, guard: int | None = None) -> list[int]:
        if self._bases_masks_cache is None:
            check_enumeration(self.n, guard, "basis enumeration")
            k = self.full_rank
            masks = []
            for combo in combinations(range(1, self.n + 1), k):
                mask = mask_of(self.n, combo)
                if self.rank_mask(mask) == k:
                    masks.append(mask)
            self._bases_masks_cache = masks
        return self._bases_masks_cache

    def bases(self, guard: int | None = None) -> list[tuple[int, ...]]:
        return _sorted_sets(self.bases_masks(guard))

    # -- derived matroids -----------------------------------------------------------

    def dual(self) -> "DualMatroid":
        if self._dual_cache is None:
            self._dual_cache = DualMatroid(self)
        return self._dual_cache

    def elongate(self, r: int) -> "Matroid":
        """Elongation by rank r: independent sets get nullity allowance r."""
        if r == 0:
            return self
        if not 0 <= r <= self.corank:
            raise ElongationOutOfRange(
                f"elongation rank {r} outside 0..{self.corank}"
            )
        return ElongationMatroid(self, r)

    def truncate(self, r: int) -> "Matroid":
        if r == 0:
            return self
        if not 0 <= r <= self.full_rank:
            raise TruncationOutOfRange(
                f"truncation rank {r} outside 0..{self.full_rank}"
            )
        return TruncationMatroid(self, r)

    # -- loops and coloops -------------------------------------------------------------

    def loops(self) -> tuple[int, ...]:
        return tuple(
            e for e in range(1, self.n + 1) if self.rank_mask(1 << (e - 1)) == 0
        )

    def coloops(self) -> tuple[int, ...]:
        return self.dual().loops()

    # -- paving predicates (via the Hamming-weight criteria, not circuit scans) --------

    def ghw_value(self, r: int, guard: int | None = None) -> int:
        """r-th generalized Hamming weight: n minus the largest flat of the
        dual of rank crk - r (equivalently the minimum circuit size of the
        (r-1)-st elongation)."""
        crk = self.corank
        if not 1 <= r <= crk:
            raise RankOutOfRange(f"weight index {r} outside 1..{crk}")
        dual = self.dual()
        flats = dual.flat_masks_of_rank(crk - r, guard)
        return self.n - max(f.bit_count() for f in flats)

    def is_paving(self, guard: int | None = None) -> bool:
        k = self.full_rank
        if not 2 <= k <= self.n - 1:
            raise RankHypothesisViolated(
                f"paving test needs rank in 2..n-1, got rank {k} on {self.n} elements"
            )
        return self.ghw_value(1, guard) >= k

    def is_sparse_paving(self, guard: int | None = None) -> bool:
        k = self.full_rank
        if not 2 <= k <= self.n - 2:
            raise RankHypothesisViolated(
                f"sparse paving test needs rank in 2..n-2, got rank {k} on {self.n} elements"
            )
        d1 = self.ghw_value(1, guard)
        return k <= d1 <= k + 1 and self.ghw_value(2, guard) == k + 2

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n})"


class LinearMatroid(Matroid):
    """Column matroid of a matrix over GF(q)."""

    def __init__(self, mat: algebra.Mat):
        super().__init__(mat.ncols)
        self.mat = mat

    def _rank_mask_impl(self, mask: int) -> int:
        return algebra.rank_of_columns(self.mat, elements_of(mask))


class UniformMatroid(Matroid):
    def __init__(self, k: int, n: int):
        super().__init__(n)
        if not 0 <= k <= n:
            raise RankOutOfRange(f"uniform rank {k} outside 0..{n}")
        self.k = k

    def _rank_mask_impl(self, mask: int) -> int:
        return min(mask.bit_count(), self.k)

    def __repr__(self) -> str:
        return f"UniformMatroid({self.k}, {self.n})"


class BasisMatroid(Matroid):
    """Matroid given by an explicit basis family.

    The symmetric exchange axiom is verified pairwise at construction for
    n <= 24; for larger ground sets the check is skipped and
    ``axioms_verified`` is left False (trust-but-mark).
    """

    def __init__(self, n: int, bases: Iterable[Iterable[int]], verify: bool | None = None):
        super().__init__(n)
        masks = sorted({mask_of(n, b) for b in bases})
        if not masks:
            raise InvalidBases("basis family is empty")
        size = masks[0].bit_count()
        if any(m.bit_count() != size for m in masks):
            raise InvalidBases("bases have unequal cardinalities")
        self._bases = masks
        self._bases_masks_cache = list(masks)
        if verify is None:
            verify = n <= 24
        if verify:
            self._verify_exchange()
        else:
            self.axioms_verified = False

    def _verify_exchange(self) -> None:
        items = set(self._bases)
        for b1 in self._bases:
            for b2 in self._bases:
                only1 = b1 & ~b2
                rest = only1
                while rest:
                    x = rest & -rest
                    rest ^= x
                    cand = b2 & ~b1
                    ok = False
                    c = cand
                    while c:
                        y = c & -c
                        c ^= y
                        if ((b1 ^ x) | y) in items and ((b2 ^ y) | x) in items:
                            ok = True
                            break
                    if not ok:
                        raise InvalidBases(
                            "symmetric exchange fails for bases "
                            f"{elements_of(b1)} and {elements_of(b2)} at element "
                            f"{elements_of(x)[0]}"
                        )

    def _rank_mask_impl(self, mask: int) -> int:
        return max((mask & b).bit_count() for b in self._bases)


class DualMatroid(Matroid):
    """Dual view: rk*(A) = |A| - rk(M) + rk(E - A)."""

    def __init__(self, parent: Matroid):
        super().__init__(parent.n)
        self.parent = parent
        self.axioms_verified = parent.axioms_verified

    def _rank_mask_impl(self, mask: int) -> int:
        p = self.parent
        return mask.bit_count() - p.full_rank + p.rank_mask(p.full_mask & ~mask)


class ElongationMatroid(Matroid):
    """Elongation by rank r: rk(A) = min(rk_M(A) + r, |A|)."""

    def __init__(self, parent: Matroid, r: int):
        super().__init__(parent.n)
        self.parent = parent
        self.r = r
        self.axioms_verified = parent.axioms_verified

    def _rank_mask_impl(self, mask: int) -> int:
        return min(self.parent.rank_mask(mask) + self.r, mask.bit_count())


class TruncationMatroid(Matroid):
    """Truncation by rank r: rk(A) = min(rk_M(A), rk(M) - r)."""

    def __init__(self, parent: Matroid, r: int):
        super().__init__(parent.n)
        self.parent = parent
        self.r = r
        self.axioms_verified = parent.axioms_verified
        self._cap = parent.full_rank - r

    def _rank_mask_impl(self, mask: int) -> int:
        return min(self.parent.rank_mask(mask), self._cap)


def from_matrix(mat: algebra.Mat) -> LinearMatroid:
    return LinearMatroid(mat)


def from_bases(n: int, bases: Iterable[Iterable[int]], verify: bool | None = None) -> BasisMatroid:
    return BasisMatroid(n, bases, verify=verify)


def same_matroid(a: Matroid, b: Matroid) -> bool:
    """Exhaustive rank comparison over all 2^n subsets (small n only)."""
    if a.n != b.n:
        return False
    return all(a.rank_mask(m) == b.rank_mask(m) for m in range(1 << a.n))


# --- bases file format ---------------------------------------------------------
#
#   n <n>
#   <one basis per line: space-separated 1-based indices>
#   lines starting with '#' are comments

def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    for i, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield i, stripped


def parse_bases_text(text: str) -> BasisMatroid:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty bases file", line=1)
    lineno, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "n":
        raise ParseError("expected header 'n <n>'", line=lineno)
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError("ground set size must be an integer", line=lineno)
    bases = []
    for lineno, body in lines[1:]:
        try:
            basis = [int(tok) for tok in body.split()]
        except ValueError:
            raise ParseError(f"non-integer basis entry in {body!r}", line=lineno)
        for e in basis:
            if not 1 <= e <= n:
                raise ParseError(f"element {e} outside 1..{n}", line=lineno)
        bases.append(basis)
    if not bases:
        raise ParseError("bases file lists no bases", line=lines[0][0])
    try:
        return BasisMatroid(n, bases)
    except (InvalidBases, ElementOutOfRange) as exc:
        raise ParseError(str(exc))


def format_bases_text(m: Matroid, guard: int | None = None) -> str:
    out = [f"n {m.n}"]
    for basis in m.bases(guard):
        out.append(" ".join(str(e) for e in basis))
    return "\n".join(out) + "\n"
