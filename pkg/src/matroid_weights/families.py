"""Named matroids, codes, and closed-form weight sequences used everywhere
as fixtures: uniform matroids, the Vamos matroid, Steiner-system matroids,
first-order Reed-Muller and binary dual Hamming codes, two block-matrix
code families with known weight hierarchies, and the constant-weight
closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from . import algebra
from .codes import LinearCode
from .errors import BadParams, DivisibilityViolated, InvalidSteiner, ParseError, TooLarge
from .matroid import BasisMatroid, Matroid, UniformMatroid
from .weights import GhwSequence


def uniform(k: int, n: int) -> UniformMatroid:
    """U_{k,n}: every k-subset of n elements is a basis."""
    if n < 1 or not 0 <= k <= n:
        raise BadParams(f"uniform matroid needs 0 <= k <= n, got k={k}, n={n}")
    return UniformMatroid(k, n)


VAMOS_CIRCUIT_HYPERPLANES = (
    (1, 2, 3, 4),
    (1, 4, 5, 6),
    (2, 3, 5, 6),
    (1, 4, 7, 8),
    (2, 3, 7, 8),
)


def vamos() -> BasisMatroid:
    """The rank-4 Vamos matroid on 8 elements: all 4-subsets are bases
    except five circuit-hyperplanes.  Self-dual and not representable."""
    blocked = {frozenset(c) for c in VAMOS_CIRCUIT_HYPERPLANES}
    bases = [
        c for c in combinations(range(1, 9), 4) if frozenset(c) not in blocked
    ]
    return BasisMatroid(8, bases)


# --- Steiner systems ------------------------------------------------------------

@dataclass(frozen=True)
class SteinerSystem:
    """Blocks of size k over {1..n} covering every t-subset exactly once."""

    n: int
    t: int
    k: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not 0 < self.t < self.k < self.n:
            raise InvalidSteiner(
                f"need t < k < n, got t={self.t}, k={self.k}, n={self.n}"
            )
        object.__setattr__(
            self, "blocks", tuple(tuple(sorted(b)) for b in self.blocks)
        )
        seen: dict[tuple[int, ...], tuple[int, ...]] = {}
        for block in self.blocks:
            if len(set(block)) != self.k:
                raise InvalidSteiner(f"block {block} does not have {self.k} distinct elements")
            if any(not 1 <= e <= self.n for e in block):
                raise InvalidSteiner(f"block {block} leaves the ground set 1..{self.n}")
            for sub in combinations(block, self.t):
                if sub in seen:
                    raise InvalidSteiner(
                        f"{self.t}-subset {sub} lies in two blocks", witness=sub
                    )
                seen[sub] = block
        for sub in combinations(range(1, self.n + 1), self.t):
            if sub not in seen:
                raise InvalidSteiner(
                    f"{self.t}-subset {sub} is covered by no block", witness=sub
                )


FANO_BLOCKS = (
    (1, 2, 4),
    (1, 3, 5),
    (2, 3, 6),
    (1, 6, 7),
    (2, 5, 7),
    (3, 4, 7),
    (4, 5, 6),
)


def fano_steiner() -> SteinerSystem:
    """The S(2,3,7) Steiner triple system on the Fano blocks."""
    return SteinerSystem(7, 2, 3, FANO_BLOCKS)


def steiner_matroid(s: SteinerSystem) -> BasisMatroid:
    """Rank-k matroid whose bases are the k-subsets that are not blocks."""
    blocked = {frozenset(b) for b in s.blocks}
    bases = [
        c
        for c in combinations(range(1, s.n + 1), s.k)
        if frozenset(c) not in blocked
    ]
    return BasisMatroid(s.n, bases)


# --- code families -----------------------------------------------------------------

RM_MAX_POINTS = 512


def reed_muller_code(field: algebra.FieldSpec, m: int) -> LinearCode:
    """First-order Reed-Muller code over GF(q): the all-ones row on top of
    every point of GF(q)^m, points listed in increasing lexicographic order."""
    if m < 1:
        raise BadParams(f"need m >= 1, got {m}")
    q = field.q
    if q ** m > RM_MAX_POINTS:
        raise TooLarge(f"q^m = {q ** m} exceeds {RM_MAX_POINTS} columns")
    points = list(product(range(q), repeat=m))
    rows = [[1] * len(points)]
    for i in range(m):
        rows.append([pt[i] for pt in points])
    return LinearCode(algebra.Mat(field, rows))


def dual_hamming_code(m: int) -> LinearCode:
    """Binary dual Hamming code: all nonzero points of GF(2)^m as columns,
    in increasing lexicographic order (the Reed-Muller matrix with the
    all-ones row and then the zero column removed)."""
    if not 2 <= m <= 8:
        raise BadParams(f"need 2 <= m <= 8, got {m}")
    gf2 = algebra.make_field(2)
    points = [pt for pt in product(range(2), repeat=m) if any(pt)]
    rows = [[pt[i] for pt in points] for i in range(m)]
    return LinearCode(algebra.Mat(gf2, rows))


def _block_matrix_code(field: algebra.FieldSpec, p_rows: list[list[int]]) -> LinearCode:
    """Code with generator [I_k | -P^T] for the given P (parity is [P | I])."""
    ell = len(p_rows)
    k = len(p_rows[0])
    rows = []
    for i in range(k):
        row = [1 if j == i else 0 for j in range(k)]
        row += [field.neg(p_rows[r][i]) for r in range(ell)]
        rows.append(row)
    return LinearCode(algebra.Mat(field, rows))


def complete_intersection_code(field: algebra.FieldSpec, n_list: list[int]) -> LinearCode:
    """Code whose dual-matroid circuits are disjoint blocks of sizes
    n_1 + 1, .., n_k + 1: P stacks an all-ones column block of height n_j in
    column j.  Weight hierarchy: d_r = r + n_1 + .. + n_r."""
    k = len(n_list)
    if k < 2:
        raise BadParams("need at least two block sizes")
    if any(x < 1 for x in n_list):
        raise BadParams(f"block sizes must be positive: {n_list}")
    if any(a > b for a, b in zip(n_list, n_list[1:])):
        raise BadParams(f"block sizes must be nondecreasing: {n_list}")
    p_rows = []
    for j, nj in enumerate(n_list):
        p_rows.extend([[1 if c == j else 0 for c in range(k)]] * nj)
    return _block_matrix_code(field, p_rows)


def all_ones_code(field: algebra.FieldSpec, k: int, ell: int) -> LinearCode:
    """Code with P the all-ones ell x k matrix: d_r = r + 1 below r = k and
    d_k = n, the standard example where the last weight escapes the
    initial-degree bound."""
    if k < 2 or ell < 2:
        raise BadParams(f"need k, ell >= 2, got k={k}, ell={ell}")
    p_rows = [[1] * k for _ in range(ell)]
    return _block_matrix_code(field, p_rows)


# --- constant weight codes -----------------------------------------------------------

def prime_power(q: int) -> tuple[int, int]:
    """Factor q = p^e with p prime; rejects anything else."""
    if q < 2:
        raise BadParams(f"{q} is not a prime power")
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        return q, 1
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    if q != 1:
        raise BadParams("not a prime power")
    return p, e


def constant_weight_ghw(q: int, k: int, d: int) -> GhwSequence:
    """Closed-form weight hierarchy of a constant-weight [n,k,d] code over
    GF(q): d_i = d (q^i - 1) / (q^{i-1} (q - 1)).  Needs q^{k-1} | d."""
    prime_power(q)
    if k < 1 or d < 1:
        raise BadParams(f"need k, d >= 1, got k={k}, d={d}")
    if d % q ** (k - 1) != 0:
        raise DivisibilityViolated(
            f"constant-weight hierarchy needs {q}^{k - 1} to divide {d}"
        )
    values = tuple(
        d * (q**i - 1) // (q ** (i - 1) * (q - 1)) for i in range(1, k + 1)
    )
    return GhwSequence(values, source="constant-weight")


CONSTANT_WEIGHT_EXAMPLE_ROWS = (
    (1, 0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2),
    (0, 1, 1, 1, 0, 0, 0, 1, 1, 1, 2, 2, 2),
    (0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1),
)


def constant_weight_example_code() -> LinearCode:
    """The classical [13,3] ternary code in which every nonzero codeword has
    weight 9; its hierarchy matches constant_weight_ghw(3, 3, 9)."""
    gf3 = algebra.make_field(3)
    return LinearCode(algebra.Mat(gf3, CONSTANT_WEIGHT_EXAMPLE_ROWS))


# --- Steiner blocks file format --------------------------------------------------------
#
#   n <n> t <t> k <k>
#   <one block per line: space-separated 1-based indices>

def parse_blocks_text(text: str) -> SteinerSystem:
    lines = [
        (i, s)
        for i, s in enumerate((ln.strip() for ln in text.splitlines()), start=1)
        if s and not s.startswith("#")
    ]
    if not lines:
        raise ParseError("empty blocks file", line=1)
    lineno, head = lines[0]
    parts = head.split()
    if len(parts) != 6 or parts[0] != "n" or parts[2] != "t" or parts[4] != "k":
        raise ParseError("expected header 'n <n> t <t> k <k>'", line=lineno)
    try:
        n, t, k = int(parts[1]), int(parts[3]), int(parts[5])
    except ValueError:
        raise ParseError("header parameters must be integers", line=lineno)
    blocks = []
    for lineno, body in lines[1:]:
        try:
            block = tuple(int(tok) for tok in body.split())
        except ValueError:
            raise ParseError(f"non-integer block entry in {body!r}", line=lineno)
        blocks.append(block)
    try:
        return SteinerSystem(n, t, k, tuple(blocks))
    except InvalidSteiner as exc:
        raise ParseError(f"not a Steiner system: {exc}")


def format_blocks_text(s: SteinerSystem) -> str:
    out = [f"n {s.n} t {s.t} k {s.k}"]
    for block in s.blocks:
        out.append(" ".join(str(e) for e in block))
    return "\n".join(out) + "\n"
