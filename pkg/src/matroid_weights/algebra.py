"""Exact arithmetic over GF(q), q = p^e <= 256, and dense matrix kernels.

Field elements are plain integers in ``[0, q)`` encoding polynomials over
GF(p): the base-p digits of the code are the coefficients, so for prime
fields the code *is* the residue.  The reduction polynomial is chosen
deterministically (the monic irreducible of degree e whose coefficient
encoding is smallest), which makes every downstream computation
reproducible.  Multiplication runs off log/antilog tables built once at
construction; addition is a digit-wise table.

Matrices are immutable row-major tuples over a single field, with exact
Gaussian elimination for column rank and right-kernel bases.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .errors import (
    ColumnOutOfRange,
    FieldTooLarge,
    NonPrime,
    NotFullRowRank,
    ParseError,
)

MAX_Q = 256


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# --- polynomial helpers over GF(p), coefficients low degree first ----------

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial m."""
    r = list(a)
    dm = len(m) - 1
    while len(r) - 1 >= dm and r:
        lead = r[-1]
        if lead:
            shift = len(r) - 1 - dm
            for i, mi in enumerate(m):
                r[shift + i] = (r[shift + i] - lead * mi) % p
        r.pop()
    return _poly_trim(r)


def _code_to_digits(code: int, p: int, e: int) -> list[int]:
    digits = []
    for _ in range(e):
        digits.append(code % p)
        code //= p
    return digits


def _digits_to_code(digits: Sequence[int], p: int) -> int:
    code = 0
    for d in reversed(digits):
        code = code * p + d
    return code


def _monic_poly(code: int, degree: int, p: int) -> list[int]:
    """Monic polynomial of the given degree with low coefficients from code."""
    return _code_to_digits(code, p, degree) + [1]


def _is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Exhaustive factor search: no monic divisor of degree 1..deg//2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for code in range(p ** d):
            divisor = _monic_poly(code, d, p)
            if not _poly_mod(poly, divisor, p):
                return False
    return True


class FieldSpec:
    """Arithmetic tables for GF(p^e).

    Use :func:`make_field`; the constructor trusts its arguments apart from
    verifying irreducibility of the reduction polynomial.
    """

    def __init__(self, p: int, e: int, reduction_poly: Sequence[int]):
        self.p = p
        self.e = e
        self.q = p ** e
        self.reduction_poly = tuple(reduction_poly)
        if len(self.reduction_poly) != e + 1 or self.reduction_poly[-1] != 1:
            raise ValueError("reduction polynomial must be monic of degree e")
        if not _is_irreducible(self.reduction_poly, p):
            raise ValueError("reduction polynomial is reducible over GF(p)")
        self._build_tables()

    # -- construction --------------------------------------------------------

    def _raw_mul(self, a: int, b: int) -> int:
        pa = _code_to_digits(a, self.p, self.e)
        pb = _code_to_digits(b, self.p, self.e)
        prod = _poly_mod(_poly_mul(pa, pb, self.p), self.reduction_poly, self.p)
        prod += [0] * (self.e - len(prod))
        return _digits_to_code(prod, self.p)

    def _find_generator(self) -> int:
        for g in range(2, self.q):
            x, order = g, 1
            while x != 1:
                x = self._raw_mul(x, g)
                order += 1
            if order == self.q - 1:
                return g
        return 1  # q == 2

    def _build_tables(self) -> None:
        p, e, q = self.p, self.e, self.q
        g = self._find_generator()
        exp = [1] * (q - 1)
        for i in range(1, q - 1):
            exp[i] = self._raw_mul(exp[i - 1], g)
        log = [0] * q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp, self._log = exp, log

        add = [[0] * q for _ in range(q)]
        for a in range(q):
            da = _code_to_digits(a, p, e)
            for b in range(a, q):
                db = _code_to_digits(b, p, e)
                s = _digits_to_code([(x + y) % p for x, y in zip(da, db)], p)
                add[a][b] = s
                add[b][a] = s
        self._add = add

        mul = [[0] * q for _ in range(q)]
        for a in range(1, q):
            la = log[a]
            row = mul[a]
            for b in range(1, q):
                row[b] = exp[(la + log[b]) % (q - 1)]
        self._mul = mul

        self._neg = [0] * q
        for a in range(q):
            da = _code_to_digits(a, p, e)
            self._neg[a] = _digits_to_code([(-x) % p for x in da], p)
        self._inv = [0] * q
        for a in range(1, q):
            self._inv[a] = exp[(q - 1 - log[a]) % (q - 1)]

    # -- arithmetic ------------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self._inv[a]

    def elements(self) -> range:
        return range(self.q)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldSpec)
            and (self.p, self.e, self.reduction_poly)
            == (other.p, other.e, other.reduction_poly)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.reduction_poly))

    def __repr__(self) -> str:
        return f"FieldSpec(q={self.q}={self.p}^{self.e})"


@lru_cache(maxsize=None)
def make_field(p: int, e: int = 1) -> FieldSpec:
    """GF(p^e) with the deterministically smallest reduction polynomial.

    Monic degree-e polynomials are scanned in increasing order of the integer
    encoding of their low coefficients; the first irreducible one wins.  For
    e = 1 this yields the polynomial x, i.e. plain arithmetic mod p.
    """
    if not _is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if e < 1:
        raise NonPrime(f"extension degree must be >= 1, got {e}")
    if p ** e > MAX_Q:
        raise FieldTooLarge(f"q = {p}^{e} exceeds the cap of {MAX_Q}")
    for code in range(p ** e):
        poly = _monic_poly(code, e, p)
        if _is_irreducible(poly, p):
            return FieldSpec(p, e, poly)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class Mat:
    """Immutable dense matrix over one FieldSpec.

    Entries are field codes; ``rows`` is a tuple of row tuples.
    """

    def __init__(self, field: FieldSpec, rows: Iterable[Iterable[int]], ncols: int | None = None):
        self.field = field
        self.rows = tuple(tuple(int(x) for x in row) for row in rows)
        if self.rows:
            self.ncols = len(self.rows[0])
        else:
            if ncols is None:
                raise ValueError("empty matrix needs an explicit column count")
            self.ncols = ncols
        self.nrows = len(self.rows)
        for row in self.rows:
            if len(row) != self.ncols:
                raise ValueError("ragged rows")
            for x in row:
                if not 0 <= x < field.q:
                    raise ValueError(f"entry {x} out of range for GF({field.q})")

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.rows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Mat)
            and self.field == other.field
            and self.rows == other.rows
            and self.ncols == other.ncols
        )

    def __hash__(self) -> int:
        return hash((self.field, self.rows, self.ncols))

    def __repr__(self) -> str:
        return f"Mat({self.nrows}x{self.ncols} over GF({self.field.q}))"


def _eliminate(field: FieldSpec, rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot column list)."""
    mul, sub, inv = field.mul, field.sub, field.inv
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        piv_inv = inv(rows[r][c])
        if piv_inv != 1:
            rows[r] = [mul(piv_inv, x) for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [sub(x, mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rref(m: Mat) -> tuple[Mat, tuple[int, ...]]:
    """Reduced row echelon form and 0-based pivot columns."""
    rows, pivots = _eliminate(m.field, [list(r) for r in m.rows])
    return Mat(m.field, rows, ncols=m.ncols), tuple(pivots)


def rank(m: Mat) -> int:
    _, pivots = _eliminate(m.field, [list(r) for r in m.rows])
    return len(pivots)


def rank_of_columns(m: Mat, cols: Iterable[int]) -> int:
    """GF(q)-rank of the columns of m selected by 1-based indices."""
    idx = sorted(set(cols))
    if not idx:
        return 0
    if idx[0] < 1 or idx[-1] > m.ncols:
        raise ColumnOutOfRange(f"column indices must lie in 1..{m.ncols}")
    sel = [[row[j - 1] for j in idx] for row in m.rows]
    _, pivots = _eliminate(m.field, sel)
    return len(pivots)


def nullspace_basis(m: Mat) -> Mat:
    """Basis of the right kernel ``{v : m v^T = 0}`` as an (n-k) x n matrix.

    Requires full row rank; rows come from back-substitution of the reduced
    echelon form, one per free column in increasing column order.
    """
    field = m.field
    reduced, pivots = _eliminate(field, [list(r) for r in m.rows])
    if len(pivots) != m.nrows:
        raise NotFullRowRank(
            f"matrix has rank {len(pivots)} < {m.nrows} rows"
        )
    pivot_set = set(pivots)
    free_cols = [c for c in range(m.ncols) if c not in pivot_set]
    out = []
    for fc in free_cols:
        v = [0] * m.ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = field.neg(reduced[i][fc])
        out.append(v)
    return Mat(field, out, ncols=m.ncols)


# --- matrix text format -------------------------------------------------------
#
#   q <p> <e>
#   dims <k> <n>
#   <k rows of n integers in [0, q)>

def parse_matrix_text(text: str) -> Mat:
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty matrix file", line=1)

    def tokens(i: int) -> list[str]:
        if i >= len(lines):
            raise ParseError("unexpected end of file", line=len(lines) + 1)
        return lines[i].split()

    head = tokens(0)
    if len(head) != 3 or head[0] != "q":
        raise ParseError("expected header 'q <p> <e>'", line=1)
    try:
        p, e = int(head[1]), int(head[2])
    except ValueError:
        raise ParseError("field parameters must be integers", line=1)
    try:
        field = make_field(p, e)
    except (NonPrime, FieldTooLarge) as exc:
        raise ParseError(str(exc), line=1)

    dims = tokens(1)
    if len(dims) != 3 or dims[0] != "dims":
        raise ParseError("expected 'dims <k> <n>'", line=2)
    try:
        k, n = int(dims[1]), int(dims[2])
    except ValueError:
        raise ParseError("dimensions must be integers", line=2)
    if k < 0 or n < 1:
        raise ParseError("dimensions must be positive", line=2)

    rows = []
    for i in range(k):
        parts = tokens(2 + i)
        if len(parts) != n:
            raise ParseError(f"expected {n} entries, found {len(parts)}", line=3 + i)
        row = []
        for col, tok in enumerate(parts, start=1):
            try:
                v = int(tok)
            except ValueError:
                raise ParseError(f"not an integer: {tok!r}", line=3 + i, column=col)
            if not 0 <= v < field.q:
                raise ParseError(
                    f"entry {v} outside [0, {field.q})", line=3 + i, column=col
                )
            row.append(v)
        rows.append(row)
    for extra in range(2 + k, len(lines)):
        if lines[extra].strip():
            raise ParseError("trailing content after matrix rows", line=extra + 1)
    return Mat(field, rows, ncols=n)


def format_matrix_text(m: Mat) -> str:
    out = [f"q {m.field.p} {m.field.e}", f"dims {m.nrows} {m.ncols}"]
    for row in m.rows:
        out.append(" ".join(str(x) for x in row))
    return "\n".join(out) + "\n"
