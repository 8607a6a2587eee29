"""Finite fields and exact matrix kernels."""

import random

import pytest

import matroid_weights as mw
from matroid_weights import algebra
from matroid_weights.errors import (
    ColumnOutOfRange,
    FieldTooLarge,
    NonPrime,
    NotFullRowRank,
    ParseError,
)

GF2 = mw.make_field(2)
GF3 = mw.make_field(3)
GF4 = mw.make_field(2, 2)


def test_prime_fields():
    assert (GF2.p, GF2.e, GF2.q) == (2, 1, 2)
    assert (GF3.p, GF3.e, GF3.q) == (3, 1, 3)
    assert GF2.add(1, 1) == 0
    assert GF3.mul(2, 2) == 1


def test_gf4_reduction_polynomial():
    # x^2 + x + 1 is the only irreducible quadratic over GF(2)
    assert GF4.reduction_poly == (1, 1, 1)
    assert GF4.q == 4


def test_make_field_errors():
    with pytest.raises(NonPrime):
        mw.make_field(4)
    with pytest.raises(NonPrime):
        mw.make_field(2, 0)
    with pytest.raises(FieldTooLarge):
        mw.make_field(2, 9)
    mw.make_field(2, 8)  # q = 256 is the cap, allowed


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2), (2, 4)])
def test_field_axioms_exhaustive(p, e):
    f = mw.make_field(p, e)
    q = f.q
    assert q <= 16
    for a in range(q):
        assert f.add(a, 0) == a
        assert f.mul(a, 1) == a
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1
        for b in range(q):
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            for c in range(q):
                assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


def test_rank_of_columns_examples():
    g = mw.Mat(GF2, [[1, 0, 1], [0, 1, 1]])
    assert mw.rank_of_columns(g, [1, 2]) == 2
    assert mw.rank_of_columns(g, [1, 2, 3]) == 2  # col3 = col1 + col2
    assert mw.rank_of_columns(g, []) == 0
    with pytest.raises(ColumnOutOfRange):
        mw.rank_of_columns(g, [0])
    with pytest.raises(ColumnOutOfRange):
        mw.rank_of_columns(g, [4])


def test_rank_monotonicity_random():
    rng = random.Random(7)
    for q, e in [(2, 1), (3, 1), (2, 2)]:
        f = mw.make_field(q, e)
        for _ in range(20):
            k, n = rng.randint(1, 4), rng.randint(2, 6)
            m = mw.Mat(f, [[rng.randrange(f.q) for _ in range(n)] for _ in range(k)])
            cols = list(range(1, n + 1))
            a = set(rng.sample(cols, rng.randint(0, n)))
            extra = set(rng.sample(cols, rng.randint(0, n)))
            b = a | extra
            ra, rb = mw.rank_of_columns(m, a), mw.rank_of_columns(m, b)
            assert ra <= rb <= ra + len(b - a)


def test_nullspace_basic():
    g = mw.Mat(GF2, [[1, 0, 1], [0, 1, 1]])
    h = mw.nullspace_basis(g)
    assert h.rows == ((1, 1, 1),)


def test_nullspace_block_identity():
    g = mw.Mat(GF3, [[1, 0, 0, 0], [0, 1, 0, 0]])
    h = mw.nullspace_basis(g)
    assert h.rows == ((0, 0, 1, 0), (0, 0, 0, 1))


def test_nullspace_standard_form_gives_p_identity():
    # G = [I_2 | -P^T] with P the 2x2 one-block-per-column pattern;
    # the kernel basis must come out as [P | I_2]
    g = mw.Mat(GF2, [[1, 0, 1, 0], [0, 1, 0, 1]])
    h = mw.nullspace_basis(g)
    assert h.rows == ((1, 0, 1, 0), (0, 1, 0, 1))


def test_nullspace_properties():
    rng = random.Random(11)
    for f in (GF2, GF3, GF4):
        for _ in range(15):
            n = rng.randint(2, 6)
            k = rng.randint(1, n - 1)
            rows = [[rng.randrange(f.q) for _ in range(n)] for _ in range(k)]
            m = mw.Mat(f, rows)
            if algebra.rank(m) != k:
                with pytest.raises(NotFullRowRank):
                    mw.nullspace_basis(m)
                continue
            h = mw.nullspace_basis(m)
            assert h.nrows == n - k
            assert algebra.rank(h) == n - k
            for hrow in h.rows:
                for grow in m.rows:
                    acc = 0
                    for x, y in zip(grow, hrow):
                        acc = f.add(acc, f.mul(x, y))
                    assert acc == 0


def test_matrix_text_roundtrip():
    g = mw.Mat(GF4, [[1, 2, 3], [0, 1, 2]])
    text = algebra.format_matrix_text(g)
    back = algebra.parse_matrix_text(text)
    assert back == g
    assert text.splitlines()[0] == "q 2 2"


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("", "empty"),
        ("x 2 1\ndims 1 2\n0 1\n", "header"),
        ("q 2 1\nsize 1 2\n0 1\n", "dims"),
        ("q 2 1\ndims 2 2\n0 1\n", "end of file"),
        ("q 2 1\ndims 1 2\n0 1 1\n", "expected 2 entries"),
        ("q 2 1\ndims 1 2\n0 7\n", "outside"),
        ("q 2 1\ndims 1 2\n0 z\n", "not an integer"),
        ("q 4 1\ndims 1 2\n0 1\n", "prime"),
    ],
)
def test_matrix_text_rejects(text, fragment):
    with pytest.raises(ParseError) as err:
        algebra.parse_matrix_text(text)
    assert fragment in str(err.value)


def test_parse_error_carries_location():
    with pytest.raises(ParseError) as err:
        algebra.parse_matrix_text("q 2 1\ndims 1 3\n0 1 z\n")
    assert err.value.line == 3
    assert err.value.column == 3
