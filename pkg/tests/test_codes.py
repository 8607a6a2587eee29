"""Linear codes: duality, minimum distance, generalized Hamming weights."""

import random

import pytest

import matroid_weights as mw
from matroid_weights import algebra, codes
from matroid_weights.errors import BadParams, NotFullRowRank, ROutOfRange

from conftest import GF2, GF3


def _code(field, rows):
    return mw.LinearCode(mw.Mat(field, rows))


def test_constructor_contracts():
    with pytest.raises(NotFullRowRank):
        _code(GF2, [[1, 0, 1], [1, 0, 1]])
    with pytest.raises(BadParams):
        _code(GF2, [[1, 0], [0, 1]])
    degenerate = mw.LinearCode(mw.Mat(GF2, [[1, 0], [0, 1]]), allow_degenerate=True)
    assert degenerate.k == degenerate.n == 2
    flagged = _code(GF2, [[1, 0, 0], [0, 1, 0]])
    assert flagged.has_zero_column
    assert not _code(GF2, [[1, 0, 1], [0, 1, 1]]).has_zero_column


def test_dual_code_examples():
    c = _code(GF2, [[1, 0, 1], [0, 1, 1]])
    assert mw.dual_code(c).gen.rows == ((1, 1, 1),)

    c2 = _code(GF3, [[1, 0, 0, 0], [0, 1, 0, 0]])
    assert mw.dual_code(c2).gen.rows == ((0, 0, 1, 0), (0, 0, 0, 1))

    c3 = _code(GF2, [[1, 0, 1, 1], [0, 1, 1, 1]])
    assert mw.dual_code(c3).gen.rows == ((1, 1, 1, 0), (1, 1, 0, 1))


def test_dual_of_dual_spans_same_space():
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randint(3, 7)
        k = rng.randint(1, n - 1)
        rows = [[rng.randrange(2) for _ in range(n)] for _ in range(k)]
        m = mw.Mat(GF2, rows)
        if algebra.rank(m) != k:
            continue
        c = mw.LinearCode(m)
        dd = mw.dual_code(mw.dual_code(c))
        assert algebra.rref(dd.gen)[0] == algebra.rref(c.gen)[0]


def test_ghw_wei_small_code():
    c = _code(GF2, [[1, 0, 1], [0, 1, 1]])
    assert mw.ghw_wei(c, 1) == 2
    assert mw.ghw_wei(c, 2) == 3
    with pytest.raises(ROutOfRange):
        mw.ghw_wei(c, 3)


def test_ghw_wei_dual_hamming():
    h3 = mw.dual_hamming_code(3)
    assert mw.ghw_wei_sequence(h3) == (4, 6, 7)


def test_ghw_via_matroid_examples():
    # MDS [5,2] over GF(5): Vandermonde rows -> d_r = n - k + r
    vang = mw.Mat(mw.make_field(5), [[1, 1, 1, 1, 1], [1, 2, 3, 4, 0]])
    mds = mw.LinearCode(vang)
    assert [mw.ghw_via_matroid(mds, r) for r in (1, 2)] == [4, 5]

    ci = mw.complete_intersection_code(GF2, [1, 2, 3])
    assert [mw.ghw_via_matroid(ci, r) for r in (1, 2, 3)] == [2, 5, 9]

    ao = mw.all_ones_code(GF2, 3, 3)
    assert [mw.ghw_via_matroid(ao, r) for r in (1, 2, 3)] == [2, 3, 6]


def test_min_distance_examples():
    assert mw.min_distance(_code(GF2, [[1, 0, 1], [0, 1, 1]])) == 2
    vang = mw.Mat(mw.make_field(5), [[1, 1, 1, 1, 1], [1, 2, 3, 4, 0]])
    assert mw.min_distance(mw.LinearCode(vang)) == 4
    assert mw.min_distance(_code(GF2, [[1, 0]])) == 1


def test_min_distance_equals_first_weight():
    for c in [
        _code(GF2, [[1, 0, 1], [0, 1, 1]]),
        mw.dual_hamming_code(3),
        mw.all_ones_code(GF2, 2, 2),
        mw.reed_muller_code(GF3, 1),
    ]:
        assert mw.min_distance(c) == mw.ghw_wei(c, 1)


def _random_full_rank_code(rng, q):
    field = mw.make_field(q)
    while True:
        n = rng.randint(4, 10)
        k = rng.randint(2, n - 1)
        rows = [[rng.randrange(q) for _ in range(n)] for _ in range(k)]
        m = mw.Mat(field, rows)
        if algebra.rank(m) == k:
            return mw.LinearCode(m)


def test_wei_duality_on_random_codes():
    # {d_r(C)} = {1..n} minus {n+1-d_s(C dual)} as sets, for 50 random codes
    rng = random.Random(2024)
    for i in range(50):
        c = _random_full_rank_code(rng, 2 if i % 2 == 0 else 3)
        dual = mw.dual_code(c)
        ds = set(mw.ghw_wei_sequence(c))
        excluded = {c.n + 1 - d for d in mw.ghw_wei_sequence(dual)}
        assert ds == set(range(1, c.n + 1)) - excluded


def test_monotone_and_singleton_bounds():
    rng = random.Random(99)
    for _ in range(20):
        c = _random_full_rank_code(rng, 2)
        seq = mw.ghw_wei_sequence(c)
        assert all(a < b for a, b in zip(seq, seq[1:]))
        assert all(d <= c.n - c.k + r for r, d in enumerate(seq, start=1))


def test_wei_equals_matroid_route_on_corpus():
    cases = [
        _code(GF2, [[1, 0, 1], [0, 1, 1]]),
        mw.dual_hamming_code(2),
        mw.dual_hamming_code(3),
        mw.all_ones_code(GF2, 3, 2),
        mw.all_ones_code(GF3, 3, 3),
        mw.complete_intersection_code(GF3, [1, 2]),
        mw.reed_muller_code(GF2, 2),
        _code(GF2, [[1, 0, 0], [0, 1, 0]]),  # zero column
    ]
    for c in cases:
        assert mw.ghw_wei_sequence(c) == tuple(
            mw.ghw_via_matroid(c, r) for r in range(1, c.k + 1)
        )


def test_truncated_matroid_minimum_distance_claim():
    # min circuit size of dual(truncate(M(C), r)) = d_{r+1}(C)
    for c in [
        mw.dual_hamming_code(3),
        mw.all_ones_code(GF2, 3, 3),
        mw.reed_muller_code(GF2, 2),
    ]:
        m = c.matroid()
        seq = mw.ghw_wei_sequence(c)
        for r in range(1, c.k):
            truncated_dual = m.truncate(r).dual()
            assert truncated_dual.min_circuit_size() == seq[r]


def test_parity_matrix_cached_and_orthogonal():
    c = mw.dual_hamming_code(3)
    h = c.parity
    assert h.nrows == c.n - c.k
    f = c.field
    for grow in c.gen.rows:
        for hrow in h.rows:
            acc = 0
            for x, y in zip(grow, hrow):
                acc = f.add(acc, f.mul(x, y))
            assert acc == 0


def test_codeword_weight_helper():
    assert codes.weight((0, 1, 2, 0, 1)) == 3
    assert codes.weight(()) == 0
