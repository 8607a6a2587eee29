"""Weight sequences, subadditivity classification, paving profiles."""

import pytest

import matroid_weights as mw
from matroid_weights.errors import NotStrictlyIncreasing, RankHypothesisViolated, RankOutOfRange

from conftest import CORPUS, corpus_params


def test_ghw_examples():
    assert mw.ghw(mw.vamos()).values == (4, 6, 7, 8)
    assert mw.ghw(mw.uniform(3, 5)).values == (4, 5)
    assert mw.ghw(CORPUS["fano"].dual()).values == (4, 6, 7)


def test_ghw_rejects_free_matroid():
    with pytest.raises(RankOutOfRange):
        mw.ghw(mw.uniform(3, 3))


def test_ghw_sequence_validation():
    with pytest.raises(NotStrictlyIncreasing):
        mw.GhwSequence((3, 3, 4))
    with pytest.raises(NotStrictlyIncreasing):
        mw.GhwSequence(())
    with pytest.raises(NotStrictlyIncreasing):
        mw.GhwSequence((0, 1))
    with pytest.raises(ValueError):
        mw.GhwSequence((4, 6), rank=2)  # d_1 = 4 > rank + 1


def test_classify_examples():
    assert mw.classify((4, 6, 7, 8)).is_extended_subadditive  # Vamos
    rep = mw.classify((2, 3, 5))
    assert rep.is_subadditive and not rep.is_extended_subadditive
    rep = mw.classify((2, 3, 6))
    assert not rep.is_subadditive
    assert {"kind": "subadditive", "index": 3, "i": 1, "j": 2} in rep.witnesses


def test_classify_conventions_and_terms():
    rep = mw.classify((2, 5, 9))
    assert rep.subadditive_term[0] and rep.strictly_subadditive_term[0]
    assert rep.strictly_subadditive_term == (True, False, False)
    assert rep.subadditive_term == (True, False, False)

    rep = mw.classify((4, 6, 7, 8))
    assert rep.strictly_subadditive_term == (True, True, True, True)

    # a singleton sequence is trivially extended subadditive
    rep = mw.classify((3,))
    assert rep.is_subadditive and rep.is_extended_subadditive


def test_classify_extended_witnesses():
    rep = mw.classify((2, 3, 5))
    kinds = {w["kind"] for w in rep.witnesses}
    assert kinds == {"extended"}
    assert all(w["r"] < w["t"] for w in rep.witnesses)


def test_classify_rejects_bad_sequences():
    with pytest.raises(NotStrictlyIncreasing):
        mw.classify((3, 3))


def test_extended_implies_subadditive_everywhere():
    seqs = [
        (4, 6, 7, 8), (2, 3, 5), (2, 3, 6), (2, 5, 9), (3, 4), (1, 2, 3),
        (9, 12, 13), (2, 4, 5, 8), (5, 9, 12, 14),
    ]
    for s in seqs:
        rep = mw.classify(s)
        if rep.is_extended_subadditive:
            assert rep.is_subadditive


def test_paving_profile_examples():
    fano = CORPUS["fano"]
    prof = mw.paving_profile(fano)
    assert prof.is_sparse_paving and prof.is_matroid_design

    prof = mw.paving_profile(mw.uniform(3, 6))
    assert prof == mw.weights.PavingProfile(True, True, True, True)

    prof = mw.paving_profile(mw.vamos())
    assert prof.is_sparse_paving and not prof.is_matroid_design

    with pytest.raises(RankHypothesisViolated):
        mw.paving_profile(mw.uniform(1, 4))


@corpus_params()
def test_last_weight_counts_coloops(m):
    if m.corank < 1:
        pytest.skip("free matroid")
    seq = mw.ghw(m)
    assert seq.values[-1] == m.n - len(m.coloops())


@corpus_params()
def test_weight_ratchet(m):
    # once d_r = rank + r, every later weight keeps the offset
    if m.corank < 1:
        pytest.skip("free matroid")
    seq = mw.ghw(m).values
    k = m.full_rank
    hit = None
    for r, d in enumerate(seq, start=1):
        if hit is None and d == k + r:
            hit = r
        if hit is not None and r >= hit:
            assert d == k + r


@corpus_params()
def test_paving_sequences_are_subadditive(m):
    k = m.full_rank
    if not 2 <= k <= m.n - 1 or not m.is_paving():
        pytest.skip("not a paving matroid of rank >= 2")
    assert mw.classify(mw.ghw(m)).is_subadditive


@corpus_params()
def test_sparse_paving_sequences_are_extended(m):
    k = m.full_rank
    if not 2 <= k <= m.n - 2 or not m.is_sparse_paving():
        pytest.skip("not sparse paving")
    assert mw.classify(mw.ghw(m)).is_extended_subadditive


def test_paving_with_dual_loop_weights():
    m = CORPUS["coloop_paving"]
    assert m.is_paving()
    assert len(m.dual().loops()) == 1
    k = m.full_rank
    seq = mw.ghw(m).values
    assert seq == tuple(k + i - 1 for i in range(1, m.corank + 1))
    assert mw.classify(seq).is_extended_subadditive


@corpus_params()
def test_dual_paving_with_large_d1_is_extended(m):
    # dual paving and d_1 >= (k + 2) / 2 forces the extended property
    k = m.full_rank
    crk = m.corank
    if crk < 2 or k < 2:
        pytest.skip("weights too short")
    dual_paving = m.ghw_value(2) == k + 2
    seq = mw.ghw(m)
    if dual_paving and 2 * seq.values[0] >= k + 2:
        assert mw.classify(seq).is_extended_subadditive


def test_sequence_indexing():
    seq = mw.ghw(mw.vamos())
    assert seq[1] == 4 and seq[4] == 8
    with pytest.raises(RankOutOfRange):
        seq[5]
    assert len(seq) == 4
