"""Shared fixtures: a corpus of small matroids covering every backend."""

from __future__ import annotations

import pytest

import matroid_weights as mw

GF2 = mw.make_field(2)
GF3 = mw.make_field(3)


def _linear_loop_matroid():
    # column 3 is zero, so element 3 is a loop
    return mw.from_matrix(mw.Mat(GF2, [[1, 0, 0], [0, 1, 0]]))


def _coloop_paving_matroid():
    # rank 2, circuits {2,3},{2,4},{3,4}; element 1 is a coloop
    return mw.from_bases(4, [(1, 2), (1, 3), (1, 4)])


def build_corpus() -> dict[str, mw.Matroid]:
    fano = mw.steiner_matroid(mw.fano_steiner())
    ci123 = mw.complete_intersection_code(GF2, [1, 2, 3])
    ao33 = mw.all_ones_code(GF2, 3, 3)
    ao32 = mw.all_ones_code(GF2, 3, 2)
    h3 = mw.dual_hamming_code(3)
    rm23 = mw.reed_muller_code(GF2, 3)
    return {
        "u13": mw.uniform(1, 3),
        "u24": mw.uniform(2, 4),
        "u35": mw.uniform(3, 5),
        "u36": mw.uniform(3, 6),
        "u47": mw.uniform(4, 7),
        "vamos": mw.vamos(),
        "fano": fano,
        "fano_dual": fano.dual(),
        "ci123": ci123.matroid(),
        "ci123_dual": ci123.matroid().dual(),
        "ao33_dual": ao33.matroid().dual(),
        "ao32_dual": ao32.matroid().dual(),
        "h3": h3.matroid(),
        "h3_dual": h3.matroid().dual(),
        "rm23_dual": rm23.matroid().dual(),
        "coloop_paving": _coloop_paving_matroid(),
        "linear_loop": _linear_loop_matroid(),
    }


CORPUS = build_corpus()

# matroids small enough for the brute-force oracles
SMALL = {name: m for name, m in CORPUS.items() if m.n <= 8}


def corpus_params(names=None):
    items = CORPUS if names is None else {k: CORPUS[k] for k in names}
    return pytest.mark.parametrize(
        "m", list(items.values()), ids=list(items.keys())
    )


def small_params():
    return pytest.mark.parametrize(
        "m", list(SMALL.values()), ids=list(SMALL.keys())
    )


@pytest.fixture
def corpus() -> dict[str, mw.Matroid]:
    return CORPUS
