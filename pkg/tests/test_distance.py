import numpy as np
import pytest
from conftest import all_codewords
from hypothesis import given, settings
from hypothesis import strategies as st

from toric_bch.cyclic import LinearCode, bch_build, dual
from toric_bch.delpezzo_codes import build_family
from toric_bch.distance import min_distance_exhaustive, weight_distribution, weight_distribution_naive
from toric_bch.finite_field import field_of_order


def test_repetition_code():
    rep = bch_build(2, 7, 7, 1)
    assert rep.k == 1
    r = min_distance_exhaustive(rep)
    assert r.d == 7 and r.exact
    assert r.witness == (1,) * 7


def test_single_row_code_over_gf5():
    F = field_of_order(5)
    code = LinearCode.from_rows(F, 6, [[1, 2, 0, 3, 0, 4]])
    assert min_distance_exhaustive(code).d == 4


def test_c3_q3_distance():
    r = min_distance_exhaustive(build_family("C3", 3))
    assert (r.d, r.exact) == (7, True)


def test_c4_q7_distance():
    assert min_distance_exhaustive(build_family("C4", 7)).d == 38


def test_weight_distribution_c3_q3():
    code = build_family("C3", 3)
    wd = weight_distribution(code)
    assert sum(wd.values()) == 81 and wd[0] == 1
    assert min(w for w in wd if w) == 7
    assert wd == weight_distribution_naive(code)


@pytest.mark.parametrize("family, q", [("C3", 4), ("C4", 3), ("C8", 3), ("C4", 4), ("C4", 5)])
def test_weight_distribution_matches_naive(family, q):
    code = build_family(family, q)
    assert weight_distribution(code) == weight_distribution_naive(code)


@pytest.mark.parametrize("family, q", [("C3", 5), ("C4", 5), ("C8", 4), ("C3", 7)])
def test_weight_distribution_matches_enumeration(family, q):
    code = build_family(family, q)
    words = all_codewords(code)
    w = np.count_nonzero(words, axis=1)
    expected = {int(a): int(b) for a, b in zip(*np.unique(w, return_counts=True))}
    assert weight_distribution(code) == expected


@pytest.mark.parametrize("family, q", [("C3", 4), ("C4", 5), ("C8", 5), ("C6", 5)])
def test_chunk_invariance(family, q):
    code = build_family(family, q)
    one = min_distance_exhaustive(code, chunks=1, workers=1)
    many = min_distance_exhaustive(code, chunks=8, workers=4)
    assert one == many
    if q ** code.k <= 10**6:
        assert weight_distribution(code, chunks=1, workers=1) == weight_distribution(code, chunks=8, workers=4)


@pytest.mark.parametrize("family, q", [("C3", 3), ("C4", 4), ("C8", 4), ("C3", 5)])
def test_double_dual_distance(family, q):
    code = build_family(family, q)
    assert min_distance_exhaustive(dual(dual(code))).d == min_distance_exhaustive(code).d


def test_budget_exceeded_is_inexact():
    code = build_family("C8", 4)
    r = min_distance_exhaustive(code, budget=1000)
    assert not r.exact
    # the low table is always scored in full; the high part is cut off
    assert r.evaluated < 4**code.k - 1
    assert r.d >= min_distance_exhaustive(code).d


def test_zero_code():
    zero = LinearCode.from_rows(field_of_order(3), 5, [])
    assert weight_distribution(zero) == {0: 1}


def test_limit_enforced():
    with pytest.raises(ValueError):
        weight_distribution(build_family("C9", 5), limit=1000)


@st.composite
def small_codes(draw):
    q = draw(st.sampled_from([2, 3, 4, 5]))
    n = draw(st.integers(2, 9))
    k = draw(st.integers(1, min(n, 4)))
    rows = draw(st.lists(st.lists(st.integers(0, q - 1), min_size=n, max_size=n), min_size=k, max_size=k))
    return LinearCode.from_rows(field_of_order(q), n, rows)


@settings(max_examples=80, deadline=None)
@given(small_codes())
def test_distance_properties(code):
    wd = weight_distribution(code)
    assert wd == weight_distribution_naive(code)
    assert sum(wd.values()) == code.q ** code.k
    if code.k == 0:
        return
    r = min_distance_exhaustive(code)
    assert r.d == min(w for w in wd if w)
    assert sum(1 for a in r.witness if a) == r.d
    assert code.contains(r.witness)
    assert r == min_distance_exhaustive(code, chunks=5, workers=2)
