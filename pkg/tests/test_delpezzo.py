import pytest

from toric_bch import delpezzo_codes as dp
from toric_bch.cyclic import designed_params
from toric_bch.delpezzo_codes import (
    InadmissibleError,
    admissible_pairs,
    build_family,
    build_report,
    d_minus_dstar,
    delta_formula,
    designed_param_ties,
    distance_lower_bound,
    expected_params,
    extension_degree,
    griesmer_defect,
    is_admissible,
    reference_row,
    torus_order,
    verify_bch_identity,
)

PAIRS = admissible_pairs(9)


def test_admissible_pairs():
    assert ("C3", 3) in PAIRS and ("C6", 5) in PAIRS
    assert ("C6", 4) not in PAIRS and ("C9", 4) not in PAIRS
    assert all(q != 6 for _, q in PAIRS)
    assert len(PAIRS) == 6 + 6 + 4 + 6 + 4


def test_unknown_family_and_q():
    with pytest.raises(ValueError):
        build_family("C7", 3)
    with pytest.raises(ValueError):
        is_admissible("C3", 6)


def test_inadmissible_and_force():
    with pytest.raises(InadmissibleError):
        build_family("C6", 3)
    code = build_family("C6", 3, force=True)
    assert code.n == 7
    report = build_report("C6", 3, force=True)
    assert report.verified is False and report.bch_identity is False
    assert "error" in verify_bch_identity("C6", 3, force=True)[1]


@pytest.mark.parametrize("family, q, n", [("C3", 3, 13), ("C4", 3, 10), ("C6", 5, 21), ("C8", 3, 10), ("C9", 5, 31)])
def test_torus_orders(family, q, n):
    assert torus_order(family, q) == n
    assert build_family(family, q).n == n


@pytest.mark.parametrize("family, q", PAIRS)
def test_family_parameters(family, q):
    code = build_family(family, q)
    assert code.k == dp.EXPECTED_K[family]
    assert extension_degree(family, q) == dp.EXPECTED_E[family]
    ok, diag = verify_bch_identity(family, q)
    assert ok, diag
    p = designed_params(code)
    assert (p.d_star, p.b) == expected_params(family, q)
    assert designed_param_ties(family, q)[0] == expected_params(family, q)


def test_c3_q3_identity_example():
    assert verify_bch_identity("C3", 3) == (True, {"family": "C3", "q": 3, "n": 13, "d_star": 6, "b": 4})
    assert verify_bch_identity("C8", 3)[0]


def test_griesmer_defect():
    assert griesmer_defect(13, 4, 7, 3) == 1
    assert griesmer_defect(7, 3, 4, 2) == 0  # simplex dual, Griesmer-optimal
    assert griesmer_defect(21, 4, 12, 4) == 4


def test_closed_forms_q5():
    assert distance_lower_bound("C3", 5) == 22
    assert distance_lower_bound("C4", 5) == 16
    assert distance_lower_bound("C6", 5) == 11
    assert d_minus_dstar("C6", 5) == 0
    assert d_minus_dstar("C9", 5) == 2
    assert delta_formula("C8", 5) == ("=", 2)
    assert delta_formula("C9", 7) == ("=", 9)


def test_reference_rows():
    assert reference_row("C3", 3) == (13, 4, 7, 7)
    assert reference_row("C4", 7) == (50, 5, 38, 38)
    assert reference_row("C6", 5) is None
    assert reference_row("C3", 6) is None
    tables = dp.reference_tables()
    assert set(tables) == {"table2", "table3", "table4", "table5", "table6"}
    assert len(tables["table5"]) == len(tables["table6"]) == 6


def test_report_c3_q3():
    r = build_report("C3", 3)
    d = r.to_dict()
    assert list(d) == list(dp.REPORT_FIELDS)
    assert (r.n, r.k, r.d_star, r.b, r.d_lower, r.d_exact, r.delta) == (13, 4, 6, 4, 7, 7, 1)
    assert r.lcd is False and r.bch_identity and r.conjecture_consistent
    assert r.delta_formula == "<=1"


def test_report_without_distance():
    r = build_report("C9", 8)
    assert r.d_exact is None and r.delta is None
    r = build_report("C4", 5, mindist=False)
    assert r.d_exact is None and r.conjecture_consistent is None
    assert r.lcd is True


def test_report_budget_exceeded_leaves_distance_empty():
    r = build_report("C4", 9, budget=100)
    assert r.d_exact is None and r.delta is None
