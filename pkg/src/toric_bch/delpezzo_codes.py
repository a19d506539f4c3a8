"""The five non-split toric codes C3, C4, C6, C8, C9 and their reported parameters.

Each code is the cyclic code of length ``n`` (the number of rational points of
the relevant non-split torus) whose parity-check polynomial is ``x - 1`` times
the minimal polynomials of ``alpha``, ``alpha^(q+1)``, ``alpha^(q+2)`` as listed
per family.  The module evaluates the closed-form columns (designed distance,
distance bounds, Griesmer defect) and cross-checks them against the codes.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .cyclic import (
    CyclicCode,
    bch_build,
    designed_params,
    from_parity_check,
    is_lcd,
    maximal_runs,
    minimal_polynomial_of_power,
)
from .distance import DEFAULT_BUDGET, min_distance_exhaustive
from .elliptic import nq1
from .finite_field import field_of_order, multiplicative_order, prime_power
from .polynomial import Polynomial

FAMILIES = ("C3", "C4", "C6", "C8", "C9")
MIN_Q = {"C3": 3, "C4": 3, "C6": 5, "C8": 3, "C9": 5}
EXPECTED_K = {"C3": 4, "C4": 5, "C6": 7, "C8": 9, "C9": 10}
EXPECTED_E = {"C3": 3, "C4": 4, "C6": 6, "C8": 4, "C9": 3}
LCD = {"C3": False, "C4": True, "C6": True, "C8": True, "C9": False}
SMALL_Q = (2, 3, 4, 5, 7, 8, 9)


class InadmissibleError(ValueError):
    pass


def _check_family(family: str) -> None:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


def is_admissible(family: str, q: int) -> bool:
    _check_family(family)
    prime_power(q)
    return q >= MIN_Q[family]


def admissible_pairs(max_q: int = 9) -> list[tuple[str, int]]:
    out = []
    for family in FAMILIES:
        for q in range(2, max_q + 1):
            try:
                if is_admissible(family, q):
                    out.append((family, q))
            except ValueError:
                pass
    return out


def torus_order(family: str, q: int) -> int:
    _check_family(family)
    if family in ("C3", "C9"):
        return (q**3 - 1) // (q - 1)
    if family in ("C4", "C8"):
        return q * q + 1
    return q * q - q + 1


def parity_check_exponents(family: str, q: int) -> tuple[int, ...]:
    """Exponents i whose minimal polynomials m_{alpha^i} multiply to h(x)."""
    _check_family(family)
    return {
        "C3": (0, 1),
        "C4": (0, 1),
        "C6": (0, 1),
        "C8": (0, 1, q + 1),
        "C9": (0, 1, q + 1, q + 2),
    }[family]


def build_family(family: str, q: int, force: bool = False) -> CyclicCode:
    """The cyclic code of ``family`` over GF(q)."""
    if not is_admissible(family, q) and not force:
        raise InadmissibleError(
            f"{family} requires q >= {MIN_Q[family]} (got q = {q}); pass force=True to build anyway"
        )
    n = torus_order(family, q)
    h = Polynomial.one(field_of_order(q))
    for i in parity_check_exponents(family, q):
        h = h * minimal_polynomial_of_power(q, n, i)
    return from_parity_check(q, n, h)


def expected_params(family: str, q: int) -> tuple[int, int]:
    """Closed-form (designed distance, start exponent)."""
    _check_family(family)
    return {
        "C3": (q * q - q, q + 1),
        "C4": (q * q - 2 * q + 1, q + 1),
        "C6": (q * q - 3 * q + 1, q + 1),
        "C8": (q * q - 2 * q - 1, q + 2),
        "C9": (q * q - 2 * q - 2, q + 3),
    }[family]


def extension_degree(family: str, q: int) -> int:
    return multiplicative_order(q, torus_order(family, q))


def verify_bch_identity(family: str, q: int, force: bool = False) -> tuple[bool, dict]:
    """Compare the family's generator with BCH_q(n, d*, b) for the closed-form (d*, b)."""
    code = build_family(family, q, force=force)
    d_star, b = expected_params(family, q)
    diag = {"family": family, "q": q, "n": code.n, "d_star": d_star, "b": b}
    try:
        bch = bch_build(q, code.n, d_star, b)
    except ValueError as exc:  # forced builds can give d* < 2
        diag["error"] = str(exc)
        return False, diag
    ok = code.g == bch.g
    if not ok:
        diag["family_zero_set"] = sorted(code.zero_set)
        diag["bch_zero_set"] = sorted(bch.zero_set)
    return ok, diag


def distance_lower_bound(family: str, q: int) -> int:
    """Distance bound from the point counts (exact for C6, C8, C9)."""
    n = torus_order(family, q)
    N = nq1(q)
    return {
        "C3": n - 3 * (N // 3),
        "C4": n - 2 * (N // 2),
        "C6": n - N,
        "C8": n - 2 * (q + 1),
        "C9": n - (3 * q + 1),
    }[family]


def distance_is_exact_claim(family: str) -> bool:
    return family in ("C6", "C8", "C9")


def d_minus_dstar(family: str, q: int) -> int:
    """The listed value of d - d* (a lower bound for C3, C4)."""
    N = nq1(q)
    return {
        "C3": 2 * q + 1 - 3 * (N // 3),
        "C4": 2 * q - 2 * (N // 2),
        "C6": 2 * q - N,
        "C8": 0,
        "C9": 2,
    }[family]


def griesmer_defect(n: int, k: int, d: int, q: int) -> int:
    """n minus the Griesmer sum of ceil(d / q^i), i < k."""
    return n - sum(-(-d // q**i) for i in range(k))


def delta_formula(family: str, q: int) -> tuple[str, int]:
    """Listed Griesmer defect as (relation, value); relation is '<=' or '='."""
    N = nq1(q)
    return {
        "C3": ("<=", 3 * (N // 3) - q - 2),
        "C4": ("<=", 2 * (N // 2) - q - 2),
        "C6": ("=", N - q - 3),
        "C8": ("=", q - 3),
        "C9": ("=", 2 * q - 5),
    }[family]


def needs_slow(family: str, q: int) -> bool:
    """C8 and C9 at q in {8, 9} are only enumerated on request."""
    return family in ("C8", "C9") and q >= 8


# --- reference data ----------------------------------------------------------

TABLE2 = {
    2: {"N": 5, "curve": "y^2+y=x^3+x", "j": "0", "supersingular": True},
    3: {"N": 7, "curve": "y^2=x^3+2x+1", "j": "0", "supersingular": True},
    4: {"N": 9, "curve": "y^2+y=x^3", "j": "0", "supersingular": True},
    5: {"N": 10, "curve": "y^2=x^3+3x", "j": "1728", "supersingular": False},
    7: {"N": 13, "curve": "y^2=x^3+3", "j": "0", "supersingular": False},
    8: {"N": 14, "curve": "y^2+xy+y=x^3+1", "j": "1", "supersingular": False},
    9: {"N": 16, "curve": "y^2=x^3+x", "j": "0", "supersingular": True},
}

TABLE3 = {
    "C3": {"n": "q^2+q+1", "k": 4, "d": ">= n-3*floor(N/3)", "restriction": "q >= 3", "delta": "<= 3*floor(N/3)-q-2"},
    "C4": {"n": "q^2+1", "k": 5, "d": ">= n-2*floor(N/2)", "restriction": "q >= 3", "delta": "<= 2*floor(N/2)-q-2"},
    "C6": {"n": "q^2-q+1", "k": 7, "d": "n-N", "restriction": "q >= 5", "delta": "N-q-3"},
    "C8": {"n": "q^2+1", "k": 9, "d": "n-2(q+1)", "restriction": "q >= 3", "delta": "q-3"},
    "C9": {"n": "q^2+q+1", "k": 10, "d": "n-(3q+1)", "restriction": "q >= 5", "delta": "2q-5"},
}

TABLE4 = {
    "C3": {"h": "(x-1)*m_a", "d_star": "q^2-q", "b": "q+1", "d-d*": ">= 2q+1-3*floor(N/3)", "lcd": False},
    "C4": {"h": "(x-1)*m_a", "d_star": "q^2-2q+1", "b": "q+1", "d-d*": ">= 2q-2*floor(N/2)", "lcd": True},
    "C6": {"h": "(x-1)*m_a", "d_star": "q^2-3q+1", "b": "q+1", "d-d*": "2q-N", "lcd": True},
    "C8": {"h": "(x-1)*m_a*m_a^(q+1)", "d_star": "q^2-2q-1", "b": "q+2", "d-d*": "0", "lcd": True},
    "C9": {"h": "(x-1)*m_a*m_a^(q+1)*m_a^(q+2)", "d_star": "q^2-2q-2", "b": "q+3", "d-d*": "2", "lcd": False},
}

# (n, k, d, LB(d)) per q
TABLE5 = {3: (13, 4, 7, 7), 4: (21, 4, 12, 14), 5: (31, 4, 22, 23), 7: (57, 4, 45, 47), 8: (73, 4, 61, 62), 9: (91, 4, 76, 79)}
TABLE6 = {3: (10, 5, 4, 5), 4: (17, 5, 9, 10), 5: (26, 5, 16, 17), 7: (50, 5, 38, 38), 8: (65, 5, 51, 52), 9: (82, 5, 66, 67)}


def reference_tables() -> dict:
    """Expected values of the optimal-curve, parameter, parity-check and small-q tables."""
    return {
        "table2": TABLE2,
        "table3": TABLE3,
        "table4": TABLE4,
        "table5": TABLE5,
        "table6": TABLE6,
    }


def reference_row(family: str, q: int) -> tuple[int, int, int, int] | None:
    """(n, k, d, LB) from the small-q tables for C3/C4, else None."""
    table = {"C3": TABLE5, "C4": TABLE6}.get(family)
    return table.get(q) if table else None


# --- reports -----------------------------------------------------------------

REPORT_FIELDS = (
    "family",
    "q",
    "n",
    "k",
    "d_star",
    "b",
    "d_lower",
    "d_exact",
    "delta",
    "lcd",
    "bch_identity",
    "conjecture_consistent",
    "d_minus_dstar_bound",
    "delta_formula",
    "verified",
)


@dataclass(frozen=True)
class CodeReport:
    family: str
    q: int
    n: int
    k: int
    d_star: int
    b: int
    d_lower: int
    d_exact: int | None
    delta: int | None
    lcd: bool
    bch_identity: bool
    conjecture_consistent: bool | None
    d_minus_dstar_bound: int
    delta_formula: str
    verified: bool

    def to_dict(self) -> dict:
        d = asdict(self)
        return {k: d[k] for k in REPORT_FIELDS}


def build_report(
    family: str,
    q: int,
    *,
    mindist: bool = True,
    slow: bool = False,
    force: bool = False,
    budget: int = DEFAULT_BUDGET,
    workers: int | None = None,
) -> CodeReport:
    """Evaluate every column for ``(family, q)``.

    The exhaustive distance is skipped (``d_exact = None``) when ``mindist`` is
    off, or for the gated C8/C9 cases at q >= 8 unless ``slow`` is set.
    """
    verified = is_admissible(family, q)
    code = build_family(family, q, force=force)
    params = designed_params(code)
    bch_ok, _ = verify_bch_identity(family, q, force=force)
    d_exact = None
    if mindist and (slow or not needs_slow(family, q)):
        res = min_distance_exhaustive(code, budget=budget, workers=workers)
        if res.exact:
            d_exact = res.d
    d_lower = distance_lower_bound(family, q)
    delta = griesmer_defect(code.n, code.k, d_exact, q) if d_exact is not None else None
    conj = None
    if family in ("C3", "C4") and d_exact is not None:
        conj = d_exact == d_lower
    rel, val = delta_formula(family, q)
    return CodeReport(
        family=family,
        q=q,
        n=code.n,
        k=code.k,
        d_star=params.d_star,
        b=params.b,
        d_lower=d_lower,
        d_exact=d_exact,
        delta=delta,
        lcd=is_lcd(code),
        bch_identity=bch_ok,
        conjecture_consistent=conj,
        d_minus_dstar_bound=d_minus_dstar(family, q),
        delta_formula=f"{rel}{val}" if rel == "<=" else str(val),
        verified=verified,
    )


def designed_param_ties(family: str, q: int) -> list[tuple[int, int]]:
    """All maximal zero runs of the longest length, as (d*, b) pairs."""
    return [(r.d_star, r.b) for r in maximal_runs(build_family(family, q))]
