import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toric_bch.cyclic import minimal_polynomial_of_power
from toric_bch.finite_field import field_of_order, make_field
from toric_bch.polynomial import (
    Polynomial,
    cyclotomic_coset,
    cyclotomic_cosets,
    gcd,
    lcm,
    minimal_polynomial,
    poly_divmod,
    product,
    reciprocal,
)

GF2, GF3 = make_field(2), make_field(3)


def P(F, *coeffs):
    return Polynomial(F, coeffs)


def test_canonical_form():
    assert P(GF3, 1, 2, 0, 0).coeffs == (1, 2)
    assert P(GF3, 0, 0).coeffs == ()
    assert P(GF3).degree == -1


def test_divmod_examples():
    f = P(GF3, 2, 0, 1, 1)
    assert poly_divmod(f, Polynomial.one(GF3)) == (f, Polynomial.zero(GF3))
    assert poly_divmod(P(GF3, 1, 0, 1), P(GF3, 1, 1)) == (P(GF3, 2, 1), P(GF3, 2))
    assert poly_divmod(P(GF2, 1, 0, 0, 1), P(GF2, 1, 1)) == (P(GF2, 1, 1, 1), Polynomial.zero(GF2))
    with pytest.raises(ZeroDivisionError):
        poly_divmod(f, Polynomial.zero(GF3))


def test_gcd_examples():
    f = P(GF3, 1, 2, 2)
    assert gcd(f, Polynomial.zero(GF3)) == f.monic()
    assert gcd(f, f) == f.monic()
    assert gcd(P(GF2, 1, 0, 0, 1), P(GF2, 1, 0, 1)) == P(GF2, 1, 1)
    with pytest.raises(ValueError):
        gcd(Polynomial.zero(GF3), Polynomial.zero(GF3))


def test_lcm_is_monic_and_divisible():
    f, g = P(GF3, 1, 1), P(GF3, 2, 0, 2)
    m = lcm(f, g)
    assert m.lead() == 1
    assert (m % f).is_zero() and (m % g).is_zero()


def test_reciprocal_examples():
    assert reciprocal(P(GF3, 1, 0, 1)) == P(GF3, 1, 0, 1)
    assert reciprocal(P(GF3, 2, 1)) == P(GF3, 1, 2)
    f = P(GF3, 2, 1, 0, 1)
    assert reciprocal(reciprocal(f)) == f
    with pytest.raises(ValueError):
        reciprocal(P(GF3, 0, 1))
    with pytest.raises(ValueError):
        reciprocal(Polynomial.zero(GF3))


def test_cyclotomic_coset_examples():
    assert cyclotomic_coset(0, 13, 3) == {0}
    assert cyclotomic_coset(1, 13, 3) == {1, 3, 9}
    assert cyclotomic_coset(5, 10, 3) == {5}
    with pytest.raises(ValueError):
        cyclotomic_coset(1, 9, 3)


def test_minimal_polynomial_trivial():
    F = make_field(3, 3)
    assert minimal_polynomial(F.element(0), 3) == P(GF3, 0, 1)
    assert minimal_polynomial(F.element(1), 3) == P(GF3, 2, 1)


def test_minimal_polynomial_order_13():
    F = make_field(3, 3)
    beta = F.element(F.root_of_unity(13))
    m = minimal_polynomial(beta, 3)
    assert m.degree == 3 and m.lead() == 1
    assert m(beta.enc, F) == 0


def test_minimal_polynomial_of_minus_one():
    F = make_field(3, 4)
    alpha = F.element(F.root_of_unity(10))
    assert minimal_polynomial(alpha**5, 3) == P(GF3, 1, 1)


def test_minimal_polynomial_rejects_non_subfield():
    F = make_field(2, 3)
    with pytest.raises(ValueError):
        minimal_polynomial(F.element(F.gamma), 4)


LENGTHS = [(13, 3), (10, 3), (15, 2), (21, 4), (26, 5), (31, 5), (17, 4), (8, 3), (24, 5), (57, 7), (20, 9), (65, 8)]


@pytest.mark.parametrize("n, q", LENGTHS)
def test_cosets_factor_x_n_minus_1(n, q):
    F = field_of_order(q)
    factors = [minimal_polynomial_of_power(q, n, min(c)) for c in cyclotomic_cosets(n, q)]
    assert product(factors, F) == Polynomial.x_n_minus_1(F, n)


@pytest.mark.parametrize("n, q", LENGTHS)
def test_minimal_polynomial_degree_is_coset_size(n, q):
    for i in range(n):
        assert minimal_polynomial_of_power(q, n, i).degree == len(cyclotomic_coset(i, n, q))


def _is_irreducible(f: Polynomial) -> bool:
    """Rabin-style check: f has no factor of degree <= deg/2 over GF(q)."""
    F, q = f.spec, f.spec.order
    x = P(F, 0, 1)
    power = x
    for _ in range(f.degree // 2):
        power = _powmod(power, q, f)
        if gcd(power - x, f).degree > 0:
            return False
    return True


def _powmod(g, e, f):
    result = Polynomial.one(g.spec)
    while e:
        if e & 1:
            result = result * g % f
        g = g * g % f
        e >>= 1
    return result


@pytest.mark.parametrize("n, q", LENGTHS[:8])
def test_reciprocal_preserves_irreducibility(n, q):
    for c in cyclotomic_cosets(n, q):
        i = min(c)
        m = minimal_polynomial_of_power(q, n, i)
        assert _is_irreducible(m)
        r = reciprocal(m).monic()
        assert _is_irreducible(r)
        assert r == minimal_polynomial_of_power(q, n, -i)


coeff_lists = st.lists(st.integers(0, 8), max_size=8)


@settings(max_examples=200, deadline=None)
@given(coeff_lists, coeff_lists.filter(lambda c: any(c)))
def test_divmod_identity(fc, dc):
    F = make_field(3, 2)
    f, d = Polynomial(F, fc), Polynomial(F, dc)
    quo, rem = divmod(f, d)
    assert quo * d + rem == f
    assert rem.degree < d.degree


@settings(max_examples=200, deadline=None)
@given(coeff_lists, coeff_lists)
def test_gcd_divides_both(fc, gc):
    F = make_field(3, 2)
    f, g = Polynomial(F, fc), Polynomial(F, gc)
    if f.is_zero() and g.is_zero():
        return
    d = gcd(f, g)
    assert (f % d).is_zero() and (g % d).is_zero()
    assert d.lead() == 1


def test_evaluation_in_extension():
    # x^2 + x + 1 over GF(2) vanishes at the primitive cube roots of unity in GF(4)
    F4 = make_field(2, 2)
    f = P(GF2, 1, 1, 1)
    assert f(F4.gamma, F4) == 0
    assert f(1, F4) == 1
