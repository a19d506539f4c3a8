import numpy as np
import pytest

from toric_bch.finite_field import (
    element_order,
    embedding,
    field_of_order,
    invert,
    make_field,
    multiply,
    nth_root_of_unity,
    prime_power,
    trace_to_subfield,
)

SMALL_FIELDS = [(p, m) for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79)
                for m in range(1, 7) if p**m <= 81]


def test_make_field_gf2():
    F = make_field(2, 1)
    assert F.order == 2
    assert F.gamma == 1


def test_make_field_gf4_modulus():
    # x^2 + x + 1 is the only irreducible monic quadratic over GF(2)
    assert make_field(2, 2).modulus == (1, 1, 1)


def test_make_field_gf27_gamma_order():
    F = make_field(3, 3)
    g = F.element(F.gamma)
    assert F.order == 27
    assert g**26 == 1
    assert g**13 != 1
    assert g**2 != 1


def test_make_field_is_canonical():
    assert make_field(3, 4) is make_field(3, 4)
    assert make_field(3, 4).modulus == make_field(3, 4).modulus


@pytest.mark.parametrize("p, m", [(4, 1), (1, 1), (9, 2), (2, 0), (2, 30)])
def test_make_field_rejects(p, m):
    with pytest.raises(ValueError):
        make_field(p, m)


def test_gf4_multiplication():
    F = make_field(2, 2)
    g = F.element(F.gamma)
    zero, one = F.element(0), F.element(1)
    assert multiply(g, g) == g + 1
    assert multiply(g, g + 1) == one
    for a in F.elements():
        assert multiply(zero, F.element(a)) == zero


def test_mismatched_specs():
    with pytest.raises(ValueError):
        multiply(make_field(2, 2).element(1), make_field(3, 1).element(1))


def test_invert_examples():
    F4 = make_field(2, 2)
    g = F4.element(F4.gamma)
    assert invert(F4.element(1)) == F4.element(1)
    assert invert(g) == g + 1
    F3 = make_field(3, 1)
    assert invert(F3.element(2)) == F3.element(2)
    with pytest.raises(ZeroDivisionError):
        invert(F3.element(0))


def test_trace_examples():
    F = make_field(2, 2)
    g = F.element(F.gamma)
    assert trace_to_subfield(F.element(0), 1) == 0
    assert trace_to_subfield(g, 1) == 1
    assert trace_to_subfield(F.element(1), 1) == 0
    with pytest.raises(ValueError):
        trace_to_subfield(make_field(2, 3).element(3), 2)


def test_element_order_examples():
    F4 = make_field(2, 2)
    assert element_order(F4.element(1)) == 1
    assert element_order(F4.element(F4.gamma)) == 3
    F27 = make_field(3, 3)
    assert element_order(F27.element(F27.gamma) ** 2) == 13
    with pytest.raises(ValueError):
        element_order(F27.element(0))


def test_nth_root_of_unity_examples():
    F27 = make_field(3, 3)
    assert nth_root_of_unity(F27, 1) == 1
    assert nth_root_of_unity(F27, 13) == F27.element(F27.gamma) ** 2
    F16 = make_field(2, 4)
    assert nth_root_of_unity(F16, 15).enc == F16.gamma
    with pytest.raises(ValueError):
        nth_root_of_unity(F16, 7)


def test_prime_power():
    assert prime_power(9) == (3, 2)
    assert prime_power(7) == (7, 1)
    assert prime_power(128) == (2, 7)
    for bad in (1, 6, 12, 100):
        with pytest.raises(ValueError):
            prime_power(bad)


@pytest.mark.parametrize("p, m", SMALL_FIELDS)
def test_field_axioms_exhaustive(p, m):
    F = make_field(p, m)
    q = F.order
    T = F.np_tables()
    add, mul = T["add"].astype(np.int64), T["mul"].astype(np.int64)
    e = np.arange(q)
    a, b, c = np.meshgrid(e, e, e, indexing="ij")
    assert (mul[mul[a, b], c] == mul[a, mul[b, c]]).all()
    assert (add[add[a, b], c] == add[a, add[b, c]]).all()
    assert (mul[a, add[b, c]] == add[mul[a, b], mul[a, c]]).all()
    assert (mul == mul.T).all() and (add == add.T).all()
    # unique inverses: each nonzero row of the multiplication table is a permutation
    for x in range(1, q):
        assert sorted(mul[x]) == list(range(q))
        assert np.count_nonzero(mul[x] == 1) == 1
    # log-table product agrees with schoolbook reduction
    for x in range(q):
        for y in range(q):
            assert F.mul(x, y) == F._mul_schoolbook(x, y)


@pytest.mark.parametrize("p, m", SMALL_FIELDS)
def test_frobenius_is_a_field_automorphism(p, m):
    F = make_field(p, m)
    for x in F.elements():
        for y in F.elements():
            assert F.frobenius(F.add(x, y)) == F.add(F.frobenius(x), F.frobenius(y))
            assert F.frobenius(F.mul(x, y)) == F.mul(F.frobenius(x), F.frobenius(y))


@pytest.mark.parametrize("p, m", SMALL_FIELDS)
def test_orders_traces_and_encoding(p, m):
    F = make_field(p, m)
    for x in F.elements():
        assert F.from_digits(F.digits(x)) == x
        if x:
            assert (F.order - 1) % F.order_of(x) == 0
        for d in range(1, m + 1):
            if m % d == 0:
                t = F.trace(x, d)
                assert F.pow(t, p**d) == t


def test_gamma_is_primitive_for_large_fields():
    for p, m in [(3, 12), (2, 18), (2, 12), (5, 6)]:
        F = make_field(p, m)
        assert F.order_of(F.gamma) == F.order - 1


def test_embedding_is_a_homomorphism():
    for sub_q, big_q in [(4, 16), (9, 729), (3, 81), (2, 8), (8, 64)]:
        sub, big = field_of_order(sub_q), field_of_order(big_q)
        E = embedding(sub, big)
        for x in sub.elements():
            for y in sub.elements():
                assert E.to_big(sub.add(x, y)) == big.add(E.to_big(x), E.to_big(y))
                assert E.to_big(sub.mul(x, y)) == big.mul(E.to_big(x), E.to_big(y))
            assert E.to_sub(E.to_big(x)) == x
        with pytest.raises(ValueError):
            embedding(field_of_order(4), field_of_order(8))


def test_field_element_operators():
    F = make_field(3, 2)
    a, b = F.element(4), F.element(7)
    assert (a + b) - b == a
    assert (a * b) / b == a
    assert -a + a == 0
    assert a * 2 == a + a
    assert repr(a) == "GF(3^2)(4)"
