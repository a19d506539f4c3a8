"""Dense univariate polynomials over a :class:`FieldSpec`.

Coefficients are integer field encodings, constant term first, with no
trailing zeros (the zero polynomial has an empty coefficient tuple).
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence

from .finite_field import FieldElement, FieldSpec, embedding, field_of_order


class Polynomial:
    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.spec = spec
        self.coeffs = tuple(cs)

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, spec: FieldSpec) -> Polynomial:
        return cls(spec)

    @classmethod
    def one(cls, spec: FieldSpec) -> Polynomial:
        return cls(spec, [1])

    @classmethod
    def monomial(cls, spec: FieldSpec, degree: int, coeff: int = 1) -> Polynomial:
        return cls(spec, [0] * degree + [coeff])

    @classmethod
    def x_n_minus_1(cls, spec: FieldSpec, n: int) -> Polynomial:
        return cls(spec, [spec.neg(1)] + [0] * (n - 1) + [1])

    # -- basic protocol ------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.spec is other.spec and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.spec.order, self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if c == 1 and mono:
                terms.append(mono)
            else:
                terms.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(reversed(terms))

    def _check(self, other: Polynomial) -> FieldSpec:
        if other.spec is not self.spec:
            raise ValueError("polynomials over different fields")
        return self.spec

    # -- ring operations -----------------------------------------------------

    def __add__(self, other: Polynomial) -> Polynomial:
        F = self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(F, [F.add(self[i], other[i]) for i in range(n)])

    def __neg__(self) -> Polynomial:
        return Polynomial(self.spec, [self.spec.neg(c) for c in self.coeffs])

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Polynomial) -> Polynomial:
        F = self._check(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial(F)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Polynomial(F, out)

    def scale(self, c: int) -> Polynomial:
        return Polynomial(self.spec, [self.spec.mul(c, a) for a in self.coeffs])

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        F = self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dd = other.degree
        inv_lead = F.inv(other.lead())
        quot = [0] * max(0, len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            t = F.mul(c, inv_lead)
            quot[i - dd] = t
            for j, b in enumerate(other.coeffs):
                rem[i - dd + j] = F.sub(rem[i - dd + j], F.mul(t, b))
        return Polynomial(F, quot), Polynomial(F, rem[:dd])

    def __floordiv__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[0]

    def __mod__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[1]

    def monic(self) -> Polynomial:
        if self.is_zero():
            return self
        return self.scale(self.spec.inv(self.lead()))

    def __call__(self, x: int, field: FieldSpec | None = None) -> int:
        """Evaluate at the encoding ``x`` of ``field`` (default: own field).

        When ``field`` is an extension, coefficients are mapped through the
        canonical embedding first.
        """
        F = self.spec if field is None else field
        cs = self.coeffs
        if F is not self.spec:
            emb = embedding(self.spec, F)
            cs = [emb.to_big(c) for c in cs]
        val = 0
        for c in reversed(cs):
            val = F.add(F.mul(val, x), c)
        return val

    def to_list(self) -> list[int]:
        return list(self.coeffs)


def poly_divmod(f: Polynomial, d: Polynomial) -> tuple[Polynomial, Polynomial]:
    return divmod(f, d)


def gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic greatest common divisor."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def lcm(f: Polynomial, g: Polynomial) -> Polynomial:
    if f.is_zero() or g.is_zero():
        raise ValueError("lcm with the zero polynomial")
    return (f * g // gcd(f, g)).monic()


def reciprocal(f: Polynomial) -> Polynomial:
    """``x^deg(f) * f(1/x)``; requires a nonzero constant term."""
    if f.is_zero():
        raise ValueError("reciprocal of the zero polynomial")
    if f[0] == 0:
        raise ValueError("reciprocal requires a nonzero constant term")
    return Polynomial(f.spec, reversed(f.coeffs))


def cyclotomic_coset(i: int, n: int, q: int) -> frozenset[int]:
    """The orbit of ``i`` mod ``n`` under multiplication by ``q``."""
    if math.gcd(q, n) != 1:
        raise ValueError(f"gcd({q}, {n}) != 1")
    i %= n
    orbit = []
    j = i
    while True:
        orbit.append(j)
        j = j * q % n
        if j == i:
            break
    return frozenset(orbit)


def cyclotomic_cosets(n: int, q: int) -> list[frozenset[int]]:
    """All cosets mod ``n``, ordered by their least element."""
    seen: set[int] = set()
    out = []
    for i in range(n):
        if i not in seen:
            c = cyclotomic_coset(i, n, q)
            seen |= c
            out.append(c)
    return out


def minimal_polynomial(beta: FieldElement, base_q: int) -> Polynomial:
    """Minimal polynomial of ``beta`` over GF(base_q), a subfield of beta's field.

    Built as the product of ``x - beta^(q^j)`` over the Frobenius orbit; the
    coefficients must land in the subfield, which is checked on the way back.
    """
    big = beta.spec
    sub = field_of_order(base_q)
    emb = embedding(sub, big)
    orbit = []
    b = beta.enc
    while True:
        orbit.append(b)
        b = big.pow(b, base_q)
        if b == beta.enc:
            break
    prod = Polynomial.one(big)
    for r in orbit:
        prod = prod * Polynomial(big, [big.neg(r), 1])
    return Polynomial(sub, [emb.to_sub(c) for c in prod.coeffs])


def product(polys: Sequence[Polynomial], spec: FieldSpec) -> Polynomial:
    out = Polynomial.one(spec)
    for f in polys:
        out = out * f
    return out
