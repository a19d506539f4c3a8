"""Arithmetic in small finite fields GF(p^m).

Elements are handled internally as integer encodings ``enc = sum(c[i] * p**i)``
where ``c`` is the coefficient vector of the element in the polynomial basis
``1, x, ..., x^(m-1)`` modulo the field's modulus.  :class:`FieldElement` is a
thin operator-friendly wrapper around ``(spec, enc)``.

Every field is constructed canonically: the modulus is the smallest monic
primitive polynomial of degree ``m`` (ordered by the base-``p`` integer of
``a_{m-1} ... a_0``), so the class of ``x`` is a generator of the
multiplicative group.  For ``m == 1`` the modulus is ``x - g`` with ``g`` the
least primitive root modulo ``p``.
"""

from __future__ import annotations

import functools
import math
import threading

import numpy as np

MAX_FIELD_SIZE = 1 << 21
TABLE_LIMIT = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % f for f in range(3, math.isqrt(n) + 1, 2))


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, m)`` with ``q == p**m``; raise ValueError otherwise."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    fs = prime_factors(q)
    if len(fs) != 1:
        raise ValueError(f"{q} is not a prime power")
    p = fs[0]
    m = round(math.log(q, p))
    while p**m < q:
        m += 1
    while p**m > q:
        m -= 1
    if p**m != q:
        raise ValueError(f"{q} is not a prime power")
    return p, m


def multiplicative_order(a: int, n: int) -> int:
    """Order of ``a`` in (Z/n)^*; requires gcd(a, n) == 1."""
    if n == 1:
        return 1
    if math.gcd(a, n) != 1:
        raise ValueError(f"gcd({a}, {n}) != 1")
    t, x = 1, a % n
    while x != 1:
        x = x * a % n
        t += 1
    return t


# --- GF(p) polynomial helpers used only for choosing the modulus -----------

def _polymulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    m = len(mod) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # mod is monic
    for i in range(len(prod) - 1, m - 1, -1):
        c = prod[i]
        if c:
            for j in range(m + 1):
                prod[i - m + j] = (prod[i - m + j] - c * mod[j]) % p
    prod = prod[:m] + [0] * max(0, m - len(prod))
    return prod


def _x_power(e: int, mod: list[int], p: int) -> list[int]:
    m = len(mod) - 1
    result = [1] + [0] * (m - 1)
    base = [0, 1] + [0] * (m - 2) if m >= 2 else [(-mod[0]) % p]
    while e:
        if e & 1:
            result = _polymulmod(result, base, mod, p)
        base = _polymulmod(base, base, mod, p)
        e >>= 1
    return result


def _is_primitive(mod: list[int], p: int) -> bool:
    if mod[0] == 0:
        return False
    m = len(mod) - 1
    order = p**m - 1
    one = [1] + [0] * (m - 1)
    if _x_power(order, mod, p) != one:
        return False
    return all(_x_power(order // r, mod, p) != one for r in prime_factors(order))


def _primitive_root(p: int) -> int:
    if p == 2:
        return 1
    fs = prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in fs):
            return g
    raise AssertionError("unreachable")


def _canonical_modulus(p: int, m: int) -> tuple[int, ...]:
    if m == 1:
        return ((-_primitive_root(p)) % p, 1)
    for t in range(p**m):
        low = [(t // p**i) % p for i in range(m)]
        mod = low + [1]
        if _is_primitive(mod, p):
            return tuple(mod)
    raise AssertionError("no primitive polynomial found")


class FieldSpec:
    """The canonical field GF(p^m).

    Instances are cached per ``(p, m)``; use :func:`make_field`.
    """

    def __init__(self, p: int, m: int):
        self.p = p
        self.m = m
        self.order = p**m
        self.modulus = _canonical_modulus(p, m)
        self.gamma = (-self.modulus[0]) % p if m == 1 else p
        self._lock = threading.RLock()
        self._log_tables: tuple[list[int], list[int]] | None = None
        self._np_tables: dict[str, np.ndarray] | None = None
        self._zech_table: list[int] | None = None

    def __repr__(self):
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    def __reduce__(self):
        return make_field, (self.p, self.m)

    # -- encoding ------------------------------------------------------------

    def digits(self, a: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.m):
            a, r = divmod(a, p)
            out.append(r)
        return out

    def from_digits(self, coeffs) -> int:
        enc = 0
        for c in reversed(list(coeffs)):
            enc = enc * self.p + c % self.p
        return enc

    def element(self, enc: int) -> FieldElement:
        return FieldElement(self, enc)

    def elements(self) -> range:
        return range(self.order)

    def from_int(self, c: int) -> int:
        """Image of the integer ``c`` in the prime subfield."""
        return c % self.p

    # -- additive structure --------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        if a == 0:
            return b
        if b == 0:
            return a
        zech = self._zech()
        if zech is None:
            return self.from_digits(x + y for x, y in zip(self.digits(a), self.digits(b)))
        exp, log = self._log_tables
        la = log[a]
        z = zech[(log[b] - la) % (self.order - 1)]
        return 0 if z < 0 else exp[(la + z) % (self.order - 1)]

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.m == 1:
            return (-a) % self.p
        return self.from_digits(-x for x in self.digits(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    # -- multiplicative structure --------------------------------------------

    def _mul_schoolbook(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        return self.from_digits(_polymulmod(self.digits(a), self.digits(b), list(self.modulus), self.p))

    def _tables(self) -> tuple[list[int], list[int]] | None:
        if self.order > TABLE_LIMIT:
            return None
        if self._log_tables is None:
            with self._lock:
                if self._log_tables is None:
                    exp = [0] * (self.order - 1)
                    log = [0] * self.order
                    x = 1
                    for i in range(self.order - 1):
                        exp[i] = x
                        log[x] = i
                        x = self._mul_schoolbook(x, self.gamma)
                    self._log_tables = (exp, log)
        return self._log_tables

    def _zech(self) -> list[int] | None:
        """``zech[k] = log(1 + gamma^k)``, or -1 when ``1 + gamma^k = 0``."""
        tables = self._tables()
        if tables is None:
            return None
        if self._zech_table is None:
            with self._lock:
                if self._zech_table is None:
                    exp, log = tables
                    one = [1] + [0] * (self.m - 1)
                    zech = []
                    for k in range(self.order - 1):
                        d = self.digits(exp[k])
                        v = self.from_digits(x + y for x, y in zip(d, one))
                        zech.append(log[v] if v else -1)
                    self._zech_table = zech
        return self._zech_table

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        tables = self._tables()
        if tables is None:
            return self._mul_schoolbook(a, b)
        exp, log = tables
        return exp[(log[a] + log[b]) % (self.order - 1)]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        tables = self._tables()
        if tables is not None:
            exp, log = tables
            return exp[log[a] * e % (self.order - 1)]
        result = 1
        while e:
            if e & 1:
                result = self._mul_schoolbook(result, a)
            a = self._mul_schoolbook(a, a)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def gamma_pow(self, e: int) -> int:
        return self.pow(self.gamma, e % (self.order - 1))

    def order_of(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        t = self.order - 1
        for r in prime_factors(self.order - 1):
            while t % r == 0 and self.pow(a, t // r) == 1:
                t //= r
        return t

    def frobenius(self, a: int, times: int = 1) -> int:
        return self.pow(a, self.p**times)

    def trace(self, a: int, sub_degree: int) -> int:
        if sub_degree < 1 or self.m % sub_degree:
            raise ValueError(f"{sub_degree} does not divide {self.m}")
        s, x = 0, a
        step = self.p**sub_degree
        for _ in range(self.m // sub_degree):
            s = self.add(s, x)
            x = self.pow(x, step)
        return s

    def root_of_unity(self, n: int) -> int:
        if n < 1 or (self.order - 1) % n:
            raise ValueError(f"{n} does not divide {self.order - 1}")
        return self.gamma_pow((self.order - 1) // n)

    # -- numpy tables for vectorised kernels ---------------------------------

    def np_tables(self) -> dict[str, np.ndarray]:
        """Dense ``add``, ``mul``, ``neg`` tables (only for small fields)."""
        if self.order > 1024:
            raise ValueError(f"{self!r} too large for dense tables")
        if self._np_tables is None:
            with self._lock:
                if self._np_tables is None:
                    q = self.order
                    dt = np.uint16 if q > 256 else np.uint8
                    add = np.array([[self.add(a, b) for b in range(q)] for a in range(q)], dtype=dt)
                    mul = np.array([[self.mul(a, b) for b in range(q)] for a in range(q)], dtype=dt)
                    neg = np.array([self.neg(a) for a in range(q)], dtype=dt)
                    self._np_tables = {"add": add, "mul": mul, "neg": neg}
        return self._np_tables


class FieldElement:
    """An element of a :class:`FieldSpec`, with arithmetic operators."""

    __slots__ = ("spec", "enc")

    def __init__(self, spec: FieldSpec, enc: int):
        if not 0 <= enc < spec.order:
            raise ValueError(f"encoding {enc} out of range for {spec!r}")
        self.spec = spec
        self.enc = enc

    @property
    def coeffs(self) -> list[int]:
        return self.spec.digits(self.enc)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.spec is not self.spec:
                raise ValueError("elements of different fields")
            return other.enc
        if isinstance(other, int):
            return self.spec.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        return FieldElement(self.spec, self.spec.add(self.enc, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return FieldElement(self.spec, self.spec.sub(self.enc, b))

    def __rsub__(self, other):
        b = self._other(other)
        return FieldElement(self.spec, self.spec.sub(b, self.enc))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.enc))

    def __mul__(self, other):
        b = self._other(other)
        return FieldElement(self.spec, self.spec.mul(self.enc, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return FieldElement(self.spec, self.spec.div(self.enc, b))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.pow(self.enc, e))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec is other.spec and self.enc == other.enc
        if isinstance(other, int):
            return self.enc == self.spec.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.spec.p, self.spec.m, self.enc))

    def __int__(self):
        return self.enc

    def __bool__(self):
        return self.enc != 0

    def __repr__(self):
        return f"{self.spec!r}({self.enc})"


@functools.lru_cache(maxsize=None)
def _make_field(p: int, m: int) -> FieldSpec:
    return FieldSpec(p, m)


def make_field(p: int, m: int = 1) -> FieldSpec:
    """The canonical field GF(p^m); repeated calls return the same object."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    if p**m > MAX_FIELD_SIZE:
        raise ValueError(f"GF({p}^{m}) exceeds the supported size {MAX_FIELD_SIZE}")
    return _make_field(p, m)


def field_of_order(q: int) -> FieldSpec:
    return make_field(*prime_power(q))


# --- operation-level API ------------------------------------------------------

def _same(a: FieldElement, b: FieldElement) -> FieldSpec:
    if a.spec is not b.spec:
        raise ValueError("elements of different fields")
    return a.spec


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return FieldElement(_same(a, b), a.spec.add(a.enc, b.enc))


def subtract(a: FieldElement, b: FieldElement) -> FieldElement:
    return FieldElement(_same(a, b), a.spec.sub(a.enc, b.enc))


def multiply(a: FieldElement, b: FieldElement) -> FieldElement:
    return FieldElement(_same(a, b), a.spec.mul(a.enc, b.enc))


def invert(a: FieldElement) -> FieldElement:
    return FieldElement(a.spec, a.spec.inv(a.enc))


def trace_to_subfield(a: FieldElement, sub_degree: int) -> FieldElement:
    """Relative trace from GF(p^m) to GF(p^sub_degree), as an element of GF(p^m)."""
    return FieldElement(a.spec, a.spec.trace(a.enc, sub_degree))


def element_order(a: FieldElement) -> int:
    return a.spec.order_of(a.enc)


def nth_root_of_unity(spec: FieldSpec, n: int) -> FieldElement:
    """The canonical primitive n-th root of unity ``gamma^((p^m - 1) / n)``."""
    return FieldElement(spec, spec.root_of_unity(n))


class Embedding:
    """Field embedding GF(p^a) -> GF(p^b) for ``a | b``.

    The image of the small field's generator is the root of its modulus in
    the big field with the smallest discrete logarithm (w.r.t. the big
    field's ``gamma``), so the map is canonical.
    """

    def __init__(self, sub: FieldSpec, big: FieldSpec):
        if sub.p != big.p or big.m % sub.m:
            raise ValueError(f"{sub!r} is not a subfield of {big!r}")
        self.sub = sub
        self.big = big
        step = (big.order - 1) // (sub.order - 1)
        image = None
        for t in range(sub.order - 1):
            cand = big.gamma_pow(t * step)
            val = 0
            for c in reversed(sub.modulus):
                val = big.add(big.mul(val, cand), big.from_int(c))
            if val == 0:
                image = cand
                break
        assert image is not None
        self._to_big = [0] * sub.order
        for a in range(sub.order):
            val = 0
            for c in reversed(sub.digits(a)):
                val = big.add(big.mul(val, image), big.from_int(c))
            self._to_big[a] = val
        self._to_sub = {b: a for a, b in enumerate(self._to_big)}

    def to_big(self, a: int) -> int:
        return self._to_big[a]

    def to_sub(self, b: int) -> int:
        try:
            return self._to_sub[b]
        except KeyError:
            raise ValueError(f"{b} of {self.big!r} is not in {self.sub!r}") from None

    def contains(self, b: int) -> bool:
        return b in self._to_sub


@functools.lru_cache(maxsize=None)
def embedding(sub: FieldSpec, big: FieldSpec) -> Embedding:
    return Embedding(sub, big)
