"""Cyclic and BCH codes over GF(q).

Coordinate ``i`` of a codeword holds the coefficient of ``x^i``, so the
cyclic shift is multiplication by ``x`` modulo ``x^n - 1``.  Zero sets are
taken with respect to the canonical primitive ``n``-th root of unity
``alpha`` of GF(q^e), ``e = ord_n(q)``.

Besides :class:`CyclicCode` the module carries a small :class:`LinearCode`
type (reduced generator matrix) used by puncturing, subfield restriction and
the split-toric evaluation codes on the projective line.
"""

from __future__ import annotations

import functools
import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .finite_field import FieldSpec, embedding, field_of_order, multiplicative_order
from .polynomial import Polynomial, cyclotomic_coset, minimal_polynomial, reciprocal

# --- linear algebra over a FieldSpec ----------------------------------------


def rref(rows: Sequence[Sequence[int]], F: FieldSpec, ncols: int | None = None) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; returns ``(nonzero rows, pivot columns)``."""
    M = [list(r) for r in rows]
    if ncols is None:
        ncols = len(M[0]) if M else 0
    if M and F.order <= 1024:
        return _rref_np(M, F, ncols)
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][col]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = F.inv(M[r][col])
        M[r] = [F.mul(inv, a) for a in M[r]]
        for i in range(len(M)):
            if i != r and M[i][col]:
                f = M[i][col]
                M[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(M[i], M[r])]
        pivots.append(col)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def _rref_np(M: list[list[int]], F: FieldSpec, ncols: int) -> tuple[list[list[int]], list[int]]:
    T = F.np_tables()
    add, mul, neg = T["add"], T["mul"], T["neg"]
    A = np.array(M, dtype=add.dtype).reshape(len(M), ncols)
    inv = np.array([0] + [F.inv(a) for a in range(1, F.order)], dtype=add.dtype)
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        nz = np.flatnonzero(A[r:, col])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = mul[inv[A[r, col]], A[r]]
        others = np.flatnonzero(A[:, col])
        others = others[others != r]
        if others.size:
            factors = neg[A[others, col]]
            A[others] = add[A[others], mul[factors[:, None], A[r][None, :]]]
        pivots.append(col)
        r += 1
        if r == A.shape[0]:
            break
    return A[:r].tolist(), pivots


def rank(rows: Sequence[Sequence[int]], F: FieldSpec) -> int:
    return len(rref(rows, F)[0]) if rows else 0


def nullspace(rows: Sequence[Sequence[int]], F: FieldSpec, ncols: int) -> list[list[int]]:
    """Basis of ``{v : M v = 0}``."""
    R, pivots = rref(rows, F, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for row, pc in zip(R, pivots):
            v[pc] = F.neg(row[fc])
        basis.append(v)
    return basis


@dataclass(frozen=True)
class LinearCode:
    """A linear code given by a generator matrix in reduced echelon form."""

    spec: FieldSpec
    n: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, spec: FieldSpec, n: int, rows: Sequence[Sequence[int]]) -> LinearCode:
        R, _ = rref(rows, spec, n) if rows else ([], [])
        return cls(spec, n, tuple(tuple(r) for r in R))

    @property
    def q(self) -> int:
        return self.spec.order

    @property
    def k(self) -> int:
        return len(self.basis)

    def generator_matrix(self) -> list[list[int]]:
        return [list(r) for r in self.basis]

    def contains(self, word: Sequence[int]) -> bool:
        return rank(list(self.basis) + [list(word)], self.spec) == self.k

    def dual(self) -> LinearCode:
        return LinearCode.from_rows(self.spec, self.n, nullspace(self.basis, self.spec, self.n))


# --- cyclic codes ------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _root_data(q: int, n: int) -> tuple[FieldSpec, FieldSpec, int, int]:
    F = field_of_order(q)
    e = multiplicative_order(q, n)
    big = field_of_order(q**e)
    return F, big, e, big.root_of_unity(n)


@dataclass(frozen=True)
class BchParams:
    d_star: int
    b: int


@dataclass(frozen=True, eq=False)
class CyclicCode:
    q: int
    n: int
    g: Polynomial
    h: Polynomial
    zero_set: frozenset[int]
    e: int

    @property
    def spec(self) -> FieldSpec:
        return self.g.spec

    @property
    def k(self) -> int:
        return self.n - self.g.degree

    @property
    def nonzeros(self) -> frozenset[int]:
        return frozenset(range(self.n)) - self.zero_set

    def __eq__(self, other):
        if not isinstance(other, CyclicCode):
            return NotImplemented
        return (self.q, self.n, self.g) == (other.q, other.n, other.g)

    def __hash__(self):
        return hash((self.q, self.n, self.g))

    def __repr__(self):
        return f"CyclicCode(q={self.q}, n={self.n}, k={self.k}, g={self.g!r})"

    def generator_matrix(self) -> list[list[int]]:
        g = list(self.g.coeffs)
        return [[0] * i + g + [0] * (self.n - len(g) - i) for i in range(self.k)]

    def to_linear(self) -> LinearCode:
        return LinearCode.from_rows(self.spec, self.n, self.generator_matrix())

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "k": self.k,
            "generator": self.g.to_list(),
            "parity_check": self.h.to_list(),
            "zero_set": sorted(self.zero_set),
        }


def _check_length(q: int, n: int) -> None:
    if n < 1:
        raise ValueError("length must be positive")
    if math.gcd(n, q) != 1:
        raise ValueError(f"gcd(n={n}, q={q}) != 1")


def _zero_set(g: Polynomial, q: int, n: int) -> frozenset[int]:
    _, big, _, alpha = _root_data(q, n)
    return frozenset(i for i in range(n) if g(big.pow(alpha, i), big) == 0)


def from_generator(q: int, n: int, g: Polynomial) -> CyclicCode:
    _check_length(q, n)
    xn1 = Polynomial.x_n_minus_1(g.spec, n)
    g = g.monic()
    h, r = divmod(xn1, g)
    if not r.is_zero():
        raise ValueError("generator does not divide x^n - 1")
    _, _, e, _ = _root_data(q, n)
    return CyclicCode(q, n, g, h.monic(), _zero_set(g, q, n), e)


def from_parity_check(q: int, n: int, h: Polynomial) -> CyclicCode:
    """Cyclic code with parity-check polynomial ``h`` (``g = (x^n - 1) / h``)."""
    _check_length(q, n)
    if h.spec.order != q:
        raise ValueError("h is not defined over GF(q)")
    xn1 = Polynomial.x_n_minus_1(h.spec, n)
    g, r = divmod(xn1, h.monic())
    if not r.is_zero():
        raise ValueError("h does not divide x^n - 1")
    return from_generator(q, n, g)


def from_nonzeros(q: int, n: int, exponents) -> CyclicCode:
    """Code whose parity-check polynomial has roots ``alpha^i`` for the q-closure of ``exponents``."""
    _check_length(q, n)
    F, big, _, alpha = _root_data(q, n)
    closure = set()
    for i in exponents:
        closure |= cyclotomic_coset(i, n, q)
    h = Polynomial.one(F)
    done: set[int] = set()
    for i in sorted(closure):
        if i not in done:
            done |= cyclotomic_coset(i, n, q)
            h = h * minimal_polynomial(big.element(big.pow(alpha, i)), q)
    return from_parity_check(q, n, h)


def minimal_polynomial_of_power(q: int, n: int, i: int) -> Polynomial:
    """F_q-minimal polynomial of ``alpha^i``, alpha the canonical n-th root."""
    _, big, _, alpha = _root_data(q, n)
    return minimal_polynomial(big.element(big.pow(alpha, i % n)), q)


def bch_build(q: int, n: int, d_star: int, b: int) -> CyclicCode:
    """BCH_q(n, d*, b): generator lcm of the minimal polynomials of alpha^b .. alpha^(b+d*-2)."""
    _check_length(q, n)
    if d_star < 2:
        raise ValueError("designed distance must be >= 2")
    F = field_of_order(q)
    # distinct minimal polynomials are coprime irreducibles, so their product is the lcm
    g = Polynomial.one(F)
    covered: set[int] = set()
    for i in range(b, b + d_star - 1):
        if i % n not in covered:
            covered |= cyclotomic_coset(i, n, q)
            g = g * minimal_polynomial_of_power(q, n, i)
    return from_generator(q, n, g)


def designed_params(code: CyclicCode) -> BchParams:
    """Longest cyclic run of consecutive zeros; ``d* = run + 1``, smallest start wins."""
    Z = code.zero_set
    n = code.n
    if not Z:
        return BchParams(1, 0)
    if len(Z) == n:
        return BchParams(n + 1, 0)
    best_len, best_b = 0, 0
    for b in range(n):
        if b in Z and (b - 1) % n not in Z:
            length = 0
            while (b + length) % n in Z:
                length += 1
            if length > best_len:
                best_len, best_b = length, b
    return BchParams(best_len + 1, best_b)


def maximal_runs(code: CyclicCode) -> list[BchParams]:
    """Every maximal run of zeros of the longest length (for tie diagnostics)."""
    best = designed_params(code)
    out = []
    Z, n = code.zero_set, code.n
    for b in range(n):
        if all((b + t) % n in Z for t in range(best.d_star - 1)) and (b - 1) % n not in Z:
            out.append(BchParams(best.d_star, b))
    return out


def dual(code: CyclicCode) -> CyclicCode:
    """Euclidean dual; generator is the monic reciprocal of ``h``."""
    return from_generator(code.q, code.n, reciprocal(code.h).monic())


def lcd_criteria(code: CyclicCode) -> tuple[bool, bool]:
    """(self-reciprocal generator, rank of [G; G_dual] == n)."""
    by_poly = reciprocal(code.g).monic() == code.g
    stacked = code.generator_matrix() + dual(code).generator_matrix()
    by_rank = rank(stacked, code.spec) == code.n if stacked else code.n == 0
    return by_poly, by_rank


def is_lcd(code: CyclicCode) -> bool:
    by_poly, by_rank = lcd_criteria(code)
    if by_poly != by_rank:
        raise RuntimeError(f"LCD criteria disagree for {code!r}")
    return by_poly


def encode(code: CyclicCode, message: Sequence[int]) -> list[int]:
    """Non-systematic encoding ``m(x) * g(x)``."""
    if len(message) != code.k:
        raise ValueError(f"message length {len(message)} != k = {code.k}")
    c = Polynomial(code.spec, message) * code.g
    return [c[i] for i in range(code.n)]


def is_codeword(code: CyclicCode, word: Sequence[int]) -> bool:
    c = Polynomial(code.spec, word)
    return (c % code.g).is_zero()


# --- puncturing, restriction, P^1 evaluation codes ---------------------------


def generator_polynomial(code: LinearCode) -> Polynomial | None:
    """Generator polynomial of a linear code, or None if the code is not cyclic."""
    F, n = code.spec, code.n
    g = Polynomial.x_n_minus_1(F, n)
    for row in code.basis:
        g = _gcd_monic(g, Polynomial(F, row))
    if n - g.degree != code.k:
        return None
    return g


def _gcd_monic(f: Polynomial, g: Polynomial) -> Polynomial:
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def as_cyclic(code: LinearCode) -> CyclicCode:
    g = generator_polynomial(code)
    if g is None:
        raise ValueError("code is not cyclic")
    return from_generator(code.q, code.n, g)


def subfield_subcode(code: LinearCode, base_q: int) -> LinearCode:
    """All codewords of ``code`` with every coordinate in GF(base_q).

    Solved as the null space over GF(q) of the trace-expanded parity checks
    ``sum_j Tr(theta * h_j) c_j = 0`` for ``theta`` in a GF(q)-basis of the
    parent field.
    """
    big = code.spec
    sub = field_of_order(base_q)
    emb = embedding(sub, big)
    n = code.n
    e = big.m // sub.m
    H = nullspace(code.basis, big, n)
    constraints = []
    for hrow in H:
        for t in range(e):
            theta = big.gamma_pow(t)
            constraints.append([emb.to_sub(big.trace(big.mul(theta, hj), sub.m)) for hj in hrow])
    return LinearCode.from_rows(sub, n, nullspace(constraints, sub, n))


def puncture(code: LinearCode, coordinates: Sequence[int]) -> LinearCode:
    """Keep only ``coordinates`` (in the given order)."""
    if not coordinates:
        raise ValueError("empty coordinate subset")
    rows = [[row[i] for i in coordinates] for row in code.basis]
    return LinearCode.from_rows(code.spec, len(coordinates), rows)


def root_of_unity_coordinates(q_ext: int, n: int) -> list[int]:
    """Indices ``i`` with ``(gamma^i)^n = 1``, in increasing power of ``alpha = gamma^((Q-1)/n)``."""
    if (q_ext - 1) % n:
        raise ValueError(f"{n} does not divide {q_ext - 1}")
    step = (q_ext - 1) // n
    return [t * step for t in range(n)]


def p1_toric_code(q_ext: int, r: int, s: int) -> LinearCode:
    """Evaluation code of ``span{x^-r, ..., x^s}`` at ``gamma^0 .. gamma^(Q-2)``."""
    if r < 0 or s < 0 or r + s >= q_ext - 1:
        raise ValueError("need r, s >= 0 and r + s < q_ext - 1")
    F = field_of_order(q_ext)
    N = q_ext - 1
    rows = [[F.gamma_pow(i * j) for i in range(N)] for j in range(-r, s + 1)]
    return LinearCode.from_rows(F, N, rows)


def bch_from_p1(q: int, e: int, n: int, d_star: int, b: int) -> LinearCode:
    """Puncture the split toric code to the n-th roots of unity, then restrict to GF(q)."""
    Q = q**e
    r, s = b - 1, n + 1 - d_star - b
    parent = p1_toric_code(Q, r, s)
    return subfield_subcode(puncture(parent, root_of_unity_coordinates(Q, n)), q)
