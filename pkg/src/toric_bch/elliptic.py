"""Elliptic curves in long Weierstrass form over small finite fields.

    y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6

Coefficients are integer field encodings.  Discriminant and j-invariant use
the characteristic-free b2/b4/b6/b8/c4 quantities, so characteristics 2 and 3
need no special cases.  Point counts come from enumeration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .finite_field import FieldSpec, field_of_order, prime_power

INFINITY = None


def nq1(q: int) -> int:
    """Maximal number of rational points on an elliptic curve over GF(q)."""
    p, m = prime_power(q)
    t = math.isqrt(4 * q)  # floor(2 sqrt q)
    square = math.isqrt(q) ** 2 == q
    if not square and m > 1 and t % p == 0:
        return q + t
    return q + t + 1


def hasse_bound(q: int) -> int:
    return math.isqrt(4 * q)


@dataclass(frozen=True)
class CurveStats:
    count: int
    trace: int
    j: int
    supersingular: bool

    def to_dict(self) -> dict:
        return {"count": self.count, "trace": self.trace, "j": self.j, "supersingular": self.supersingular}


@dataclass(frozen=True)
class WeierstrassCurve:
    spec: FieldSpec
    a1: int = 0
    a2: int = 0
    a3: int = 0
    a4: int = 0
    a6: int = 0

    @classmethod
    def over(cls, q: int, a1=0, a2=0, a3=0, a4=0, a6=0) -> WeierstrassCurve:
        return cls(field_of_order(q), a1, a2, a3, a4, a6)

    @property
    def q(self) -> int:
        return self.spec.order

    def __repr__(self):
        return f"WeierstrassCurve(q={self.q}, a=[{self.a1},{self.a2},{self.a3},{self.a4},{self.a6}])"

    def to_dict(self) -> dict:
        return {"q": self.q, "a1": self.a1, "a2": self.a2, "a3": self.a3, "a4": self.a4, "a6": self.a6}

    # -- invariants ------------------------------------------------------------

    def b_invariants(self) -> tuple[int, int, int, int]:
        F = self.spec
        mul, add, sub = F.mul, F.add, F.sub
        c = F.from_int
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        b2 = add(mul(a1, a1), mul(c(4), a2))
        b4 = add(mul(c(2), a4), mul(a1, a3))
        b6 = add(mul(a3, a3), mul(c(4), a6))
        b8 = mul(mul(a1, a1), a6)
        b8 = add(b8, mul(c(4), mul(a2, a6)))
        b8 = sub(b8, mul(a1, mul(a3, a4)))
        b8 = add(b8, mul(a2, mul(a3, a3)))
        b8 = sub(b8, mul(a4, a4))
        return b2, b4, b6, b8

    def c4(self) -> int:
        F = self.spec
        b2, b4, _, _ = self.b_invariants()
        return F.sub(F.mul(b2, b2), F.mul(F.from_int(24), b4))

    def discriminant(self) -> int:
        F = self.spec
        mul, c = F.mul, F.from_int
        b2, b4, b6, b8 = self.b_invariants()
        d = F.neg(mul(mul(b2, b2), b8))
        d = F.sub(d, mul(c(8), mul(b4, mul(b4, b4))))
        d = F.sub(d, mul(c(27), mul(b6, b6)))
        d = F.add(d, mul(c(9), mul(b2, mul(b4, b6))))
        return d

    def is_singular(self) -> bool:
        return self.discriminant() == 0

    def _require_smooth(self) -> None:
        if self.is_singular():
            raise ValueError(f"{self!r} is singular")

    # -- points ----------------------------------------------------------------

    def contains(self, P) -> bool:
        if P is INFINITY:
            return True
        F = self.spec
        x, y = P
        lhs = F.add(F.mul(y, y), F.mul(y, F.add(F.mul(self.a1, x), self.a3)))
        return lhs == self._rhs(x)

    def _rhs(self, x: int) -> int:
        F = self.spec
        v = F.add(x, self.a2)
        v = F.add(F.mul(v, x), self.a4)
        return F.add(F.mul(v, x), self.a6)

    def points(self) -> list:
        F = self.spec
        pts = [INFINITY]
        for x in range(F.order):
            for y in range(F.order):
                if self.contains((x, y)):
                    pts.append((x, y))
        return pts

    def neg(self, P):
        if P is INFINITY:
            return P
        F = self.spec
        x, y = P
        return (x, F.sub(F.neg(y), F.add(F.mul(self.a1, x), self.a3)))

    def add(self, P, Q):
        """Chord-tangent addition."""
        if P is INFINITY:
            return Q
        if Q is INFINITY:
            return P
        F = self.spec
        mul, add, sub = F.mul, F.add, F.sub
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        x1, y1 = P
        x2, y2 = Q
        if x1 == x2:
            if add(add(y1, y2), add(mul(a1, x2), a3)) == 0:
                return INFINITY
            num = add(add(mul(F.from_int(3), mul(x1, x1)), mul(F.from_int(2), mul(a2, x1))), sub(a4, mul(a1, y1)))
            den = add(add(mul(F.from_int(2), y1), mul(a1, x1)), a3)
            lam = F.div(num, den)
            nu = F.div(sub(add(add(F.neg(mul(x1, mul(x1, x1))), mul(a4, x1)), mul(F.from_int(2), a6)), mul(a3, y1)), den)
        else:
            lam = F.div(sub(y2, y1), sub(x2, x1))
            nu = F.div(sub(mul(y1, x2), mul(y2, x1)), sub(x2, x1))
        x3 = sub(sub(sub(add(mul(lam, lam), mul(a1, lam)), a2), x1), x2)
        y3 = sub(sub(F.neg(mul(add(lam, a1), x3)), nu), a3)
        return (x3, y3)

    def mul(self, t: int, P):
        R = INFINITY
        if t < 0:
            t, P = -t, self.neg(P)
        while t:
            if t & 1:
                R = self.add(R, P)
            P = self.add(P, P)
            t >>= 1
        return R


def count_points(curve: WeierstrassCurve) -> int:
    """Number of GF(q)-points, including the point at infinity."""
    curve._require_smooth()
    F = curve.spec
    T = F.np_tables()
    add, mul = T["add"], T["mul"]
    xs = np.arange(F.order)
    rhs = add[mul[add[mul[add[xs, curve.a2], xs], curve.a4], xs], curve.a6]
    X, Y = np.meshgrid(xs, xs, indexing="ij")
    lhs = add[mul[Y, Y], mul[Y, add[mul[curve.a1, X], curve.a3]]]
    return 1 + int(np.count_nonzero(lhs == rhs[:, None]))


def j_invariant(curve: WeierstrassCurve) -> int:
    curve._require_smooth()
    F = curve.spec
    c4 = curve.c4()
    return F.div(F.mul(c4, F.mul(c4, c4)), curve.discriminant())


def is_supersingular(curve: WeierstrassCurve) -> bool:
    trace = curve.q + 1 - count_points(curve)
    ss = trace % curve.spec.p == 0
    if curve.spec.p in (2, 3) and ss != (j_invariant(curve) == 0):
        raise RuntimeError(f"supersingularity criteria disagree for {curve!r}")
    return ss


def curve_stats(curve: WeierstrassCurve) -> CurveStats:
    count = count_points(curve)
    trace = curve.q + 1 - count
    return CurveStats(count, trace, j_invariant(curve), is_supersingular(curve))


def point_order(curve: WeierstrassCurve, P) -> int:
    if not curve.contains(P):
        raise ValueError(f"{P} is not on {curve!r}")
    t, R = 1, P
    while R is not INFINITY:
        R = curve.add(R, P)
        t += 1
    return t


# --- exhaustive search over all Weierstrass tuples ---------------------------


@dataclass(frozen=True)
class CurveCensus:
    """Counts and discriminants for every coefficient tuple over GF(q).

    Arrays are indexed by the tuple index ``((((a1*q + a3)*q + a2)*q + a4)*q + a6)``.
    """

    q: int
    counts: np.ndarray
    nonsingular: np.ndarray

    def tuple_at(self, idx: int) -> tuple[int, int, int, int, int]:
        q = self.q
        a6 = idx % q
        a4 = idx // q % q
        a2 = idx // q**2 % q
        a3 = idx // q**3 % q
        a1 = idx // q**4
        return a1, a2, a3, a4, a6

    def curve_at(self, idx: int) -> WeierstrassCurve:
        a1, a2, a3, a4, a6 = self.tuple_at(idx)
        return WeierstrassCurve.over(self.q, a1, a2, a3, a4, a6)


def census(q: int) -> CurveCensus:
    """Point counts for all q^5 Weierstrass tuples (vectorised)."""
    if q > 16:
        raise ValueError("exhaustive census is limited to q <= 16")
    F = field_of_order(q)
    T = F.np_tables()
    add, mul = T["add"].astype(np.int64), T["mul"].astype(np.int64)
    neg = T["neg"].astype(np.int64)
    c = F.from_int
    e = np.arange(q)

    # hist[a1, a3, x, v] = #{y : y^2 + a1 x y + a3 y = v}
    A1, A3, X, Y = np.meshgrid(e, e, e, e, indexing="ij")
    lhs = add[mul[Y, Y], mul[Y, add[mul[A1, X], A3]]]
    hist = np.zeros((q, q, q, q), dtype=np.int64)
    np.add.at(hist, (A1, A3, X, lhs), 1)

    # rhs[a2, a4, a6, x]
    A2, A4, A6, Xr = np.meshgrid(e, e, e, e, indexing="ij")
    rhs = add[mul[add[mul[add[Xr, A2], Xr], A4], Xr], A6]

    counts = np.ones((q, q, q, q, q), dtype=np.int64)
    for x in range(q):
        counts += hist[:, :, x, :][:, :, rhs[:, :, :, x]]

    a1, a3, a2, a4, a6 = np.meshgrid(e, e, e, e, e, indexing="ij")
    sq = lambda a: mul[a, a]  # noqa: E731
    b2 = add[sq(a1), mul[c(4), a2]]
    b4 = add[mul[c(2), a4], mul[a1, a3]]
    b6 = add[sq(a3), mul[c(4), a6]]
    b8 = add[mul[sq(a1), a6], mul[c(4), mul[a2, a6]]]
    b8 = add[b8, neg[mul[a1, mul[a3, a4]]]]
    b8 = add[b8, mul[a2, sq(a3)]]
    b8 = add[b8, neg[sq(a4)]]
    disc = neg[mul[sq(b2), b8]]
    disc = add[disc, neg[mul[c(8), mul[b4, sq(b4)]]]]
    disc = add[disc, neg[mul[c(27), sq(b6)]]]
    disc = add[disc, mul[c(9), mul[b2, mul[b4, b6]]]]
    return CurveCensus(q, counts.reshape(-1), (disc != 0).reshape(-1))


@dataclass(frozen=True)
class OptimalSearch:
    q: int
    max_count: int
    maximizers: list[WeierstrassCurve]
    j_invariants: frozenset[int]
    curves_checked: int


def optimal_search(q: int) -> OptimalSearch:
    """Brute-force maximum point count over all nonsingular curves over GF(q)."""
    if q > 9:
        raise ValueError("optimal_search is limited to q <= 9")
    cen = census(q)
    counts = np.where(cen.nonsingular, cen.counts, -1)
    best = int(counts.max())
    idx = np.flatnonzero(counts == best)
    curves = [cen.curve_at(int(i)) for i in idx]
    js = frozenset(j_invariant(c) for c in curves)
    return OptimalSearch(q, best, curves, js, int(cen.nonsingular.sum()))


# curves listed for small q (Table of F_q-optimal curves)
def _poly_enc(q: int, value: int) -> int:
    return field_of_order(q).from_int(value)


def reference_curve(q: int) -> WeierstrassCurve:
    """The listed F_q-optimal curve for q in {2, 3, 4, 5, 7, 8, 9}."""
    r = lambda v: _poly_enc(q, v)  # noqa: E731
    table = {
        2: dict(a3=r(1), a4=r(1)),
        3: dict(a4=r(2), a6=r(1)),
        4: dict(a3=r(1)),
        5: dict(a4=r(3)),
        7: dict(a6=r(3)),
        8: dict(a1=r(1), a3=r(1), a6=r(1)),
        9: dict(a4=r(1)),
    }
    if q not in table:
        raise ValueError(f"no listed optimal curve for q = {q}")
    return WeierstrassCurve.over(q, **table[q])
