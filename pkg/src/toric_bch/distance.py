"""Exact minimum distance and weight distribution by exhaustive enumeration.

Messages are split into a high part (first ``k_high`` coordinates) and a low
part.  All ``q^k_low`` low combinations are tabulated once; for every high
message ``u`` the codewords ``uG_high + L`` are scored in one vectorised
comparison, using that ``a + b != 0`` iff ``b != -a``.  High messages are
normalised (leading nonzero symbol 1), since weights are invariant under
nonzero scalars.

The high message list is cut into contiguous chunks that can run on a thread
pool.  The reported witness is the first minimum-weight codeword in
enumeration order, so results do not depend on the chunking.
"""

from __future__ import annotations

import itertools
import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .cyclic import CyclicCode, LinearCode

DEFAULT_BUDGET = 10**9
LOW_TABLE_LIMIT = 1 << 15
BLOCK_ELEMENTS = 1 << 22


@dataclass(frozen=True)
class DistanceResult:
    d: int
    witness: tuple[int, ...]
    exact: bool
    evaluated: int

    def __int__(self):
        return self.d


class _Kernel:
    def __init__(self, code: CyclicCode | LinearCode):
        F = code.spec
        self.q = F.order
        self.n = code.n
        self.tables = F.np_tables()
        G = np.array(code.generator_matrix(), dtype=self.tables["add"].dtype).reshape(-1, code.n)
        self.k = G.shape[0]
        if self.k == 0:
            raise ValueError("the zero code has no nonzero codewords")
        k_low = 0
        while k_low < self.k and self.q ** (k_low + 1) <= LOW_TABLE_LIMIT:
            k_low += 1
        self.k_low = k_low
        self.k_high = self.k - k_low
        self.G_high = G[: self.k_high]
        self.low = self._span(G[self.k_high :])

    def _span(self, rows: np.ndarray) -> np.ndarray:
        """All q^len(rows) combinations; row index is the base-q message, last row fastest."""
        add, mul = self.tables["add"], self.tables["mul"]
        L = np.zeros((1, self.n), dtype=add.dtype)
        for row in rows:
            scaled = mul[np.arange(self.q)[:, None], row[None, :]]  # (q, n)
            L = add[L[:, None, :], scaled[None, :, :]].reshape(-1, self.n)
        return L

    def high_messages(self) -> int:
        q, kh = self.q, self.k_high
        return (q**kh - 1) // (q - 1) if kh else 0

    def _normalised(self, start: int, stop: int) -> np.ndarray:
        """Normalised high messages with enumeration indices in [start, stop)."""
        q, kh = self.q, self.k_high
        out = []
        idx = 0
        # Leading 1 at position lead; earlier coordinates zero; later free.
        for lead in range(kh):
            free = kh - lead - 1
            block = q**free
            lo, hi = max(start - idx, 0), min(stop - idx, block)
            if lo < hi:
                t = np.arange(lo, hi)
                msg = np.zeros((hi - lo, kh), dtype=np.int64)
                msg[:, lead] = 1
                for j in range(free):
                    msg[:, kh - 1 - j] = (t // q**j) % q
                out.append(msg)
            idx += block
        if not out:
            return np.zeros((0, kh), dtype=np.int64)
        return np.concatenate(out)

    def _encode_high(self, msgs: np.ndarray) -> np.ndarray:
        add, mul = self.tables["add"], self.tables["mul"]
        H = np.zeros((msgs.shape[0], self.n), dtype=add.dtype)
        for i in range(self.k_high):
            H = add[H, mul[msgs[:, i][:, None], self.G_high[i][None, :]]]
        return H

    def _batch(self) -> int:
        return max(1, BLOCK_ELEMENTS // (self.low.shape[0] * self.n))

    def min_chunk(self, start: int, stop: int) -> tuple[int, int, np.ndarray | None]:
        """Best (weight, global index, codeword) over high messages [start, stop)."""
        neg = self.tables["neg"]
        best_w, best_idx, best_word = self.n + 1, -1, None
        nlow = self.low.shape[0]
        step = self._batch()
        for s in range(start, stop, step):
            e = min(stop, s + step)
            H = self._encode_high(self._normalised(s, e))
            negH = neg[H]
            W = np.count_nonzero(self.low[None, :, :] != negH[:, None, :], axis=2)
            flat = int(np.argmin(W))
            w = int(W.flat[flat])
            if w < best_w:
                i, j = divmod(flat, nlow)
                best_w = w
                best_idx = (s + i) * nlow + j
                best_word = self.tables["add"][H[i], self.low[j]]
        return best_w, best_idx, best_word

    def hist_chunk(self, start: int, stop: int) -> np.ndarray:
        neg = self.tables["neg"]
        hist = np.zeros(self.n + 1, dtype=np.int64)
        step = self._batch()
        for s in range(start, stop, step):
            e = min(stop, s + step)
            negH = neg[self._encode_high(self._normalised(s, e))]
            W = np.count_nonzero(self.low[None, :, :] != negH[:, None, :], axis=2)
            hist += np.bincount(W.ravel(), minlength=self.n + 1)
        return hist


def _chunks(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total)) if total else 1
    bounds = [total * i // parts for i in range(parts + 1)]
    return [(bounds[i], bounds[i + 1]) for i in range(parts)]


def _run(fn, ranges, workers):
    if workers <= 1 or len(ranges) == 1:
        return [fn(a, b) for a, b in ranges]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda ab: fn(*ab), ranges))


def min_distance_exhaustive(
    code: CyclicCode | LinearCode,
    budget: int = DEFAULT_BUDGET,
    chunks: int = 1,
    workers: int | None = None,
) -> DistanceResult:
    """Minimum Hamming weight over all nonzero codewords.

    ``budget`` caps the number of evaluated codewords; when it is hit the
    smallest weight seen so far is returned with ``exact=False``.
    """
    K = _Kernel(code)
    workers = workers or os.cpu_count() or 1
    nlow = K.low.shape[0]

    # codewords with zero high part: the low table minus its zero row
    low_w = np.count_nonzero(K.low[1:], axis=1)
    j = int(np.argmin(low_w))
    best = (int(low_w[j]), -1, K.low[1 + j]) if nlow > 1 else (K.n + 1, -1, None)
    evaluated = nlow - 1

    total = K.high_messages()
    allowed = total
    if evaluated + total * nlow > budget:
        allowed = max(0, (budget - evaluated) // nlow)
    results = _run(K.min_chunk, _chunks(allowed, chunks), workers) if allowed else []
    for w, idx, word in results:
        if word is not None and (w, idx) < best[:2]:
            best = (w, idx, word)
    evaluated += allowed * nlow
    return DistanceResult(best[0], tuple(int(x) for x in best[2]), allowed == total, evaluated)


def weight_distribution(
    code: CyclicCode | LinearCode,
    limit: int = 10**7,
    chunks: int = 1,
    workers: int | None = None,
) -> dict[int, int]:
    """Full weight spectrum ``{weight: count}``, including the zero word."""
    q, k = code.spec.order, len(code.generator_matrix())
    if q**k > limit:
        raise ValueError(f"q^k = {q**k} exceeds the enumeration limit {limit}")
    if k == 0:
        return {0: 1}
    K = _Kernel(code)
    workers = workers or os.cpu_count() or 1
    hist = np.bincount(np.count_nonzero(K.low, axis=1), minlength=K.n + 1).astype(np.int64)
    for h in _run(K.hist_chunk, _chunks(K.high_messages(), chunks), workers):
        hist += h * (q - 1)
    return {w: int(c) for w, c in enumerate(hist) if c}


def weight_distribution_naive(code: CyclicCode | LinearCode) -> dict[int, int]:
    """Message-by-message enumeration with scalar field arithmetic (reference path)."""
    F = code.spec
    G = code.generator_matrix()
    counts: Counter[int] = Counter()
    for msg in itertools.product(range(F.order), repeat=len(G)):
        word = [0] * code.n
        for u, row in zip(msg, G):
            if u:
                word = [F.add(a, F.mul(u, b)) for a, b in zip(word, row)]
        counts[sum(1 for a in word if a)] += 1
    return dict(sorted(counts.items()))
