"""Code invariants: degree, free distance, Singleton bound and block distance."""

from __future__ import annotations

import heapq
import itertools
import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from cgoppa.errors import CodeError, InconsistencyError, NotCanonicalError, RankDeficientError
from cgoppa.galois import FieldSpec
from cgoppa.goppa import CodeSpec, generator_matrix
from cgoppa.polymat import (
    ConstMatrix,
    PolyMatrix,
    basicize,
    const_rank,
    is_basic,
    is_reduced,
    rank_rational,
    reduce_rows,
    row_degrees,
)
from cgoppa.polyring import Poly

__all__ = [
    "CodeReport",
    "BruteForceResult",
    "codeword_weight",
    "external_degree",
    "singleton_bound",
    "free_distance_search",
    "free_distance_bruteforce",
    "bruteforce_horizon",
    "block_min_distance",
    "analyze",
    "analyze_matrix",
]

log = logging.getLogger(__name__)

#: Largest message count q^(k(D+1)) the brute-force cross-check will enumerate.
BRUTE_FORCE_BUDGET = 10**7

# Cap on elements materialized per enumeration chunk.
_CHUNK_ELEMENTS = 1 << 24


@dataclass(frozen=True)
class CodeReport:
    n: int
    k: int
    delta: int
    d_free: int
    singleton_bound: int
    is_reduced: bool
    is_basic: bool
    is_canonical: bool
    is_mds: bool
    generator_matrix: PolyMatrix

    @property
    def rate(self) -> Fraction:
        return Fraction(self.k, self.n)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "delta": self.delta,
            "d_free": self.d_free,
            "singleton_bound": self.singleton_bound,
            "is_reduced": self.is_reduced,
            "is_basic": self.is_basic,
            "is_canonical": self.is_canonical,
            "is_mds": self.is_mds,
            "generator_matrix": self.generator_matrix.to_text(),
        }


class BruteForceResult(NamedTuple):
    distance: int
    stable: bool  # same value at horizon D - 1


def codeword_weight(c: Sequence[Poly]) -> int:
    """Number of nonzero coefficients over all components."""
    return sum(sum(1 for x in p.raw if x) for p in c)


def external_degree(G: PolyMatrix) -> int:
    """Sum of the row degrees of a reduced matrix."""
    if not is_reduced(G):
        raise NotCanonicalError("row degrees overestimate the degree of a non-reduced matrix; reduce it first")
    return sum(row_degrees(G))


def singleton_bound(n: int, k: int, delta: int) -> int:
    """Generalized Singleton bound ``(n-k)(floor(delta/k)+1) + delta + 1``.

    The bound for convolutional codes of rate k/n and degree delta is due to
    Rosenthal and Smarandache (1999); codes meeting it are MDS.
    """
    if not 1 <= k <= n:
        raise CodeError(f"need 1 <= k <= n, got k={k}, n={n}")
    if delta < 0:
        raise CodeError(f"degree must be non-negative, got {delta}")
    return (n - k) * (delta // k + 1) + delta + 1


def _require_canonical(G: PolyMatrix) -> None:
    if G.k > G.n or rank_rational(G) < G.k:
        raise RankDeficientError(f"{G.k} x {G.n} matrix does not have full row rank")
    if not is_reduced(G):
        raise NotCanonicalError("free distance search needs a reduced matrix")
    if not is_basic(G):
        raise NotCanonicalError("free distance search needs a basic (non-catastrophic) matrix")


def free_distance_search(G: PolyMatrix) -> int:
    """Free distance by a lowest-cost-first search on the encoder trellis.

    The state holds the last ``nu_i`` input symbols of every row i, so there
    are ``q^delta`` states.  An edge emits one n-symbol output block whose
    Hamming weight is its cost.  Starting from the zero state with a nonzero
    input, the first return to the zero state closes the lightest codeword.
    Ties are broken by (cost, path length, state index).
    """
    _require_canonical(G)
    F = G.field
    q, k, n = F.q, G.k, G.n
    nus = row_degrees(G)
    delta = sum(nus)
    # taps[i][l][j]: coefficient of z^l in G[i, j]
    taps = [[[G[i, j].coeff(l) for j in range(n)] for l in range(nus[i] + 1)] for i in range(k)]
    # flat memory layout: row 0 (lag 1..nu_0), row 1 (lag 1..nu_1), ...
    slots = [(i, l) for i in range(k) for l in range(1, nus[i] + 1)]
    first_slot = list(itertools.accumulate([0] + nus[:-1]))
    weights = [q ** (delta - 1 - p) for p in range(delta)]

    def scaled(vec, x):
        return [F.mul(x, v) for v in vec]

    def add_vec(a, b):
        return [F.add(x, y) for x, y in zip(a, b)]

    zero_vec = [0] * n
    states = list(itertools.product(range(q), repeat=delta))
    state_out = []
    for st in states:
        acc = zero_vec
        for (i, l), sym in zip(slots, st):
            if sym:
                acc = add_vec(acc, scaled(taps[i][l], sym))
        state_out.append(acc)
    inputs = list(itertools.product(range(q), repeat=k))
    input_out = []
    for x in inputs:
        acc = zero_vec
        for i, sym in enumerate(x):
            if sym:
                acc = add_vec(acc, scaled(taps[i][0], sym))
        input_out.append(acc)

    def successor(st: tuple, x: tuple) -> int:
        nxt = list(st)
        for i in range(k):
            if nus[i]:
                base = first_slot[i]
                nxt[base + 1 : base + nus[i]] = st[base : base + nus[i] - 1]
                nxt[base] = x[i]
        return sum(w * s for w, s in zip(weights, nxt))

    def cost(si: int, xi: int) -> int:
        return sum(1 for a, b in zip(state_out[si], input_out[xi]) if F.add(a, b))

    best: dict[int, tuple[int, int]] = {}
    heap: list[tuple[int, int, int]] = []
    for xi, x in enumerate(inputs):
        if any(x):
            nxt = successor(states[0], x)
            entry = (cost(0, xi), 1, nxt)
            if nxt not in best or entry[:2] < best[nxt]:
                best[nxt] = entry[:2]
                heapq.heappush(heap, entry)
    done = set()
    while heap:
        c, length, si = heapq.heappop(heap)
        if si == 0:
            return c
        if si in done or (c, length) > best.get(si, (c, length)):
            continue
        done.add(si)
        st = states[si]
        for xi, x in enumerate(inputs):
            nxt = successor(st, x)
            if nxt in done and nxt != 0:
                continue
            entry = (c + cost(si, xi), length + 1, nxt)
            if nxt not in best or entry[:2] < best[nxt]:
                best[nxt] = entry[:2]
                heapq.heappush(heap, entry)
    raise InconsistencyError("trellis search never returned to the zero state")


# -- exhaustive enumeration -----------------------------------------------------


def _span(F: FieldSpec, basis: np.ndarray) -> np.ndarray:
    """All q^len(basis) combinations, the zero vector first."""
    add, mul, _ = F.np_tables()
    out = np.zeros((1, basis.shape[1]), dtype=np.uint8)
    for b in basis:
        parts = [out]
        for x in range(1, F.q):
            parts.append(add[out, mul[x, b][None, :]])
        out = np.concatenate(parts)
    return out


def _min_nonzero_weight(F: FieldSpec, basis: np.ndarray) -> int:
    """Minimum Hamming weight over nonzero combinations of independent rows."""
    K, N = basis.shape
    add, _, _ = F.np_tables()
    nonzero = (add != 0).ravel()
    half = K // 2
    left = _span(F, basis[:half]).astype(np.int32) * F.q
    right = _span(F, basis[half:]).astype(np.int32)
    best = N + 1
    chunk = max(1, _CHUNK_ELEMENTS // max(1, right.size))
    for start in range(0, left.shape[0], chunk):
        block = left[start : start + chunk]
        w = nonzero[block[:, None, :] + right[None, :, :]].sum(axis=2)
        if start == 0:
            w[0, 0] = N + 1
        best = min(best, int(w.min()))
    return best


def _codeword_basis(G: PolyMatrix, D: int) -> np.ndarray:
    nus = row_degrees(G)
    span_len = D + 1 + max(nus)
    rows = []
    for i in range(G.k):
        for shift in range(D + 1):
            v = np.zeros(G.n * span_len, dtype=np.uint8)
            for j in range(G.n):
                for l, c in enumerate(G[i, j].raw):
                    v[j * span_len + shift + l] = c
            rows.append(v)
    return np.array(rows, dtype=np.uint8)


def _bruteforce_at(G: PolyMatrix, D: int) -> int:
    return _min_nonzero_weight(G.field, _codeword_basis(G, D))


def free_distance_bruteforce(G: PolyMatrix, D: int) -> BruteForceResult:
    """Minimum weight over nonzero messages with every ``deg u_i <= D``.

    ``stable`` reports whether horizon ``D - 1`` gives the same value.
    """
    if D < 0:
        raise CodeError(f"horizon must be non-negative, got {D}")
    if G.k > G.n or rank_rational(G) < G.k:
        raise RankDeficientError(f"{G.k} x {G.n} matrix does not have full row rank")
    d = _bruteforce_at(G, D)
    stable = D > 0 and _bruteforce_at(G, D - 1) == d
    return BruteForceResult(d, stable)


def bruteforce_horizon(q: int, k: int, budget: int = BRUTE_FORCE_BUDGET) -> int:
    """Largest D with q^(k(D+1)) <= budget, or -1 if even D = 0 is too big."""
    D = -1
    while q ** (k * (D + 2)) <= budget:
        D += 1
    return D


def block_min_distance(C: ConstMatrix) -> int:
    """Minimum Hamming weight over the nonzero codewords of a block code."""
    k = len(C.rows)
    if const_rank(C) < k:
        raise RankDeficientError(f"{k} x {C.shape[1]} block generator matrix is rank deficient")
    return _min_nonzero_weight(C.field, np.array(C.rows, dtype=np.uint8))


# -- full report ----------------------------------------------------------------


def analyze_matrix(G: PolyMatrix, *, crosscheck: bool = True, budget: int = BRUTE_FORCE_BUDGET) -> CodeReport:
    """Classify ``G`` and compute the invariants of the code it generates.

    A non-canonical ``G`` is basicized and row-reduced before the distance
    search.  The search result is checked against brute-force enumeration at
    horizon ``delta + 3`` (lowered to fit ``budget``).
    """
    if G.k > G.n or rank_rational(G) < G.k:
        raise RankDeficientError(f"{G.k} x {G.n} generator matrix does not have full row rank")
    reduced, basic = is_reduced(G), is_basic(G)
    C = G if reduced and basic else reduce_rows(basicize(G))
    delta = external_degree(C)
    d = free_distance_search(C)
    if crosscheck:
        full = delta + 3
        D = min(full, bruteforce_horizon(G.field.q, G.k, budget))
        if D >= 0:
            bf = _bruteforce_at(C, D)
            # enumeration only ever over-estimates; a truncated horizon may not
            # have reached a lightest codeword yet
            if bf < d or (bf > d and D == full):
                raise InconsistencyError(
                    f"trellis search gives d_free={d} but enumeration to degree {D} gives {bf}"
                )
            if bf > d:
                log.warning("enumeration to degree %d (budget-capped) gives %d > d_free=%d", D, bf, d)
        else:
            log.warning("skipping brute-force cross-check: q^k exceeds the enumeration budget")
    bound = singleton_bound(G.n, G.k, delta)
    return CodeReport(
        n=G.n,
        k=G.k,
        delta=delta,
        d_free=d,
        singleton_bound=bound,
        is_reduced=reduced,
        is_basic=basic,
        is_canonical=reduced and basic,
        is_mds=d == bound,
        generator_matrix=C,
    )


def analyze(spec: CodeSpec, *, crosscheck: bool = True, budget: int = BRUTE_FORCE_BUDGET) -> CodeReport:
    return analyze_matrix(generator_matrix(spec), crosscheck=crosscheck, budget=budget)
