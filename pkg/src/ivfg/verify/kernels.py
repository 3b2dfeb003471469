"""Row-wise predicates over enumeration batches.

Degree pairs are packed into one integer per vertex, ``lo * M + hi`` with
``M`` above any upper sum, so pair equality is a single comparison.
Every function mirrors a predicate in :mod:`ivfg.classify`; the suite
cross-checks the two on every row it hands to the scalar oracles.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

__all__ = [
    "pack",
    "handshake_ok",
    "all_equal",
    "all_distinct",
    "neighbourly",
    "highly",
    "hypothesis_mask",
]


def pack(lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    m = int(hi.max(initial=0)) + 1
    return lo.astype(np.int64) * m + hi


def handshake_ok(batch, lo: np.ndarray, hi: np.ndarray) -> bool:
    return bool(
        np.array_equal(lo.sum(axis=1), 2 * batch.edge_lo.sum(axis=1))
        and np.array_equal(hi.sum(axis=1), 2 * batch.edge_hi.sum(axis=1))
    )


def all_equal(code: np.ndarray) -> np.ndarray:
    return (code == code[:, :1]).all(axis=1)


def all_distinct(code: np.ndarray) -> np.ndarray:
    ok = np.ones(code.shape[0], dtype=bool)
    for i, j in combinations(range(code.shape[1]), 2):
        ok &= code[:, i] != code[:, j]
    return ok


def _columns(a: np.ndarray) -> np.ndarray:
    return np.ascontiguousarray(a.T)


def neighbourly(code: np.ndarray, present: np.ndarray, pairs) -> np.ndarray:
    """No present edge joins equal codes."""
    code, present = _columns(code), _columns(present)
    ok = np.ones(code.shape[1], dtype=bool)
    for p, (i, j) in enumerate(pairs):
        ok &= ~present[p] | (code[i] != code[j])
    return ok


def highly(code: np.ndarray, present: np.ndarray, pairs, n: int, strict: bool = False) -> np.ndarray:
    """Per row: every vertex with two or more neighbours sees at least two
    distinct neighbour codes (``strict``: pairwise distinct codes)."""
    rows = code.shape[0]
    code, present = _columns(code), _columns(present)
    incident = [[] for _ in range(n)]
    for p, (i, j) in enumerate(pairs):
        incident[i].append((p, j))
        incident[j].append((p, i))
    ok = np.ones(rows, dtype=bool)
    for v in range(n):
        inc = incident[v]
        if len(inc) < 2:
            continue
        if strict:
            for (p1, w1), (p2, w2) in combinations(inc, 2):
                ok &= ~(present[p1] & present[p2] & (code[w1] == code[w2]))
            continue
        big = np.iinfo(np.int64).max
        lo = np.full(rows, big, dtype=np.int64)
        hi = np.full(rows, -1, dtype=np.int64)
        count = np.zeros(rows, dtype=np.int32)
        for p, w in inc:
            e = present[p]
            np.minimum(lo, code[w], out=lo, where=e)
            np.maximum(hi, code[w], out=hi, where=e)
            count += e
        ok &= ~((count >= 2) & (lo == hi))
    return ok


def hypothesis_mask(tid: str, batch, lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    """Rows of a prefix batch meeting theorem ``tid``'s hypothesis, matching
    the ``skipped`` branches of the scalar checks."""
    code = pack(lo, hi)
    if tid == "2":
        return all_equal(code)
    if tid == "3":
        vlo = np.array([mu.lo for mu in batch.vertex_mu], dtype=np.int64)
        vhi = np.array([mu.hi for mu in batch.vertex_mu], dtype=np.int64)
        return all_equal(pack(lo + vlo, hi + vhi))
    if tid == "4":
        return batch.connected() & all_distinct(code)
    if tid == "5":
        if len(set(batch.vertex_mu)) > 1:
            return np.zeros(batch.rows, dtype=bool)
        return neighbourly(code, batch.present, batch.pairs)
    raise ValueError(f"no batch hypothesis for theorem {tid!r}")
