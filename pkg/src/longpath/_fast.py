"""Accelerated kernels for the enumeration and sweep hot loops.

The canonical-labeling backtracker and the subset DP are compiled with
numba when available; the pure-Python equivalents in ``graphs`` and
``longest_path`` remain the reference implementations and the fallback.
Encodings fit in int64 for n <= 11, which covers everything the internal
generator and the sweeps ever touch; larger orders fall back to Python.

All scratch arrays live in per-process module state: one worker process
owns one arena, matching the single-threaded-engine concurrency model.
"""
from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        if args and callable(args[0]):
            return args[0]
        return wrap


FAST_MAX_N = 11  # int64 holds n*(n-1)/2 encoding bits up to here


@njit(cache=True)
def _canon_kernel(n, adj, rows, cand_b, cand_v, cand_cnt, cand_idx, encs, used):
    total = n * (n - 1) // 2
    best = np.int64(-1)
    tail = np.int64(0)
    for u in range(n):
        rows[0, u] = 0
        cand_b[0, u] = 0
        cand_v[0, u] = u
    used[0] = 0
    encs[0] = 0
    cand_cnt[0] = n
    cand_idx[0] = 0
    depth = 0
    while depth >= 0:
        if cand_idx[depth] >= cand_cnt[depth]:
            depth -= 1
            continue
        ii = cand_idx[depth]
        cand_idx[depth] += 1
        b = cand_b[depth, ii]
        v = cand_v[depth, ii]
        enc2 = (encs[depth] << depth) | b
        nb2 = depth * (depth + 1) // 2
        if best >= 0 and enc2 < best >> (total - nb2):
            cand_idx[depth] = cand_cnt[depth]  # sorted: the rest are worse
            continue
        if depth == n - 1:
            if enc2 > best:
                best = enc2
                tail = np.int64(1) << v
            elif enc2 == best:
                tail |= np.int64(1) << v
            continue
        nd = depth + 1
        av = adj[v]
        u2 = used[depth] | (np.int64(1) << v)
        used[nd] = u2
        encs[nd] = enc2
        cnt = 0
        for u in range(n):
            rows[nd, u] = (rows[depth, u] << 1) | ((av >> u) & 1)
            if not (u2 >> u) & 1:
                bb = rows[nd, u]
                pos = cnt
                while pos > 0 and cand_b[nd, pos - 1] < bb:
                    cand_b[nd, pos] = cand_b[nd, pos - 1]
                    cand_v[nd, pos] = cand_v[nd, pos - 1]
                    pos -= 1
                cand_b[nd, pos] = bb
                cand_v[nd, pos] = u
                cnt += 1
        cand_cnt[nd] = cnt
        cand_idx[nd] = 0
        depth = nd
    return best, tail


@njit(cache=True)
def _scan_kernel(n, adj, end, sets_out):
    """Fill sets_out with all maximum-size endpoint-bearing subsets.

    Returns the number of such subsets, or 0 when the graph is traceable
    (the full set is then the unique maximum).  ``end`` entries are always
    written before being read, so the scratch needs no clearing.
    """
    full = (np.int64(1) << n) - 1
    for v in range(n):
        end[np.int64(1) << v] = np.int64(1) << v
    best = 1
    cnt = 0
    for s in range(3, full + 1):
        if s & (s - 1) == 0:
            continue
        e = np.int64(0)
        t = np.int64(s)
        while t:
            b = t & -t
            t ^= b
            v = 0
            bb = b
            while bb > 1:
                bb >>= 1
                v += 1
            if end[s ^ b] & adj[v]:
                e |= b
        end[s] = e
        if e:
            c = 0
            ss = s
            while ss:
                ss &= ss - 1
                c += 1
            if c > best:
                best = c
                cnt = 0
                sets_out[cnt] = s
                cnt = 1
            elif c == best:
                if cnt < sets_out.shape[0]:
                    sets_out[cnt] = s
                cnt += 1
    if best == n or cnt < 2:
        return 0
    return cnt


class _Arena:
    """Per-process scratch for the compiled kernels."""

    def __init__(self) -> None:
        m = FAST_MAX_N
        self.adj = np.zeros(m, dtype=np.int64)
        self.rows = np.zeros((m + 1, m), dtype=np.int64)
        self.cand_b = np.zeros((m + 1, m), dtype=np.int64)
        self.cand_v = np.zeros((m + 1, m), dtype=np.int64)
        self.cand_cnt = np.zeros(m + 1, dtype=np.int64)
        self.cand_idx = np.zeros(m + 1, dtype=np.int64)
        self.encs = np.zeros(m + 1, dtype=np.int64)
        self.used = np.zeros(m + 1, dtype=np.int64)
        self.end = np.zeros(1 << m, dtype=np.int64)
        self.sets = np.zeros(1024, dtype=np.int64)


_arena: _Arena | None = None


def _get_arena() -> _Arena:
    global _arena
    if _arena is None:
        _arena = _Arena()
    return _arena


def canon_enc_tail(n: int, adj) -> tuple[int, int]:
    """Canonical encoding and canonical-deletion orbit; see graphs module."""
    if not HAVE_NUMBA or n > FAST_MAX_N:
        from .graphs import _canonical_enc_tail

        return _canonical_enc_tail(n, adj)
    if n == 1:
        return 0, 1
    a = _get_arena()
    for v in range(n):
        a.adj[v] = adj[v]
    enc, tail = _canon_kernel(
        n, a.adj, a.rows, a.cand_b, a.cand_v, a.cand_cnt, a.cand_idx, a.encs, a.used
    )
    return int(enc), int(tail)


def scan_distinct_sets(n: int, adj) -> list[int] | None:
    """Longest-path vertex sets when at least two exist, else None."""
    if not HAVE_NUMBA or n > FAST_MAX_N:
        return _scan_python(n, adj)
    a = _get_arena()
    for v in range(n):
        a.adj[v] = adj[v]
    cnt = _scan_kernel(n, a.adj, a.end, a.sets)
    if cnt == 0:
        return None
    if cnt > a.sets.shape[0]:  # cannot happen for n <= 11; C(11, 5) < 1024
        raise RuntimeError("longest-path set family overflowed the scratch arena")
    return [int(a.sets[i]) for i in range(cnt)]


def _scan_python(n: int, adj) -> list[int] | None:
    end = [0] * (1 << n)
    full = (1 << n) - 1
    for v in range(n):
        end[1 << v] = 1 << v
    best = 1
    sets: list[int] = []
    for s in range(3, full + 1):
        if not s & (s - 1):
            continue
        e = 0
        t = s
        while t:
            b = t & -t
            t ^= b
            if end[s ^ b] & adj[b.bit_length() - 1]:
                e |= b
        end[s] = e
        if e:
            c = s.bit_count()
            if c > best:
                best = c
                sets = [s]
            elif c == best:
                sets.append(s)
    if best == n or len(sets) < 2:
        return None
    return sets
