"""Per-sample kernels for the Monte Carlo estimators.

Every kernel takes a block of permutations (one per row, canonical player
indices) and returns integer counts, so the two backends are interchangeable
bit for bit:

* ``numba``: compiled row loops (default when numba imports).
* ``numpy``: vectorised over the rows of the block.

``SSPOWER_BACKEND=numpy`` in the environment forces the fallback.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

BACKENDS = ("numba", "numpy")


def default_backend() -> str:
    requested = os.environ.get("SSPOWER_BACKEND", "").strip().lower()
    if requested == "numpy" or numba is None:
        return "numpy"
    if requested in ("", "numba"):
        return "numba"
    raise ValueError(f"SSPOWER_BACKEND must be one of {BACKENDS}, got {requested!r}")


def _njit(func):
    if numba is None:  # pragma: no cover
        return func
    return numba.njit(cache=True, nogil=True)(func)


# -- numpy --------------------------------------------------------------------


def _np_pivots(perms, weights, quota):
    rows = np.arange(perms.shape[0])
    prefix = np.cumsum(weights[perms], axis=1)
    where = np.argmax(prefix >= quota, axis=1)
    piv = perms[rows, where]
    before = prefix[rows, where] - weights[piv]
    return piv, where, before


def pivot_counts_numpy(perms, weights, quota):
    piv, _, _ = _np_pivots(perms, weights, quota)
    return np.bincount(piv, minlength=weights.shape[0]).astype(np.int64)


def originator_counts_numpy(perms, weights, quota):
    n = weights.shape[0]
    rows = np.arange(perms.shape[0])
    ell, a, acc = _np_pivots(perms, weights, quota)
    where = np.empty_like(perms)
    where[rows[:, None], perms] = np.arange(n)
    active = ell < n - 1
    while active.any():
        idx = rows[active]
        cur, nxt = ell[idx], ell[idx] + 1
        after = where[idx, nxt] > a[idx]
        s = acc[idx]
        moved = s + weights[cur] - weights[nxt]
        ok = np.where(after, s + weights[nxt] >= quota, moved < quota)
        acc[idx] = np.where(ok & ~after, moved, s)
        ell[idx] = np.where(ok, nxt, cur)
        active[idx] = ok & (nxt < n - 1)
    return np.bincount(ell, minlength=n).astype(np.int64)


# -- numba --------------------------------------------------------------------


@_njit
def pivot_counts_numba(perms, weights, quota):
    n = weights.shape[0]
    counts = np.zeros(n, dtype=np.int64)
    for r in range(perms.shape[0]):
        acc = 0
        for pos in range(n):
            p = perms[r, pos]
            acc += weights[p]
            if acc >= quota:
                counts[p] += 1
                break
    return counts


@_njit
def originator_counts_numba(perms, weights, quota):
    n = weights.shape[0]
    counts = np.zeros(n, dtype=np.int64)
    where = np.empty(n, dtype=np.int64)
    for r in range(perms.shape[0]):
        acc = 0
        a = 0
        ell = 0
        for pos in range(n):
            p = perms[r, pos]
            where[p] = pos
            if acc + weights[p] >= quota:
                a = pos
                ell = p
                for rest in range(pos + 1, n):
                    where[perms[r, rest]] = rest
                break
            acc += weights[p]
        while ell < n - 1:
            nxt = ell + 1
            if where[nxt] > a:
                if acc + weights[nxt] < quota:
                    break
            else:
                moved = acc + weights[ell] - weights[nxt]
                if moved >= quota:
                    break
                acc = moved
            ell = nxt
        counts[ell] += 1
    return counts


_KERNELS = {
    ("pivot", "numpy"): pivot_counts_numpy,
    ("originator", "numpy"): originator_counts_numpy,
    ("pivot", "numba"): pivot_counts_numba,
    ("originator", "numba"): originator_counts_numba,
}


def get_kernel(kind: str, backend: str | None = None):
    backend = backend or default_backend()
    if backend == "numba" and numba is None:  # pragma: no cover
        raise RuntimeError("numba backend requested but numba is not installed")
    try:
        return _KERNELS[kind, backend]
    except KeyError:
        raise ValueError(f"no {kind!r} kernel for backend {backend!r}") from None


def pivot_counts(perms, weights, quota, backend=None):
    return get_kernel("pivot", backend)(perms, weights, np.int64(quota))


def originator_counts(perms, weights, quota, backend=None):
    return get_kernel("originator", backend)(perms, weights, np.int64(quota))
