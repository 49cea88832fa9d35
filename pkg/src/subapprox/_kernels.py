"""Exhaustive subset-lattice kernels.

Every kernel works on an integer table indexed by subset mask (a set function
lifted to a common denominator). Two implementations exist for each one:

* a numba ``@njit`` version over ``int64`` arrays, and
* a pure-numpy version that accepts ``int64`` *or* ``object`` arrays of Python
  ints, so it stays exact for arbitrarily large values.

The numba path is used only when numba is importable, the environment variable
``SUBAPPROX_DISABLE_JIT`` is unset (or ``0``), and the inputs are small enough
that no intermediate can overflow ``int64``. Otherwise the numpy path runs.
Both paths return identical results; ``tests/test_kernels.py`` checks this.
"""

import os
from fractions import Fraction

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dependency in practice
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda fn: fn


_INT64_SAFE = 1 << 62
_RATIO_SAFE = 1 << 31

_backend = "numpy"
if HAVE_NUMBA and os.environ.get("SUBAPPROX_DISABLE_JIT", "0") in ("", "0"):
    _backend = "numba"


def get_backend():
    return _backend


def set_backend(name):
    """Select ``"numba"`` or ``"numpy"``; returns the previous backend."""
    global _backend
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba is not installed")
    previous, _backend = _backend, name
    return previous


def _max_abs(a):
    if a.size == 0:
        return 0
    if a.dtype == object:
        return max(abs(int(x)) for x in a.flat)
    return max(abs(int(a.max())), abs(int(a.min())))


def _jit_ok(bound, *arrays):
    """True when the numba path is selected and every |value| * bound fits."""
    if _backend != "numba":
        return False
    return all(_max_abs(a) * bound < _INT64_SAFE for a in arrays)


def _as_int64(a):
    return np.asarray(a, dtype=np.int64)


def as_exact(a):
    """Return ``a`` as an int64 array when it fits, else as an object array."""
    a = np.asarray(a)
    if a.dtype != object:
        return a.astype(np.int64)
    if _max_abs(a) < _INT64_SAFE:
        return a.astype(np.int64)
    return a


def _all_masks(n):
    return np.arange(1 << n, dtype=np.int64)


# --------------------------------------------------------------------------
# numba kernels


@njit(cache=True, nogil=True)
def _zeta_nb(a, n):
    for i in range(n):
        bit = 1 << i
        for m in range(1 << n):
            if m & bit:
                a[m] += a[m ^ bit]
    return a


@njit(cache=True, nogil=True)
def _mobius_nb(a, n):
    for i in range(n):
        bit = 1 << i
        for m in range(1 << n):
            if m & bit:
                a[m] -= a[m ^ bit]
    return a


@njit(cache=True, nogil=True)
def _modular_nb(w, n):
    out = np.zeros(1 << n, dtype=np.int64)
    for m in range(1, 1 << n):
        low = m & -m
        i = 0
        while (1 << i) != low:
            i += 1
        out[m] = out[m ^ low] + w[i]
    return out


@njit(cache=True, nogil=True)
def _directed_cut_nb(W, n):
    out = np.zeros(1 << n, dtype=np.int64)
    for m in range(1 << n):
        total = 0
        for u in range(n):
            if (m >> u) & 1:
                for v in range(n):
                    if not (m >> v) & 1:
                        total += W[u, v]
        out[m] = total
    return out


@njit(cache=True, nogil=True)
def _submodular_witness_nb(t, n):
    for s in range(1 << n):
        for i in range(n):
            bi = 1 << i
            if s & bi:
                continue
            for j in range(i + 1, n):
                bj = 1 << j
                if s & bj:
                    continue
                if t[s | bi] + t[s | bj] < t[s | bi | bj] + t[s]:
                    return s, i, j
    return -1, -1, -1


@njit(cache=True, nogil=True)
def _monotone_witness_nb(t, n):
    for s in range(1 << n):
        for i in range(n):
            bi = 1 << i
            if not s & bi and t[s | bi] < t[s]:
                return s, i
    return -1, -1


@njit(cache=True, nogil=True)
def _symmetric_witness_nb(t, n):
    full = (1 << n) - 1
    for s in range(1 << n):
        if t[s] != t[full ^ s]:
            return s
    return -1


@njit(cache=True, nogil=True)
def _min_separating_nb(t, n, u, v):
    bu = 1 << u
    bv = 1 << v
    best = -1
    for s in range(1 << n):
        if s & bu and not s & bv:
            if best < 0 or t[s] < t[best]:
                best = s
    return best


@njit(cache=True, nogil=True)
def _sandwich_nb(F, G, n):
    lower_violation = -1
    best = -1
    conflicts = np.zeros(1 << n, dtype=np.bool_)
    for s in range(1 << n):
        f = F[s]
        g = G[s]
        if lower_violation < 0 and f > g:
            lower_violation = s
        if f == 0:
            if g > 0:
                conflicts[s] = True
        elif best < 0 or g * F[best] > G[best] * f:
            best = s
    return lower_violation, best, conflicts


# --------------------------------------------------------------------------
# numpy twins (int64 or object dtype)


def _zeta_np(a, n):
    for i in range(n):
        view = a.reshape(-1, 2, 1 << i)
        view[:, 1, :] += view[:, 0, :]
    return a


def _mobius_np(a, n):
    for i in range(n):
        view = a.reshape(-1, 2, 1 << i)
        view[:, 1, :] -= view[:, 0, :]
    return a


def _modular_np(w, n):
    out = np.zeros(1, dtype=w.dtype)
    for i in range(n):
        out = np.concatenate([out, out + w[i]])
    return out


def _membership(n, dtype):
    masks = _all_masks(n)
    return ((masks[:, None] >> np.arange(n)) & 1).astype(dtype)


def _directed_cut_np(W, n):
    M = _membership(n, W.dtype)
    return ((M @ W) * (1 - M)).sum(axis=1)


def _submodular_witness_np(t, n):
    masks = _all_masks(n)
    best = None
    for i in range(n):
        bi = 1 << i
        for j in range(i + 1, n):
            bj = 1 << j
            s = masks[(masks & (bi | bj)) == 0]
            bad = t[s | bi] + t[s | bj] < t[s | bi | bj] + t[s]
            hits = np.flatnonzero(bad)
            if hits.size:
                cand = (int(s[hits[0]]), i, j)
                if best is None or cand < best:
                    best = cand
    return best if best is not None else (-1, -1, -1)


def _monotone_witness_np(t, n):
    masks = _all_masks(n)
    best = None
    for i in range(n):
        bi = 1 << i
        s = masks[(masks & bi) == 0]
        hits = np.flatnonzero(t[s | bi] < t[s])
        if hits.size:
            cand = (int(s[hits[0]]), i)
            if best is None or cand < best:
                best = cand
    return best if best is not None else (-1, -1)


def _symmetric_witness_np(t, n):
    # the complement of mask m is (2^n - 1) - m, i.e. the reversed index
    hits = np.flatnonzero(t != t[::-1])
    return int(hits[0]) if hits.size else -1


def _min_separating_np(t, n, u, v):
    masks = _all_masks(n)
    s = masks[((masks >> u) & 1 == 1) & ((masks >> v) & 1 == 0)]
    vals = t[s]
    lowest = vals.min()
    return int(s[np.flatnonzero(vals == lowest)[0]])


def _sandwich_np(F, G, n):
    lower = np.flatnonzero(F > G)
    conflicts = (F == 0) & (G > 0)
    positive = np.flatnonzero(F != 0)
    best = -1
    if positive.size:
        ratios = np.frompyfunc(Fraction, 2, 1)(G[positive].astype(object), F[positive].astype(object))
        top = max(ratios)
        best = int(positive[np.flatnonzero(ratios == top)[0]])
    return (int(lower[0]) if lower.size else -1), best, np.asarray(conflicts, dtype=bool)


# --------------------------------------------------------------------------
# dispatch


def zeta(a, n):
    """Subset-sum transform: out[T] = sum of a[W] over W subset of T."""
    a = as_exact(a)
    if _jit_ok(1 << n, a):
        return _zeta_nb(_as_int64(a).copy(), n)
    return _zeta_np(a.copy(), n)


def mobius(a, n):
    """Inverse of :func:`zeta`: out[T] = sum of (-1)^|T\\W| a[W] over W subset of T."""
    a = as_exact(a)
    if _jit_ok(1 << n, a):
        return _mobius_nb(_as_int64(a).copy(), n)
    return _mobius_np(a.copy(), n)


def modular_table(w, n):
    """Table of sum_{i in S} w[i] for every mask S."""
    w = as_exact(w)
    if _jit_ok(max(n, 1), w):
        return _modular_nb(_as_int64(w), n)
    return _modular_np(w, n)


def directed_cut_table(W, n):
    """Table of sum of W[u, v] over u in S, v not in S."""
    W = as_exact(W)
    if _jit_ok(max(n * n, 1), W):
        return _directed_cut_nb(_as_int64(W), n)
    return _directed_cut_np(W, n)


def submodular_witness(t, n):
    """First (S, i, j) in scan order violating the local submodularity condition."""
    t = as_exact(t)
    if _jit_ok(4, t):
        s, i, j = _submodular_witness_nb(_as_int64(t), n)
        return int(s), int(i), int(j)
    return _submodular_witness_np(t, n)


def monotone_witness(t, n):
    t = as_exact(t)
    if _jit_ok(1, t):
        s, i = _monotone_witness_nb(_as_int64(t), n)
        return int(s), int(i)
    return _monotone_witness_np(t, n)


def symmetric_witness(t, n):
    t = as_exact(t)
    if _jit_ok(1, t):
        return int(_symmetric_witness_nb(_as_int64(t), n))
    return _symmetric_witness_np(t, n)


def min_separating(t, n, u, v):
    """Smallest mask among the minimizers of t over sets containing u and not v."""
    t = as_exact(t)
    if _jit_ok(1, t):
        return int(_min_separating_nb(_as_int64(t), n, u, v))
    return _min_separating_np(t, n, u, v)


def sandwich_scan(F, G, n):
    """Scan two tables sharing a denominator.

    Returns ``(lower_violation, argmax, conflicts)``: the first mask with
    F > G (or -1), the first mask maximizing G/F over F > 0 (or -1), and a
    boolean array marking masks with F == 0 < G.
    """
    F = as_exact(F)
    G = as_exact(G)
    if _backend == "numba" and _max_abs(F) < _RATIO_SAFE and _max_abs(G) < _RATIO_SAFE:
        low, best, conflicts = _sandwich_nb(_as_int64(F), _as_int64(G), n)
        return int(low), int(best), conflicts
    return _sandwich_np(F, G, n)


def warm_up():
    """Compile every numba kernel once on a tiny input."""
    if not HAVE_NUMBA:
        return
    t = np.arange(8, dtype=np.int64)
    _zeta_nb(t.copy(), 3)
    _mobius_nb(t.copy(), 3)
    _modular_nb(np.ones(3, dtype=np.int64), 3)
    _directed_cut_nb(np.ones((3, 3), dtype=np.int64), 3)
    _submodular_witness_nb(t, 3)
    _monotone_witness_nb(t, 3)
    _symmetric_witness_nb(t, 3)
    _min_separating_nb(t, 3, 0, 1)
    _sandwich_nb(t, t, 3)
