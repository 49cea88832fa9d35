"""Time the numba kernels against the pure-numpy fallback.

    python3 benchmarks/bench_kernels.py [--n 14] [--repeat 3]

Each row runs the same call under both backends, checks the results agree,
and reports the best wall time of ``--repeat`` runs. JIT compilation is done
before timing.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from subapprox import _kernels as K
from subapprox import construct, ensemble
from subapprox.core import HardInstance


def best_of(fn, repeat):
    times = []
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def _normalize(r):
    if isinstance(r, np.ndarray):
        return tuple(int(x) for x in r)
    if isinstance(r, tuple):
        return tuple(_normalize(x) for x in r)
    return r


def cases(n):
    rng = np.random.default_rng(0)
    table = rng.integers(0, 1000, size=1 << n).astype(np.int64)
    other = table + rng.integers(0, 50, size=1 << n)
    sym = ensemble.random_symmetric_submodular(1, min(n, 10))
    zero = ensemble.random_zero_boundary_submodular(2, min(n, 8))
    sym.table()
    zero.table()
    yield "zeta", lambda: K.zeta(table, n)
    yield "mobius", lambda: K.mobius(table, n)
    yield "submodular_witness (early exit)", lambda: K.submodular_witness(table, n)
    m = n // 2 * 2
    sub = HardInstance("general", m, (1 << (m // 2)) - 1).table().nums
    yield f"submodular_witness full n={m}", lambda: K.submodular_witness(sub, m)
    yield "monotone_witness", lambda: K.monotone_witness(table, n)
    yield "min_separating", lambda: K.min_separating(table, n, 0, n - 1)
    yield "sandwich_scan", lambda: K.sandwich_scan(table, other, n)
    yield f"directed_cut_approx n={zero.n}", lambda: construct.directed_cut_approx(zero).arcs
    yield f"gomory_hu_tree n={sym.n}", lambda: construct.gomory_hu_tree(sym).edges
    hard = HardInstance("general", min(n, 12) // 2 * 2, 0b1)
    hard.table()
    yield f"directed_cut_approx hard n={hard.n}", lambda: construct.directed_cut_approx(hard).arcs


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=14)
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)
    if not K.HAVE_NUMBA:
        raise SystemExit("numba is not importable; nothing to compare")
    K.warm_up()
    print(f"{'case':<34}{'numba':>12}{'numpy':>12}{'speedup':>10}")
    for name, fn in cases(args.n):
        timings = {}
        results = {}
        for backend in ("numba", "numpy"):
            prev = K.set_backend(backend)
            try:
                timings[backend], results[backend] = best_of(fn, args.repeat)
            finally:
                K.set_backend(prev)
        if _normalize(results["numba"]) != _normalize(results["numpy"]):
            raise SystemExit(f"{name}: backends disagree")
        ratio = timings["numpy"] / timings["numba"] if timings["numba"] else float("inf")
        print(f"{name:<34}{timings['numba'] * 1e3:>10.2f}ms{timings['numpy'] * 1e3:>10.2f}ms{ratio:>9.1f}x")


if __name__ == "__main__":
    main()
