import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subapprox import _kernels as K


def brute_zeta(a, n):
    return [sum(a[w] for w in range(1 << n) if w & t == w) for t in range(1 << n)]


def random_table(rng, n, top=20):
    return np.array([rng.randint(0, top) for _ in range(1 << n)], dtype=np.int64)


@pytest.mark.parametrize("n", [1, 3, 5])
def test_zeta_matches_brute_force(backend, n):
    rng = random.Random(n)
    a = random_table(rng, n)
    assert list(K.zeta(a, n)) == brute_zeta(list(a), n)


@pytest.mark.parametrize("n", [1, 4, 6])
def test_mobius_inverts_zeta(backend, n):
    rng = random.Random(10 + n)
    a = random_table(rng, n)
    assert list(K.mobius(K.zeta(a, n), n)) == list(a)


def test_big_values_stay_exact(backend):
    n = 4
    big = 1 << 80
    a = np.array([big + i for i in range(1 << n)], dtype=object)
    z = K.zeta(a, n)
    assert z.dtype == object
    assert list(z) == brute_zeta(list(a), n)
    assert list(K.mobius(z, n)) == list(a)


def test_modular_and_cut_tables(backend):
    w = np.array([3, 0, 5, 7], dtype=np.int64)
    t = K.modular_table(w, 4)
    assert [int(x) for x in t] == [sum(int(w[i]) for i in range(4) if m >> i & 1) for m in range(16)]
    W = np.array([[0, 1, 2], [3, 0, 4], [5, 6, 0]], dtype=np.int64)
    c = K.directed_cut_table(W, 3)
    expected = [
        sum(int(W[u, v]) for u in range(3) for v in range(3) if m >> u & 1 and not m >> v & 1)
        for m in range(8)
    ]
    assert [int(x) for x in c] == expected


def test_witness_order(backend):
    # f(empty)=f({0})=f({1})=0, f({0,1})=1 is supermodular at S=empty, i=0, j=1
    t = np.array([0, 0, 0, 1], dtype=np.int64)
    assert K.submodular_witness(t, 2) == (0, 0, 1)
    assert K.monotone_witness(np.array([0, 2, 1, 1]), 2) == (1, 1)
    assert K.symmetric_witness(np.array([0, 1, 2, 0]), 2) == 1
    assert K.symmetric_witness(np.array([0, 1, 1, 0]), 2) == -1


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(0, 9), min_size=1 << n, max_size=1 << n))))
def test_backends_agree(case):
    n, vals = case
    t = np.array(vals, dtype=np.int64)
    g = np.array(vals[::-1], dtype=np.int64)
    results = {}
    for name in ("numba", "numpy"):
        prev = K.set_backend(name)
        try:
            low, best, conf = K.sandwich_scan(t, g, n)
            results[name] = (
                K.submodular_witness(t, n),
                K.monotone_witness(t, n),
                K.symmetric_witness(t, n),
                K.min_separating(t, n, 0, 1),
                low,
                best,
                tuple(np.flatnonzero(conf)),
                tuple(K.zeta(t, n)),
            )
        finally:
            K.set_backend(prev)
    assert results["numba"] == results["numpy"]


def test_min_separating_prefers_smallest_mask(backend):
    t = np.array([5, 1, 9, 1, 1, 1, 9, 1], dtype=np.int64)
    # sets containing 0 and not 1: masks 1, 5 both value 1
    assert K.min_separating(t, 3, 0, 1) == 1


def test_backend_switch_validates():
    with pytest.raises(ValueError):
        K.set_backend("cuda")
