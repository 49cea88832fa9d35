import itertools

import pytest

from subapprox import _kernels as K


@pytest.fixture(scope="session", autouse=True)
def _compiled_kernels():
    K.warm_up()


@pytest.fixture(params=["numba", "numpy"])
def backend(request):
    """Run a test once per kernel backend."""
    if request.param == "numba" and not K.HAVE_NUMBA:
        pytest.skip("numba unavailable")
    previous = K.set_backend(request.param)
    yield request.param
    K.set_backend(previous)


def brute_min_separating(f, u, v):
    """(value, mask) of the smallest-mask minimizer, by direct evaluation."""
    return min((f(r), r) for r in range(1 << f.n) if r >> u & 1 and not r >> v & 1)


def brute_submodular(f):
    n = f.n
    return all(
        f(s) + f(t) >= f(s | t) + f(s & t) for s, t in itertools.product(range(1 << n), repeat=2)
    )
