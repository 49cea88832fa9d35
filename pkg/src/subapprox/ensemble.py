"""Seeded random instance generators for the property suites.

Every generator takes an integer seed and returns the same instance for the
same seed. Weights are small rationals so exact tables stay cheap.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .core import (
    BudgetedAdditive,
    CoverageSystem,
    DirectedCut,
    ScaledSum,
    UndirectedCut,
    UndirectedGraph,
    WeightedDigraph,
)

_DENOMINATORS = (1, 2, 3, 4, 6)


def _rational(rng: random.Random, top: int = 6, zero_ok: bool = True) -> Fraction:
    lo = 0 if zero_ok else 1
    return Fraction(rng.randint(lo, top), rng.choice(_DENOMINATORS))


def random_digraph(rng: random.Random, n: int, density: float = 0.5) -> WeightedDigraph:
    arcs = [
        (u, v, _rational(rng, zero_ok=False))
        for u in range(n)
        for v in range(n)
        if u != v and rng.random() < density
    ]
    return WeightedDigraph(n, tuple(arcs))


def random_graph(rng: random.Random, n: int, density: float = 0.5) -> UndirectedGraph:
    edges = [
        (u, v, _rational(rng, zero_ok=False))
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < density
    ]
    return UndirectedGraph(n, tuple(edges))


def random_zero_boundary_submodular(seed: int, n: int | None = None) -> ScaledSum:
    """Nonnegative combination of directed cut functions (so f(empty) = f(U) = 0)."""
    rng = random.Random(seed)
    n = n or rng.randint(2, 8)
    terms = tuple(
        (_rational(rng, zero_ok=False), DirectedCut(random_digraph(rng, n, rng.uniform(0.2, 0.8))))
        for _ in range(rng.randint(1, 3))
    )
    return ScaledSum(n, terms)


def random_symmetric_submodular(seed: int, n: int | None = None) -> ScaledSum:
    rng = random.Random(seed)
    n = n or rng.randint(2, 10)
    terms = tuple(
        (_rational(rng, zero_ok=False), UndirectedCut(random_graph(rng, n, rng.uniform(0.2, 0.8))))
        for _ in range(rng.randint(1, 3))
    )
    return ScaledSum(n, terms)


def random_budgeted(seed: int, n: int | None = None) -> BudgetedAdditive:
    """Budgeted additive with rational values, at least one positive, positive budget."""
    rng = random.Random(seed)
    n = n or rng.randint(1, 10)
    items = [_rational(rng, 4) for _ in range(n)]
    if not any(items):
        items[rng.randrange(n)] = Fraction(1)
    total = sum(items)
    budget = Fraction(rng.randint(1, max(1, int(2 * total))), rng.choice((1, 2)))
    return BudgetedAdditive(tuple(items), budget)


def random_coverage(seed: int, n: int | None = None) -> CoverageSystem:
    rng = random.Random(seed)
    n = n or rng.randint(1, 10)
    m = rng.randint(1, 12)
    weights = tuple(_rational(rng) for _ in range(m))
    sets = tuple(tuple(z for z in range(m) if rng.random() < 0.3) for _ in range(n))
    return CoverageSystem(weights, sets)


def random_concave_profile(seed: int, n: int | None = None) -> tuple:
    """f_0 = 0 < ... with nonincreasing nonnegative increments."""
    rng = random.Random(seed)
    n = n or rng.randint(1, 12)
    incs = sorted((_rational(rng) for _ in range(n)), reverse=True)
    prof = [Fraction(0)]
    for d in incs:
        prof.append(prof[-1] + d)
    return tuple(prof)


def random_concave_modular(seed: int, n: int | None = None, max_total: int = 12) -> tuple:
    """(g_profile, a) with integer a, m = sum(a) <= max_total, g concave nondecreasing on 0..m."""
    rng = random.Random(seed)
    n = n or rng.randint(1, 12)
    a = [rng.randint(0, 2) for _ in range(n)]
    while sum(a) > max_total:
        a[rng.randrange(n)] = 0
    if not any(a):
        a[rng.randrange(n)] = 1
    profile = random_concave_profile(rng.randrange(1 << 30), sum(a))
    return profile, tuple(a)


def random_submodular(seed: int, n: int | None = None):
    """Draw from a mix of submodular classes and their nonnegative combinations."""
    rng = random.Random(seed)
    n = n or rng.randint(1, 8)
    makers = [
        lambda s: random_budgeted(s, n),
        lambda s: random_coverage(s, n),
        lambda s: DirectedCut(random_digraph(random.Random(s), n)),
        lambda s: UndirectedCut(random_graph(random.Random(s), n)),
    ]
    terms = tuple(
        (_rational(rng, zero_ok=False), rng.choice(makers)(rng.randrange(1 << 30)))
        for _ in range(rng.randint(1, 3))
    )
    return ScaledSum(n, terms)
