import math
import random
from fractions import Fraction as F

import pytest

from subapprox import construct, ensemble
from subapprox.core import (
    BudgetedAdditive,
    HardInstance,
    HittingWeights,
    Table,
    TreeCut,
    UndirectedCut,
    UndirectedGraph,
    WeightedTree,
    mask_of,
)
from subapprox.errors import DimensionMismatch
from subapprox.verify import (
    approximation_ratio,
    check_class,
    check_gomory_hu,
    check_submodular,
    heavy_cut,
    intersection_bound_probe,
    is_coverage,
)
from conftest import brute_submodular


def test_submodular_examples(backend):
    assert check_submodular(BudgetedAdditive((1, 1), 1)).holds
    bad = Table(2, (0, 0, 0, 1))
    r = check_submodular(bad)
    assert not r.holds and r.witness == (0, 0, 1)
    assert check_submodular(HardInstance("general", 4, 0b0011)).holds


@pytest.mark.parametrize("seed", range(30))
def test_submodular_check_matches_pairwise_definition(seed, backend):
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    f = Table(n, tuple(rng.randint(0, 4) for _ in range(1 << n)))
    r = check_submodular(f)
    assert r.holds == brute_submodular(f)
    if not r.holds:
        s, i, j = r.witness
        a, b = s | 1 << i, s | 1 << j
        assert f(a) + f(b) < f(a | b) + f(s)


def test_class_examples():
    u = check_class(UndirectedCut(ensemble.random_graph(random.Random(1), 5)))
    assert u.symmetric.holds and u.zero_boundary and u.nonnegative.holds
    b = check_class(BudgetedAdditive((1, 2, 3), 4))
    assert b.monotone.holds and not b.symmetric.holds
    s, t = b.symmetric.witness
    assert BudgetedAdditive((1, 2, 3), 4)(s) != BudgetedAdditive((1, 2, 3), 4)(t)
    assert check_class(HardInstance("symmetric", 4)).symmetric.holds
    m = check_class(Table(1, (1, 0)))
    assert not m.monotone.holds and not m.empty_zero.holds and m.universe_zero.holds


def test_ratio_identity_and_zero():
    f = ensemble.random_coverage(3, 5)
    r = approximation_ratio(f, f)
    assert r.lower_ok and r.theta == 1
    z = Table(2, (0,) * 4)
    assert approximation_ratio(z, z).theta == 1


def test_ratio_infinite_on_zero_set_conflict():
    f = HardInstance("general", 4, 0b0011)  # f({2,3}) = 0
    vals = [f(s) for s in range(16)]
    vals[0b1100] = F(1)
    g = Table(4, tuple(vals))
    r = approximation_ratio(f, g)
    assert r.theta == math.inf and r.zero_set_conflicts == (0b1100,)
    assert not r.within(100)


def test_ratio_lower_witness():
    f = BudgetedAdditive((1, 1), 2)
    g = Table(2, (0, 1, F(1, 2), 2))
    r = approximation_ratio(f, g)
    assert not r.lower_ok and r.witness_lower == 0b10
    assert g(0b10) < f(0b10)


def test_ratio_dimension_check():
    with pytest.raises(DimensionMismatch):
        approximation_ratio(Table(1, (0, 1)), Table(2, (0, 1, 1, 1)))


def test_coverage_recognition_examples():
    f = ensemble.random_coverage(9, 6)
    r = is_coverage(f)
    assert r.holds and r.weights.as_dict() == f.point_hitters()
    b = is_coverage(BudgetedAdditive((1, 1, 1, 1), 2))
    assert not b.holds and b.witness == 0b1111 and b.witness_value == -2
    g = construct.budgeted_expected_coverage(BudgetedAdditive((1, 1, 1, 1), 2))
    assert is_coverage(g).holds


def test_coverage_rejects_nonzero_empty():
    assert not is_coverage(Table(1, (1, 1))).holds


def test_coverage_first_negative_by_brute_force():
    # independent Moebius inversion of h(W) = f(U) - f(U \ W)
    f = BudgetedAdditive((1, 1, 1), 2)
    full = 7
    h = [f(full) - f(full ^ w) for w in range(8)]
    x = [sum((-1) ** bin(t ^ w).count("1") * h[w] for w in range(8) if w & t == w) for t in range(8)]
    first = next(t for t in range(8) if x[t] < 0)
    r = is_coverage(f)
    assert r.witness == first and r.witness_value == x[first]


@pytest.mark.parametrize("seed", range(10))
def test_hitting_round_trip(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 6)
    w = {rng.randrange(1, 1 << n): F(rng.randint(1, 5), rng.randint(1, 4)) for _ in range(5)}
    r = is_coverage(HittingWeights(n, w))
    assert r.holds and r.weights.as_dict() == w


def test_gomory_hu_checker():
    f = HardInstance("symmetric", 4)
    t = construct.gomory_hu_tree(f)
    assert check_gomory_hu(f, t).holds
    (u, v, _), *rest = t.edges
    bad = WeightedTree(4, ((u, v, 2), *rest))
    r = check_gomory_hu(f, bad)
    assert not r.holds and r.witness == (0, u, v)


def test_gomory_hu_checker_on_star():
    star = WeightedTree(5, ((0, 1, 1), (0, 2, F(2, 3)), (0, 3, 4), (0, 4, F(1, 2))))
    assert check_gomory_hu(TreeCut(star), star).holds
    assert check_gomory_hu(UndirectedCut(star.as_graph()), star).holds


def test_intersection_probe_examples():
    f = HardInstance("symmetric", 4)
    assert intersection_bound_probe(f, [0b0110]).holds
    assert intersection_bound_probe(f, [0b0011, 0b0110]).holds
    # a monotone-violating function can break the bound
    g = Table(2, (5, 0, 0, 0))
    r = intersection_bound_probe(g, [0b01, 0b10])
    assert not r.holds and r.witness[0] == 0


def test_heavy_cut_on_hard_symmetric():
    for n in (4, 6, 8):
        f = HardInstance("symmetric", n)
        t = construct.gomory_hu_tree(f)
        lb = heavy_cut(t)
        assert lb.singleton_ok and all(lb.chain.values())
        assert approximation_ratio(f, TreeCut(t)).theta >= lb.max_cut_value >= F(n, 4)


def test_heavy_cut_complete_graph():
    n = 4
    g = UndirectedGraph(n, tuple((u, v, F(1, 2)) for u in range(n) for v in range(u + 1, n)))
    lb = heavy_cut(g)
    # K4 with weight 1/2: singletons 3/2, max cut 2 at a 2-2 split
    assert lb.total_weight == 3 and lb.max_cut_value == 2
    assert lb.max_cut_mask == mask_of([0, 1])
