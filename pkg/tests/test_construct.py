import random
from fractions import Fraction as F

import pytest

from subapprox import construct, ensemble
from subapprox.certify import HardInstanceSpec, hard_instance
from subapprox.core import (
    BudgetedAdditive,
    ConcaveModular,
    DirectedCut,
    HardInstance,
    Table,
    TreeCut,
    UniformProfile,
    WeightedTree,
    mask_of,
)
from subapprox.errors import (
    AllValuesZero,
    BoundaryNonzero,
    ExhaustiveGuardExceeded,
    NegativeValue,
    NonIntegerValues,
    NotConcaveProfile,
    NotMonotoneProfile,
    NotSymmetric,
    ZeroBudget,
)
from subapprox.verify import approximation_ratio, check_gomory_hu, is_coverage
from conftest import brute_min_separating

GENERAL4 = HardInstance("general", 4, 0b0011)


# ---------------------------------------------------------------- separators


@pytest.mark.parametrize(
    "f,u,v",
    [(HardInstance("symmetric", 4), 0, 1), (GENERAL4, 0, 2), (GENERAL4, 2, 3), (GENERAL4, 3, 0)],
)
def test_min_separating_matches_brute_force(f, u, v, backend):
    r = construct.min_separating_set(f, u, v)
    assert (r.value, r.witness) == brute_min_separating(f, u, v)
    assert r.witness >> u & 1 and not r.witness >> v & 1


def test_min_separating_examples():
    assert construct.min_separating_set(HardInstance("symmetric", 4), 0, 1).value == 1
    assert construct.min_separating_set(GENERAL4, 0, 2).value == 1
    r = construct.min_separating_set(GENERAL4, 2, 3)
    assert r.value == 0 and r.witness == mask_of([2])


def test_min_separating_rejects_equal_endpoints():
    with pytest.raises(ValueError):
        construct.min_separating_set(GENERAL4, 1, 1)


# ---------------------------------------------------------------- directed cut


def test_directed_cut_on_general_hard_instance():
    g = construct.directed_cut_approx(GENERAL4)
    arcs = {(u, v): w for u, v, w in g.arcs}
    assert arcs == {(u, v): 1 for u in (0, 1) for v in (2, 3)}
    rep = approximation_ratio(GENERAL4, DirectedCut(g))
    assert rep.lower_ok and rep.theta == 4 and rep.witness_theta == 0b0011


@pytest.mark.parametrize("seed", range(5))
def test_directed_cut_dominates_a_cut_function(seed):
    f = DirectedCut(ensemble.random_digraph(random.Random(seed), 3))
    c = DirectedCut(construct.directed_cut_approx(f))
    assert all(f(s) <= c(s) for s in range(8))


def test_directed_cut_zero_function():
    f = Table(3, (0,) * 8)
    g = construct.directed_cut_approx(f)
    assert g.arcs == ()
    assert approximation_ratio(f, DirectedCut(g)).theta == 1


def test_directed_cut_parallel_matches_serial():
    f = ensemble.random_zero_boundary_submodular(7, 6)
    assert construct.directed_cut_approx(f, workers=4).arcs == construct.directed_cut_approx(f).arcs


def test_directed_cut_requires_zero_boundary():
    with pytest.raises(BoundaryNonzero):
        construct.directed_cut_approx(BudgetedAdditive((1, 1), 1))


# ---------------------------------------------------------------- Gomory-Hu


def test_gomory_hu_hard_symmetric():
    f = HardInstance("symmetric", 4)
    t = construct.gomory_hu_tree(f)
    assert [w for _, _, w in t.edges] == [1, 1, 1]
    assert check_gomory_hu(f, t).holds
    c = TreeCut(t)
    assert all(1 <= c(s) <= 3 for s in range(1, 15))


def test_gomory_hu_reproduces_a_tree_cut():
    path = WeightedTree(4, ((0, 1, 3), (1, 2, F(1, 2)), (2, 3, 2)))
    f = TreeCut(path)
    t = construct.gomory_hu_tree(f)
    c = TreeCut(t)
    assert all(c(s) == f(s) for s in range(16))
    assert approximation_ratio(f, c).theta == 1


def test_gomory_hu_zero_function():
    t = construct.gomory_hu_tree(Table(3, (0,) * 8))
    assert len(t.edges) == 2 and all(w == 0 for _, _, w in t.edges)


@pytest.mark.parametrize("seed", range(10))
def test_gomory_hu_random(seed):
    f = ensemble.random_symmetric_submodular(seed, 2 + seed % 6)
    t = construct.gomory_hu_tree(f)
    assert check_gomory_hu(f, t).holds
    rep = approximation_ratio(f, TreeCut(t))
    assert rep.lower_ok and rep.within(f.n - 1)


def test_gomory_hu_needs_symmetry():
    with pytest.raises(NotSymmetric):
        construct.gomory_hu_tree(BudgetedAdditive((1, 2), 2))


def test_guard_applies():
    with pytest.raises(ExhaustiveGuardExceeded):
        construct.min_separating_set(HardInstance("symmetric", 17), 0, 1)


# ---------------------------------------------------------------- coverage constructions


def test_expected_coverage_examples():
    g = construct.budgeted_expected_coverage(BudgetedAdditive((1, 1, 1, 1), 2))
    assert g(0b0001) == 1
    assert g(0b0011) == F(3, 2)
    assert g.scale == F(4, 3)
    assert is_coverage(g).holds


def test_expected_coverage_budget_one_is_exact():
    f = BudgetedAdditive((1, 2, 0, 3), 1)
    g = construct.budgeted_expected_coverage(f)
    assert g.scale == 1
    assert all(g(s) == f(s) for s in range(16))


def test_expected_coverage_worst_ratio_on_f3():
    f = BudgetedAdditive((1,) * 9, 3)
    g = construct.budgeted_expected_coverage(f)
    ratios = [(f(s) / g(s), s) for s in range(1, 512)]
    worst = max(r for r, _ in ratios)
    assert worst == F(27, 19)
    assert {bin(s).count("1") for r, s in ratios if r == worst} == {3}


def test_expected_coverage_lifts_rationals():
    f = BudgetedAdditive((F(1, 2), F(1, 3), 1), F(5, 6))
    g = construct.budgeted_expected_coverage(f)
    assert g.lift == 6 and g.items == (3, 2, 6) and g.budget == 5
    for s in range(8):
        assert g.rho * f(s) <= g(s) <= f(s)
        assert g.scaled()(s) >= f(s)


def test_rho_moves_toward_limit():
    # rho(B) = 1 - (1 - 1/B)^B decreases toward 1 - 1/e
    rhos = [construct.coverage_ratio(b) for b in range(1, 30)]
    assert all(a > b for a, b in zip(rhos, rhos[1:]))
    assert rhos[:3] == [1, F(3, 4), F(19, 27)]


def test_sampled_coverage_single_item():
    f = BudgetedAdditive((1,), 1)
    for seed in (0, 1, 2**63):
        g = construct.budgeted_sampled_coverage(f, seed)
        assert g.sets == (frozenset({0}),)
        assert g(1) == f(1)


def test_sampled_coverage_below_f_and_deterministic():
    f = BudgetedAdditive((1, 1, 1, 1), 2)
    g = construct.budgeted_sampled_coverage(f, 42)
    assert all(g(s) <= f(s) for s in range(16))
    assert construct.budgeted_sampled_coverage(f, 42).sets == g.sets


def test_coverage_preconditions():
    with pytest.raises(ZeroBudget):
        construct.budgeted_expected_coverage(BudgetedAdditive((1,), 0))
    with pytest.raises(AllValuesZero):
        construct.budgeted_sampled_coverage(BudgetedAdditive((0, 0), 1), 1)


# ---------------------------------------------------------------- decompositions


def test_decompose_rank_two():
    d = construct.decompose_uniform_profile((0, 1, 2, 2))
    assert d.alphas == (0, 1, 0)
    assert len(d.terms) == 1 and d.terms[0][1].budget == 2


def test_decompose_worked_profile():
    d = construct.decompose_uniform_profile(UniformProfile((0, 1, F(3, 2), F(7, 4))))
    assert d.alphas == (F(1, 2), F(1, 4), F(1, 4))
    assert d.swapped_alpha1_differs
    g = d.as_oracle()
    prof = (0, 1, F(3, 2), F(7, 4))
    assert all(g(s) == prof[bin(s).count("1")] for s in range(8))


def test_decompose_modular():
    d = construct.decompose_uniform_profile((0, F(2, 3), F(4, 3), 2, F(8, 3)))
    assert d.alphas == (0, 0, 0, F(2, 3))


def test_decompose_rejects():
    with pytest.raises(NotConcaveProfile):
        construct.decompose_uniform_profile((0, 1, 3))
    with pytest.raises(NotMonotoneProfile):
        construct.decompose_uniform_profile((0, 2, 1))
    with pytest.raises(NegativeValue):
        construct.decompose_uniform_profile((0, -1))


def test_concave_modular_examples():
    d = construct.concave_modular_to_budgeted((0, 1, 2, 2), (2, 1))
    assert len(d.terms) == 1
    coef, term = d.terms[0]
    target = BudgetedAdditive((2, 1), 2)
    assert coef == 1 and all(term(s) == target(s) for s in range(4))

    d = construct.concave_modular_to_budgeted((0, 1, 2, 3), (1, 1, 1))
    assert [(c, t.budget) for c, t in d.terms] == [(1, 3)]

    # floor(4 sqrt(t)) / 4 on t = 0..4 has increments 1, 1/4, 1/4, 1/2: not concave
    from math import isqrt

    floor_sqrt = tuple(F(isqrt(16 * t), 4) for t in range(5))
    assert floor_sqrt == (0, 1, F(5, 4), F(3, 2), 2)
    with pytest.raises(NotConcaveProfile):
        construct.concave_modular_to_budgeted(floor_sqrt, (1, 1, 1, 1))

    # a rational concave profile of the same shape
    prof = (0, 1, F(5, 4), F(3, 2), F(7, 4))
    d = construct.concave_modular_to_budgeted(prof, (1, 1, 1, 1))
    assert all(a >= 0 for a in d.alphas)
    f = ConcaveModular(prof, (1, 1, 1, 1))
    assert all(d.as_oracle()(s) == f(s) for s in range(16))


def test_concave_modular_rejects_fractions():
    with pytest.raises(NonIntegerValues):
        construct.concave_modular_to_budgeted((0, 1), (F(1, 2), F(1, 2)))


@pytest.mark.parametrize("seed", range(10))
def test_concave_modular_random(seed):
    prof, a = ensemble.random_concave_modular(seed, 6)
    d = construct.concave_modular_to_budgeted(prof, a)
    f = ConcaveModular(prof, a)
    g = d.as_oracle()
    assert all(g(s) == f(s) for s in range(64))


# ---------------------------------------------------------------- sqrt surrogate


def test_sqrt_surrogate():
    g = construct.sqrt_modular_surrogate((1, 1, 1, 1))
    assert g(0b0011).radicand == 2
    assert g(0b0011) <= F(3, 2)
    z = construct.sqrt_modular_surrogate((0, 0, 0))
    assert all(z(s) == 0 for s in range(8))
    with pytest.raises(NegativeValue):
        construct.sqrt_modular_surrogate((1, -1))


def test_hard_budgeted_spec_matches_budgeted():
    f = hard_instance(HardInstanceSpec("budgeted-uniform", k=2))
    assert all(f(s) == min(bin(s).count("1"), 2) for s in range(16))
