"""Constructive approximations of one function class by a simpler one."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _kernels as K
from .core import (
    BudgetedAdditive,
    ConcaveModular,
    CoverageSystem,
    IntTable,
    ScaledSum,
    SetFunction,
    SqrtModular,
    UniformProfile,
    WeightedDigraph,
    WeightedTree,
    common_denominator,
    elements_of,
    guard,
    lift,
    nonneg,
    to_fraction,
)
from .errors import (
    AllValuesZero,
    BoundaryNonzero,
    DimensionMismatch,
    GomoryHuValidationFailed,
    NegativeValue,
    NonIntegerValues,
    NotConcaveProfile,
    NotMonotoneProfile,
    NotSymmetric,
    ReconstructionFailed,
    ZeroBudget,
)
from .verify import check_gomory_hu


@dataclass(frozen=True)
class SeparatorResult:
    witness: int
    value: Fraction


def _exact_table(f: SetFunction) -> IntTable:
    guard(f.n)
    t = f.table()
    if np.any(t.nums < 0):
        raise NegativeValue("function takes a negative value")
    return t


def min_separating_set(f: SetFunction, u: int, v: int) -> SeparatorResult:
    """Minimum of f over sets containing ``u`` and not ``v``; ties go to the smallest mask."""
    if u == v:
        raise ValueError("u and v must differ")
    for x in (u, v):
        if not 0 <= x < f.n:
            raise DimensionMismatch(f"element {x} outside 0..{f.n - 1}")
    t = _exact_table(f)
    s = K.min_separating(t.nums, f.n, u, v)
    return SeparatorResult(s, t.value(s))


def directed_cut_approx(f: SetFunction, workers: int = 1) -> WeightedDigraph:
    """Digraph whose arc (u, v) weighs the minimum of f over sets separating u from v.

    For submodular f with f(empty) = f(U) = 0 its cut function c satisfies
    f <= c <= (n^2/4) f. Submodularity is not re-checked here.
    """
    t = _exact_table(f)
    n = f.n
    if t.nums[0] != 0 or t.nums[-1] != 0:
        raise BoundaryNonzero("need f(empty) = f(U) = 0")
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]

    def scan(pair):
        return t.value(K.min_separating(t.nums, n, *pair))

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            weights = list(pool.map(scan, pairs))
    else:
        weights = [scan(p) for p in pairs]
    return WeightedDigraph(n, tuple((u, v, w) for (u, v), w in zip(pairs, weights)))


def _union_table(element_masks: Sequence[int]) -> np.ndarray:
    """orig[m] = union of element_masks[i] over the bits i of m."""
    out = np.zeros(1, dtype=np.int64)
    for em in element_masks:
        out = np.concatenate([out, out | em])
    return out


def gomory_hu_tree(f: SetFunction) -> WeightedTree:
    """Gomory-Hu tree of a symmetric function by repeated contraction and splitting.

    The tree is kept over blocks of a partition of the ground set. While some
    block X has two elements, its two lowest elements u, v are separated by a
    minimum separating set of the function in which each subtree hanging off X
    is contracted to one super-element. X splits along that set, each subtree
    follows its super-element, and the new edge gets the minimum value.
    """
    t = _exact_table(f)
    n = f.n
    if t.nums[0] != 0:
        raise BoundaryNonzero("need f(empty) = 0")
    s = K.symmetric_witness(t.nums, n)
    if s >= 0:
        raise NotSymmetric(f"f({s:#x}) differs from its complement's value")

    blocks: list[list[int]] = [list(range(n))]
    edges: list[list] = []  # [block_a, block_b, weight]

    def subtree_mask(start: int, avoid: int) -> int:
        seen = {start}
        stack = [start]
        while stack:
            b = stack.pop()
            for e in edges:
                for x, y in ((e[0], e[1]), (e[1], e[0])):
                    if x == b and y != avoid and y not in seen:
                        seen.add(y)
                        stack.append(y)
        mask = 0
        for b in seen:
            for i in blocks[b]:
                mask |= 1 << i
        return mask

    while True:
        xi = next((i for i, b in enumerate(blocks) if len(b) >= 2), None)
        if xi is None:
            break
        X = blocks[xi]
        incident = [e for e in edges if xi in (e[0], e[1])]
        supers = [subtree_mask(e[1] if e[0] == xi else e[0], xi) for e in incident]
        members = [1 << i for i in X] + supers
        sub = t.nums[_union_table(members)]
        r = K.min_separating(sub, len(members), 0, 1)
        value = Fraction(int(sub[r]), t.den)

        xu = [x for k, x in enumerate(X) if r >> k & 1]
        xv = [x for k, x in enumerate(X) if not r >> k & 1]
        blocks[xi] = xu
        blocks.append(xv)
        vi = len(blocks) - 1
        for k, e in enumerate(incident):
            if not r >> (len(X) + k) & 1:
                if e[0] == xi:
                    e[0] = vi
                else:
                    e[1] = vi
        edges.append([xi, vi, value])

    tree = WeightedTree(n, tuple((blocks[a][0], blocks[b][0], w) for a, b, w in edges))
    report = check_gomory_hu(f, tree)
    if not report.holds:
        raise GomoryHuValidationFailed(report.detail)
    return tree


# --------------------------------------------------------------------------
# budgeted additive -> coverage


def _lifted_budget(f: BudgetedAdditive) -> tuple[list[int], int, int]:
    if not isinstance(f, BudgetedAdditive):
        raise TypeError("expected a BudgetedAdditive function")
    if f.budget == 0:
        raise ZeroBudget("budget must be positive")
    if not any(f.items):
        raise AllValuesZero("at least one item value must be positive")
    nums, lift_factor = lift(list(f.items) + [f.budget])
    return nums[:-1], nums[-1], lift_factor


def coverage_ratio(budget: int) -> Fraction:
    """1 - (1 - 1/B)^B, the worst ratio of the expected coverage to f."""
    return 1 - (1 - Fraction(1, budget)) ** budget


@dataclass(frozen=True, eq=False)
class ExpectedCoverage(SetFunction):
    """Expected union size when item i throws a'_i uniform darts at B' points.

    Values are (1/L) * B' * (1 - (1 - 1/B')^V'(S)) with V'(S) = sum of a'_i,
    where a', B' are the original values multiplied by the lift L.
    """

    items: tuple  # integer-lifted values a'_i
    budget: int  # integer-lifted budget B'
    lift: int
    kind = "expected_coverage"

    @property
    def n(self):
        return len(self.items)

    @property
    def base(self) -> BudgetedAdditive:
        return BudgetedAdditive(self.items, self.budget)

    @property
    def original(self) -> BudgetedAdditive:
        return BudgetedAdditive(
            tuple(Fraction(a, self.lift) for a in self.items), Fraction(self.budget, self.lift)
        )

    @property
    def rho(self) -> Fraction:
        return coverage_ratio(self.budget)

    @property
    def scale(self) -> Fraction:
        return 1 / self.rho

    def at_load(self, load: int) -> Fraction:
        b = self.budget
        return Fraction(b, self.lift) * (1 - (1 - Fraction(1, b)) ** load)

    def _value(self, mask):
        return self.at_load(sum(self.items[i] for i in elements_of(mask)))

    def _build_table(self):
        loads = np.asarray(K.modular_table(np.array(self.items, dtype=object), self.n))
        distinct = sorted({int(v) for v in loads})
        nums, den = lift([self.at_load(v) for v in distinct])
        lookup = dict(zip(distinct, nums))
        return IntTable(K.as_exact(np.array([lookup[int(v)] for v in loads], dtype=object)), den)

    def scaled(self) -> ScaledSum:
        """h = g' / rho, which satisfies f <= h <= (1/rho) f."""
        return ScaledSum(self.n, ((self.scale, self),))


def budgeted_expected_coverage(f: BudgetedAdditive) -> ExpectedCoverage:
    items, budget, lift_factor = _lifted_budget(f)
    return ExpectedCoverage(tuple(items), budget, lift_factor)


def budgeted_sampled_coverage(f: BudgetedAdditive, seed: int) -> CoverageSystem:
    """One random coverage function g <= f: item i covers a'_i uniform draws from B' points."""
    items, budget, lift_factor = _lifted_budget(f)
    if not 0 <= seed < 1 << 64:
        raise ValueError("seed must be a 64-bit unsigned integer")
    rng = np.random.default_rng(seed)
    sets = tuple(sorted({int(z) for z in rng.integers(0, budget, size=a)}) for a in items)
    return CoverageSystem((Fraction(1, lift_factor),) * budget, sets)


# --------------------------------------------------------------------------
# decompositions into sums of budgeted additive functions


@dataclass(frozen=True)
class Decomposition:
    """f = sum of alpha * component; ``alphas[i - 1]`` belongs to the rank/budget-i term."""

    n: int
    alphas: tuple
    terms: tuple
    swapped_alpha1_differs: bool = False  # 2 f_2 - f_1 would give a different alpha_1

    def as_oracle(self) -> ScaledSum:
        return ScaledSum(self.n, self.terms)


def _profile_alphas(profile: Sequence[Fraction]) -> list[Fraction]:
    m = len(profile) - 1
    if profile[0] != 0:
        raise DimensionMismatch("profile must start at 0")
    diffs = [profile[j + 1] - profile[j] for j in range(m)]
    for j, d in enumerate(diffs):
        if d < 0:
            raise NotMonotoneProfile(f"profile decreases between {j} and {j + 1}")
    for j in range(m - 1):
        if diffs[j + 1] > diffs[j]:
            raise NotConcaveProfile(f"increments grow at {j + 1}")
    if m == 1:
        return [profile[1]]
    f = profile
    alphas = [2 * f[1] - f[2]]
    alphas += [2 * f[j] - f[j - 1] - f[j + 1] for j in range(2, m)]
    alphas.append(f[m] - f[m - 1])
    for j in range(m + 1):
        if sum((a * min(j, i) for i, a in enumerate(alphas, 1)), Fraction(0)) != f[j]:
            raise ReconstructionFailed(f"sum of alpha_i * min({j}, i) != f_{j}")
    return alphas


def decompose_uniform_profile(profile) -> Decomposition:
    """Write a monotone concave cardinality profile as a sum of uniform matroid ranks.

    The rank-i term min(|S|, i) gets weight alpha_i = 2 f_i - f_{i-1} - f_{i+1}
    (with f_0 = 0), except alpha_n = f_n - f_{n-1}.
    """
    if isinstance(profile, UniformProfile):
        prof = profile.profile
    else:
        prof = tuple(nonneg(v, "profile value") for v in profile)
    n = len(prof) - 1
    if n < 1:
        raise DimensionMismatch("profile needs at least f_0 and f_1")
    alphas = _profile_alphas(prof)
    ones = (Fraction(1),) * n
    terms = tuple((a, BudgetedAdditive(ones, i)) for i, a in enumerate(alphas, 1) if a)
    differs = n >= 2 and 2 * prof[2] - prof[1] != alphas[0]
    return Decomposition(n, tuple(alphas), terms, differs)


def concave_modular_to_budgeted(g_profile, a) -> Decomposition:
    """Write S -> g(sum of a_j over S) as a sum of budgeted additive functions.

    Each uniform rank-i term of g over {0..m} becomes min(sum of a_j over S, i).
    """
    items = []
    for x in a:
        q = nonneg(x, "item weight")
        if q.denominator != 1:
            raise NonIntegerValues(f"item weight {q} is not an integer")
        items.append(int(q))
    prof = tuple(nonneg(v, "profile value") for v in g_profile)
    target = ConcaveModular(prof, tuple(items))
    m = sum(items)
    if m == 0:
        return Decomposition(len(items), (), ())
    alphas = _profile_alphas(prof)
    terms = tuple((al, BudgetedAdditive(tuple(items), i)) for i, al in enumerate(alphas, 1) if al)
    differs = m >= 2 and 2 * prof[2] - prof[1] != alphas[0]
    dec = Decomposition(len(items), tuple(alphas), terms, differs)
    (lhs, rhs), _ = common_denominator(target.table(), dec.as_oracle().table())
    bad = np.flatnonzero(lhs != rhs)
    if bad.size:
        raise ReconstructionFailed(f"decomposition differs from g(a(S)) at S={int(bad[0]):#x}")
    return dec


def sqrt_modular_surrogate(a) -> SqrtModular:
    """The surrogate S -> sqrt(sum of a_e over S) for given coefficients a."""
    return SqrtModular(tuple(to_fraction(x) for x in a))
