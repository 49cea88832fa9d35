"""Exhaustive exact checks of set-function properties and approximation quality.

All scans visit subsets in ascending mask order, so the witness attached to a
failed check is the first violation in that order and is reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import _kernels as K
from .core import (
    HittingWeights,
    SetFunction,
    UndirectedGraph,
    WeightedTree,
    common_denominator,
    full_mask,
    guard,
)
from .errors import DimensionMismatch


@dataclass(frozen=True)
class PropertyReport:
    holds: bool
    witness: tuple | None = None
    detail: str = ""

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class ClassReport:
    nonnegative: PropertyReport
    monotone: PropertyReport
    symmetric: PropertyReport
    empty_zero: PropertyReport
    universe_zero: PropertyReport

    @property
    def zero_boundary(self) -> bool:
        return self.empty_zero.holds and self.universe_zero.holds


@dataclass(frozen=True)
class ApproxReport:
    """Result of comparing a target ``f`` with a candidate ``g``.

    ``theta`` is the exact maximum of g(S)/f(S) over f(S) > 0, or ``math.inf``
    when some S has f(S) = 0 < g(S).
    """

    lower_ok: bool
    theta: Fraction | float
    witness_theta: int | None
    witness_lower: int | None
    zero_set_conflicts: tuple = ()

    def within(self, bound) -> bool:
        """Sandwich f <= g <= bound * f holds everywhere."""
        return self.lower_ok and self.theta <= bound


@dataclass(frozen=True)
class CoverageReport:
    holds: bool
    weights: HittingWeights | None = None
    witness: int | None = None
    witness_value: Fraction | None = None
    detail: str = ""


def _table(f: SetFunction):
    guard(f.n)
    return f.table()


def check_submodular(f: SetFunction) -> PropertyReport:
    """Local test f(S+i) + f(S+j) >= f(S+i+j) + f(S) for all S and i < j outside S."""
    t = _table(f)
    s, i, j = K.submodular_witness(t.nums, f.n)
    if s < 0:
        return PropertyReport(True)
    return PropertyReport(False, (s, i, j), f"f(S+{i}) + f(S+{j}) < f(S+{i}+{j}) + f(S) at S={s:#x}")


def check_class(f: SetFunction) -> ClassReport:
    t = _table(f)
    n = f.n
    neg = np.flatnonzero(t.nums < 0)
    nonnegative = PropertyReport(True) if not neg.size else PropertyReport(False, (int(neg[0]),), "negative value")

    s, i = K.monotone_witness(t.nums, n)
    monotone = PropertyReport(True) if s < 0 else PropertyReport(False, (s, i), f"f(S+{i}) < f(S)")

    s = K.symmetric_witness(t.nums, n)
    symmetric = (
        PropertyReport(True) if s < 0 else PropertyReport(False, (s, full_mask(n) ^ s), "f(S) != f(U \\ S)")
    )

    empty = PropertyReport(True) if t.nums[0] == 0 else PropertyReport(False, (0,), "f(empty) != 0")
    full = full_mask(n)
    universe = PropertyReport(True) if t.nums[full] == 0 else PropertyReport(False, (full,), "f(U) != 0")
    return ClassReport(nonnegative, monotone, symmetric, empty, universe)


def approximation_ratio(f: SetFunction, g: SetFunction) -> ApproxReport:
    """Exact sandwich report for approximating ``f`` by ``g``."""
    if f.n != g.n:
        raise DimensionMismatch(f"ground sets differ: {f.n} vs {g.n}")
    (F, G), _ = common_denominator(_table(f), _table(g))
    low, best, conflicts = K.sandwich_scan(F, G, f.n)
    conflict_masks = tuple(int(m) for m in np.flatnonzero(conflicts))
    if conflict_masks:
        theta = math.inf
    elif best < 0:
        theta = Fraction(1)
    else:
        theta = Fraction(int(G[best]), int(F[best]))
    return ApproxReport(
        lower_ok=low < 0,
        theta=theta,
        witness_theta=None if best < 0 else best,
        witness_lower=None if low < 0 else low,
        zero_set_conflicts=conflict_masks,
    )


def is_coverage(f: SetFunction) -> CoverageReport:
    """Recognize coverage functions through their hitting weights.

    With h(W) = f(U) - f(U \\ W), the Moebius transform of h gives the unique
    x with f(S) = sum of x_T over T meeting S (when f(empty) = 0). ``f`` is a
    coverage function exactly when every x_T is nonnegative.
    """
    t = _table(f)
    n = f.n
    if t.nums[0] != 0:
        return CoverageReport(False, detail="f(empty) != 0")
    nums = t.nums.astype(object)
    h = nums[-1] - nums[::-1]
    x = K.mobius(h, n)
    negative = np.flatnonzero(x < 0)
    if negative.size:
        T = int(negative[0])
        return CoverageReport(False, witness=T, witness_value=Fraction(int(x[T]), t.den), detail="x_T < 0")
    weights = HittingWeights(n, tuple((T, Fraction(int(x[T]), t.den)) for T in range(1, 1 << n) if x[T]))
    (a, b), _ = common_denominator(t, weights.table())
    mismatch = np.flatnonzero(a != b)
    if mismatch.size:
        S = int(mismatch[0])
        return CoverageReport(False, witness=S, detail="hitting-form reconstruction fails")
    return CoverageReport(True, weights=weights)


def min_separating_value(f: SetFunction, u: int, v: int) -> tuple[int, Fraction]:
    t = _table(f)
    s = K.min_separating(t.nums, f.n, u, v)
    return s, t.value(s)


def check_gomory_hu(f: SetFunction, tree: WeightedTree) -> PropertyReport:
    """Each tree edge {u, v} must satisfy w(e) = min separating value = f(R_e)."""
    if tree.n != f.n:
        raise DimensionMismatch(f"tree on {tree.n} nodes for a function on {f.n}")
    t = _table(f)
    for k, (u, v, w) in enumerate(tree.edges):
        best = t.value(K.min_separating(t.nums, f.n, u, v))
        side = tree.component(k, u)
        f_side = t.value(side)
        if not (w == best == f_side):
            return PropertyReport(
                False, (k, u, v), f"edge ({u},{v}): weight {w}, min separating {best}, f(R_e) {f_side}"
            )
    return PropertyReport(True)


def intersection_bound_probe(f: SetFunction, sets) -> PropertyReport:
    """f(intersection of the sets) <= sum of f over the sets."""
    sets = list(sets)
    if not sets:
        raise ValueError("need at least one set")
    inter = full_mask(f.n)
    for a in sets:
        inter &= a
    lhs = f(inter)
    rhs = sum((f(a) for a in sets), Fraction(0))
    if lhs <= rhs:
        return PropertyReport(True)
    return PropertyReport(False, (inter, tuple(sets)), f"f(cap) = {lhs} > {rhs}")


@dataclass(frozen=True)
class CutLowerBound:
    """Chain of exact values bounding theta from below for a graph approximating
    the symmetric hard instance: total weight, a heaviest nontrivial cut."""

    singleton_ok: bool
    total_weight: Fraction
    max_cut_mask: int
    max_cut_value: Fraction
    chain: dict = field(default_factory=dict)

    @property
    def implied_theta_floor(self) -> Fraction:
        return self.max_cut_value


def heavy_cut(graph: UndirectedGraph | WeightedTree) -> CutLowerBound:
    """Exhaustive max nontrivial cut, checked against half the total weight.

    For a graph whose cut function dominates the symmetric hard instance,
    every singleton cut is >= 1, so total weight >= n/2 and the heaviest cut is
    >= n/4; theta is at least the heaviest cut value.
    """
    from .core import TreeCut, UndirectedCut

    n = graph.n
    f = TreeCut(graph) if isinstance(graph, WeightedTree) else UndirectedCut(graph)
    t = _table(f)
    total = sum((w for _, _, w in graph.edges), Fraction(0))
    inner = t.nums[1 : full_mask(n)]
    best = 1 + int(np.flatnonzero(inner == inner.max())[0]) if inner.size else 0
    best_value = t.value(best)
    singleton_ok = all(t.value(1 << i) >= 1 for i in range(n))
    return CutLowerBound(
        singleton_ok=singleton_ok,
        total_weight=total,
        max_cut_mask=best,
        max_cut_value=best_value,
        chain={
            "total_at_least_half_n": total >= Fraction(n, 2),
            "max_cut_at_least_half_total": 2 * best_value >= total,
            "max_cut_at_least_quarter_n": best_value >= Fraction(n, 4),
        },
    )
