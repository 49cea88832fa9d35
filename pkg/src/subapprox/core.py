"""Exact set-function representations.

A set function on ground set ``{0, ..., n-1}`` is evaluated on subset masks
(plain ints, bit ``i`` set when element ``i`` is in the set). All values are
:class:`fractions.Fraction`; the only exception is :class:`SqrtModular`,
whose values are :class:`Radical` objects compared through their squares.

Every oracle offers two evaluation routes:

* ``f(S)`` applies the defining formula directly, one subset at a time;
* ``f.table()`` builds the whole value table at once as an :class:`IntTable`
  (integer numerators over one common denominator) using the lattice kernels.

The exhaustive verifiers use ``table()``; the tests check it against ``f(S)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from functools import cached_property
from numbers import Rational
from typing import Iterable, Sequence

import numpy as np

from . import _kernels as K
from .errors import (
    BadInstanceSpec,
    DimensionMismatch,
    ExhaustiveGuardExceeded,
    GroundSetTooLarge,
    InvalidMask,
    NegativeValue,
    NonIntegerValues,
    NonRationalValue,
    SchemaError,
)

MAX_REPRESENTABLE_N = 30
DEFAULT_MAX_EXHAUSTIVE_N = 16

_max_exhaustive_n = DEFAULT_MAX_EXHAUSTIVE_N


def get_max_exhaustive_n() -> int:
    return _max_exhaustive_n


def set_max_exhaustive_n(n: int) -> int:
    """Change the exhaustive-scan cap; returns the previous value."""
    global _max_exhaustive_n
    if not 1 <= n <= MAX_REPRESENTABLE_N:
        raise ValueError(f"exhaustive cap must lie in 1..{MAX_REPRESENTABLE_N}")
    previous, _max_exhaustive_n = _max_exhaustive_n, n
    return previous


def guard(n: int) -> None:
    if n > _max_exhaustive_n:
        raise ExhaustiveGuardExceeded(
            f"ground set of size {n} exceeds the exhaustive cap {_max_exhaustive_n}"
        )


def check_ground_set(n) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise DimensionMismatch(f"ground set size must be an int, got {n!r}")
    if n < 1:
        raise DimensionMismatch("ground set must be nonempty")
    if n > MAX_REPRESENTABLE_N:
        raise GroundSetTooLarge(f"n={n} exceeds the representation cap {MAX_REPRESENTABLE_N}")
    return n


# --------------------------------------------------------------------------
# rationals and masks


def to_fraction(x) -> Fraction:
    """Exact conversion of ints, Fractions, Decimals and strings like "3/4" or "0.5"."""
    if isinstance(x, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, Decimal):
        if not x.is_finite():
            raise ValueError(f"non-finite value {x}")
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def nonneg(x, what="value") -> Fraction:
    q = to_fraction(x)
    if q < 0:
        raise NegativeValue(f"{what} must be nonnegative, got {q}")
    return q


def fraction_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def full_mask(n: int) -> int:
    return (1 << n) - 1


def complement(mask: int, n: int) -> int:
    return full_mask(n) ^ mask


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for i in elements:
        m |= 1 << i
    return m


def elements_of(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask: int) -> int:
    return mask.bit_count()


def check_mask(mask, n: int) -> int:
    if isinstance(mask, bool) or not isinstance(mask, (int, np.integer)):
        raise InvalidMask(f"subset mask must be an int, got {mask!r}")
    mask = int(mask)
    if mask < 0 or mask >> n:
        raise InvalidMask(f"mask {mask:#x} is not a subset of a {n}-element ground set")
    return mask


def popcounts(n: int) -> np.ndarray:
    masks = np.arange(1 << n, dtype=np.int64)
    return ((masks[:, None] >> np.arange(n)) & 1).sum(axis=1) if n else np.zeros(1, np.int64)


def lift(values: Sequence[Fraction]) -> tuple[list[int], int]:
    """Scale rationals by the LCM of their denominators; returns (numerators, lcm)."""
    den = 1
    for q in values:
        den = math.lcm(den, q.denominator)
    return [q.numerator * (den // q.denominator) for q in values], den


@dataclass(frozen=True, eq=False)
class IntTable:
    """Value table of a set function: ``value(S) = nums[S] / den``."""

    nums: np.ndarray
    den: int

    @property
    def n(self) -> int:
        return len(self.nums).bit_length() - 1

    def value(self, mask: int) -> Fraction:
        return Fraction(int(self.nums[mask]), self.den)

    def fractions(self) -> list[Fraction]:
        return [Fraction(int(x), self.den) for x in self.nums]

    def over(self, den: int) -> np.ndarray:
        """Numerators re-expressed over ``den`` (a multiple of ``self.den``)."""
        factor = den // self.den
        if factor == 1:
            return self.nums
        return K.as_exact(self.nums.astype(object) * factor)

    @classmethod
    def from_fractions(cls, values: Sequence[Fraction]) -> "IntTable":
        nums, den = lift(values)
        return cls(K.as_exact(np.array(nums, dtype=object)), den)


def common_denominator(*tables: IntTable) -> tuple[list[np.ndarray], int]:
    den = 1
    for t in tables:
        den = math.lcm(den, t.den)
    return [t.over(den) for t in tables], den


# --------------------------------------------------------------------------
# graphs


def _merge_weighted(pairs, n, undirected):
    merged: dict[tuple[int, int], Fraction] = {}
    for item in pairs:
        u, v, w = item
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise DimensionMismatch(f"endpoint out of range in ({u}, {v}) for n={n}")
        if u == v:
            raise DimensionMismatch(f"self-loop at {u}")
        w = nonneg(w, "edge weight")
        key = (min(u, v), max(u, v)) if undirected else (u, v)
        merged[key] = merged.get(key, Fraction(0)) + w
    return tuple((u, v, w) for (u, v), w in sorted(merged.items()) if w != 0)


@dataclass(frozen=True)
class WeightedDigraph:
    """Nonnegative arc weights on ordered pairs; absent arcs weigh 0."""

    n: int
    arcs: tuple = ()

    def __post_init__(self):
        check_ground_set(self.n)
        object.__setattr__(self, "arcs", _merge_weighted(self.arcs, self.n, undirected=False))

    def weight(self, u: int, v: int) -> Fraction:
        for a, b, w in self.arcs:
            if (a, b) == (u, v):
                return w
        return Fraction(0)

    def matrix(self) -> list[list[Fraction]]:
        W = [[Fraction(0)] * self.n for _ in range(self.n)]
        for u, v, w in self.arcs:
            W[u][v] = w
        return W


@dataclass(frozen=True)
class UndirectedGraph:
    n: int
    edges: tuple = ()

    def __post_init__(self):
        check_ground_set(self.n)
        object.__setattr__(self, "edges", _merge_weighted(self.edges, self.n, undirected=True))

    def total_weight(self) -> Fraction:
        return sum((w for _, _, w in self.edges), Fraction(0))


@dataclass(frozen=True)
class WeightedTree:
    """A spanning tree on ``n`` nodes with nonnegative edge weights.

    Unlike the graph types, edges are kept in the given order and zero-weight
    edges are retained, since they carry the tree structure.
    """

    n: int
    edges: tuple = ()

    def __post_init__(self):
        check_ground_set(self.n)
        norm = []
        for u, v, w in self.edges:
            u, v = int(u), int(v)
            if not (0 <= u < self.n and 0 <= v < self.n) or u == v:
                raise DimensionMismatch(f"bad tree edge ({u}, {v})")
            norm.append((min(u, v), max(u, v), nonneg(w, "edge weight")))
        if len(norm) != self.n - 1:
            raise DimensionMismatch(f"a spanning tree on {self.n} nodes needs {self.n - 1} edges")
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v, _ in norm:
            ru, rv = find(u), find(v)
            if ru == rv:
                raise DimensionMismatch("tree edges contain a cycle")
            parent[ru] = rv
        object.__setattr__(self, "edges", tuple(norm))

    def component(self, edge_index: int, root: int) -> int:
        """Mask of the component containing ``root`` after deleting one edge."""
        adj: dict[int, list[int]] = {i: [] for i in range(self.n)}
        for k, (u, v, _) in enumerate(self.edges):
            if k != edge_index:
                adj[u].append(v)
                adj[v].append(u)
        seen = {root}
        stack = [root]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return mask_of(seen)

    def as_graph(self) -> UndirectedGraph:
        return UndirectedGraph(self.n, self.edges)


def _cut_value(arcs, mask, undirected):
    total = Fraction(0)
    for u, v, w in arcs:
        iu, iv = (mask >> u) & 1, (mask >> v) & 1
        if (iu and not iv) or (undirected and iv and not iu):
            total += w
    return total


def _cut_matrix_table(n, arcs, undirected):
    weights, den = lift([w for _, _, w in arcs])
    W = np.zeros((n, n), dtype=object)
    W[:] = 0
    for (u, v, _), w in zip(arcs, weights):
        W[u, v] += w
        if undirected:
            W[v, u] += w
    return IntTable(K.as_exact(K.directed_cut_table(W, n)), den)


# --------------------------------------------------------------------------
# oracles


class SetFunction:
    """Common interface: ``f(S)`` for one mask, ``f.table()`` for all of them."""

    n: int
    kind = "abstract"

    def __call__(self, mask) -> Fraction:
        return self._value(check_mask(mask, self.n))

    def _value(self, mask: int) -> Fraction:
        raise NotImplementedError

    def table(self) -> IntTable:
        guard(self.n)
        return self._cached_table

    @cached_property
    def _cached_table(self) -> IntTable:
        return self._build_table()

    def _build_table(self) -> IntTable:
        return IntTable.from_fractions([self._value(m) for m in range(1 << self.n)])

    def values(self) -> list[Fraction]:
        return self.table().fractions()

    @property
    def full(self) -> int:
        return full_mask(self.n)


def evaluate(f: SetFunction, mask) -> Fraction:
    """Exact value of ``f`` on the subset ``mask``."""
    return f(mask)


@dataclass(frozen=True, eq=False)
class Table(SetFunction):
    n: int
    entries: tuple
    kind = "table"

    def __post_init__(self):
        check_ground_set(self.n)
        vals = tuple(nonneg(v, "table value") for v in self.entries)
        if len(vals) != 1 << self.n:
            raise DimensionMismatch(f"table needs {1 << self.n} values, got {len(vals)}")
        object.__setattr__(self, "entries", vals)

    def _value(self, mask):
        return self.entries[mask]


@dataclass(frozen=True, eq=False)
class BudgetedAdditive(SetFunction):
    """min(budget, sum of item values)."""

    items: tuple
    budget: Fraction
    kind = "budgeted_additive"

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(nonneg(a, "item value") for a in self.items))
        object.__setattr__(self, "budget", nonneg(self.budget, "budget"))
        check_ground_set(len(self.items))

    @property
    def n(self):
        return len(self.items)

    def _value(self, mask):
        s = sum((self.items[i] for i in elements_of(mask)), Fraction(0))
        return min(self.budget, s)

    def _build_table(self):
        nums, den = lift(list(self.items) + [self.budget])
        sums = K.modular_table(np.array(nums[:-1], dtype=object), self.n)
        return IntTable(K.as_exact(np.minimum(sums, nums[-1])), den)


def _hitting_table(n, x_by_mask: dict[int, Fraction]) -> IntTable:
    masks = sorted(x_by_mask)
    nums, den = lift([x_by_mask[m] for m in masks])
    x = np.zeros(1 << n, dtype=object)
    x[:] = 0
    for m, v in zip(masks, nums):
        x[m] += v
    z = K.zeta(x, n)
    # f(S) = (sum of all x) - (sum of x_T over T inside the complement of S)
    total = z[-1]
    return IntTable(K.as_exact(total - z[::-1]), den)


@dataclass(frozen=True, eq=False)
class CoverageSystem(SetFunction):
    """Weighted union size: item ``i`` covers ``sets[i]`` of an auxiliary universe."""

    weights: tuple
    sets: tuple
    kind = "coverage"

    def __post_init__(self):
        w = tuple(nonneg(x, "point weight") for x in self.weights)
        sets = tuple(frozenset(int(z) for z in s) for s in self.sets)
        for i, s in enumerate(sets):
            bad = [z for z in s if not 0 <= z < len(w)]
            if bad:
                raise DimensionMismatch(f"set {i} references points {bad} outside 0..{len(w) - 1}")
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "sets", sets)
        check_ground_set(len(sets))

    @property
    def n(self):
        return len(self.sets)

    @property
    def m(self):
        return len(self.weights)

    def _value(self, mask):
        covered = set()
        for i in elements_of(mask):
            covered |= self.sets[i]
        return sum((self.weights[z] for z in covered), Fraction(0))

    def point_hitters(self) -> dict[int, Fraction]:
        """Hitting weights: x_T = total weight of points covered exactly by items T."""
        owners = [0] * self.m
        for i, s in enumerate(self.sets):
            for z in s:
                owners[z] |= 1 << i
        x: dict[int, Fraction] = {}
        for z, t in enumerate(owners):
            if t and self.weights[z]:
                x[t] = x.get(t, Fraction(0)) + self.weights[z]
        return x

    def _build_table(self):
        return _hitting_table(self.n, self.point_hitters())


@dataclass(frozen=True, eq=False)
class HittingWeights(SetFunction):
    """f(S) = sum of x_T over nonempty T meeting S, with every x_T >= 0."""

    n: int
    weights: tuple = ()
    kind = "hitting"

    def __post_init__(self):
        check_ground_set(self.n)
        items = self.weights.items() if isinstance(self.weights, dict) else self.weights
        merged: dict[int, Fraction] = {}
        for t, x in items:
            t = check_mask(t, self.n)
            if t == 0:
                raise DimensionMismatch("the empty set carries no hitting weight")
            merged[t] = merged.get(t, Fraction(0)) + nonneg(x, "hitting weight")
        object.__setattr__(self, "weights", tuple((t, x) for t, x in sorted(merged.items()) if x))

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.weights)

    def _value(self, mask):
        return sum((x for t, x in self.weights if t & mask), Fraction(0))

    def _build_table(self):
        return _hitting_table(self.n, self.as_dict())


@dataclass(frozen=True, eq=False)
class DirectedCut(SetFunction):
    graph: WeightedDigraph
    kind = "directed_cut"

    @property
    def n(self):
        return self.graph.n

    def _value(self, mask):
        return _cut_value(self.graph.arcs, mask, undirected=False)

    def _build_table(self):
        return _cut_matrix_table(self.n, self.graph.arcs, undirected=False)


@dataclass(frozen=True, eq=False)
class UndirectedCut(SetFunction):
    graph: UndirectedGraph
    kind = "undirected_cut"

    @property
    def n(self):
        return self.graph.n

    def _value(self, mask):
        return _cut_value(self.graph.edges, mask, undirected=True)

    def _build_table(self):
        return _cut_matrix_table(self.n, self.graph.edges, undirected=True)


@dataclass(frozen=True, eq=False)
class TreeCut(SetFunction):
    tree: WeightedTree
    kind = "tree_cut"

    @property
    def n(self):
        return self.tree.n

    def _value(self, mask):
        return _cut_value(self.tree.edges, mask, undirected=True)

    def _build_table(self):
        return _cut_matrix_table(self.n, self.tree.edges, undirected=True)


@dataclass(frozen=True, eq=False)
class UniformProfile(SetFunction):
    """Value depends only on |S|: f(S) = profile[|S|], with profile[0] = 0."""

    profile: tuple
    kind = "uniform_profile"

    def __post_init__(self):
        p = tuple(nonneg(v, "profile value") for v in self.profile)
        if len(p) < 2:
            raise DimensionMismatch("a profile needs entries f_0..f_n with n >= 1")
        if p[0] != 0:
            raise DimensionMismatch("profile must start with f_0 = 0")
        object.__setattr__(self, "profile", p)
        check_ground_set(len(p) - 1)

    @property
    def n(self):
        return len(self.profile) - 1

    def _value(self, mask):
        return self.profile[popcount(mask)]

    def _build_table(self):
        nums, den = lift(self.profile)
        prof = np.array(nums, dtype=object)
        return IntTable(K.as_exact(prof[popcounts(self.n)]), den)


@dataclass(frozen=True, eq=False)
class ConcaveModular(SetFunction):
    """f(S) = profile[sum of a_i over S] for nonnegative integer weights a."""

    profile: tuple
    items: tuple
    kind = "concave_modular"

    def __post_init__(self):
        items = []
        for a in self.items:
            q = nonneg(a, "item weight")
            if q.denominator != 1:
                raise NonIntegerValues(f"item weight {q} is not an integer")
            items.append(int(q))
        object.__setattr__(self, "items", tuple(items))
        object.__setattr__(self, "profile", tuple(nonneg(v, "profile value") for v in self.profile))
        check_ground_set(len(items))
        if len(self.profile) != sum(items) + 1:
            raise DimensionMismatch(
                f"profile must have sum(items) + 1 = {sum(items) + 1} entries, got {len(self.profile)}"
            )

    @property
    def n(self):
        return len(self.items)

    def _value(self, mask):
        return self.profile[sum(self.items[i] for i in elements_of(mask))]

    def _build_table(self):
        nums, den = lift(self.profile)
        sums = K.modular_table(np.array(self.items, dtype=np.int64), self.n)
        return IntTable(K.as_exact(np.array(nums, dtype=object)[np.asarray(sums, dtype=np.int64)]), den)


@dataclass(frozen=True, order=False)
class Radical:
    """The nonnegative real square root of an exact rational radicand."""

    radicand: Fraction

    def __post_init__(self):
        object.__setattr__(self, "radicand", nonneg(self.radicand, "radicand"))

    def __float__(self):
        return math.sqrt(self.radicand)

    def _cmp(self, other):
        # sign of (self - other), decided on squares
        if isinstance(other, Radical):
            rhs = other.radicand
        else:
            q = to_fraction(other)
            if q < 0:
                return 1
            rhs = q * q
        return (self.radicand > rhs) - (self.radicand < rhs)

    def __eq__(self, other):
        try:
            return self._cmp(other) == 0
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(("radical", self.radicand))

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __repr__(self):
        return f"sqrt({self.radicand})"


@dataclass(frozen=True, eq=False)
class SqrtModular(SetFunction):
    """g(S) = sqrt(sum of a_e over S); values are :class:`Radical`."""

    items: tuple
    kind = "sqrt_modular"

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(nonneg(a, "coefficient") for a in self.items))
        check_ground_set(len(self.items))

    @property
    def n(self):
        return len(self.items)

    def radicand(self, mask) -> Fraction:
        mask = check_mask(mask, self.n)
        return sum((self.items[i] for i in elements_of(mask)), Fraction(0))

    def _value(self, mask):
        return Radical(self.radicand(mask))

    def _build_table(self):
        raise NonRationalValue("square-root values have no exact rational table; use radicand_table()")

    def radicand_table(self) -> IntTable:
        guard(self.n)
        nums, den = lift(self.items)
        return IntTable(K.as_exact(K.modular_table(np.array(nums, dtype=object), self.n)), den)


@dataclass(frozen=True, eq=False)
class ScaledSum(SetFunction):
    """Nonnegative combination sum of coef * term(S)."""

    n: int
    terms: tuple = ()
    kind = "scaled_sum"

    def __post_init__(self):
        check_ground_set(self.n)
        terms = []
        for coef, f in self.terms:
            coef = nonneg(coef, "coefficient")
            if f.n != self.n:
                raise DimensionMismatch(f"term on {f.n} elements inside a sum on {self.n}")
            if isinstance(f, SqrtModular):
                raise NonRationalValue("square-root terms cannot be summed exactly")
            terms.append((coef, f))
        object.__setattr__(self, "terms", tuple(terms))

    def _value(self, mask):
        return sum((c * f._value(mask) for c, f in self.terms), Fraction(0))

    def _build_table(self):
        if not self.terms:
            return IntTable(np.zeros(1 << self.n, dtype=np.int64), 1)
        tables = [f.table() for _, f in self.terms]
        den = 1
        for (c, _), t in zip(self.terms, tables):
            den = math.lcm(den, t.den * c.denominator)
        total = np.zeros(1 << self.n, dtype=object)
        total[:] = 0
        for (c, _), t in zip(self.terms, tables):
            factor = c.numerator * (den // (t.den * c.denominator))
            total = total + t.nums.astype(object) * factor
        return IntTable(K.as_exact(total), den)


@dataclass(frozen=True, eq=False)
class HardInstance(SetFunction):
    """The 0/1 lower-bound instances.

    ``general``: 1 iff S meets A and misses part of the complement of A.
    ``symmetric``: 1 iff S is neither empty nor everything.
    """

    hard_kind: str
    n: int
    a_mask: int = 0
    kind = "hard"

    def __post_init__(self):
        check_ground_set(self.n)
        if self.hard_kind == "general":
            a = check_mask(self.a_mask, self.n)
            if self.n % 2:
                raise BadInstanceSpec("the general instance needs an even ground set")
            if a == 0 or a == full_mask(self.n):
                raise BadInstanceSpec("A must be a proper nonempty subset")
        elif self.hard_kind == "symmetric":
            if self.a_mask:
                raise BadInstanceSpec("the symmetric instance takes no A")
        else:
            raise BadInstanceSpec(f"unknown hard instance kind {self.hard_kind!r}")

    def _value(self, mask):
        full = full_mask(self.n)
        if self.hard_kind == "general":
            abar = full ^ self.a_mask
            return Fraction(int(bool(mask & self.a_mask) and bool(abar & ~mask)))
        return Fraction(int(mask != 0 and mask != full))

    def _build_table(self):
        masks = np.arange(1 << self.n, dtype=np.int64)
        full = full_mask(self.n)
        if self.hard_kind == "general":
            hit = ((masks & self.a_mask) != 0) & (((full ^ masks) & (full ^ self.a_mask)) != 0)
        else:
            hit = (masks != 0) & (masks != full)
        return IntTable(hit.astype(np.int64), 1)


# --------------------------------------------------------------------------
# construction from plain data


def _field(spec, key, path):
    if key not in spec:
        raise SchemaError(f"missing field {key!r}", path)
    return spec[key]


def _rationals(seq, path):
    if not isinstance(seq, (list, tuple)):
        raise SchemaError("expected an array of rationals", path)
    out = []
    for i, x in enumerate(seq):
        try:
            q = to_fraction(x)
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"not an exact rational: {x!r} ({exc})", f"{path}[{i}]") from None
        if q < 0:
            raise NegativeValue(f"{path}[{i}]: value must be nonnegative, got {q}")
        out.append(q)
    return out


def _rational(x, path):
    return _rationals([x], path)[0]


def _index_list(seq, n, path):
    if not isinstance(seq, (list, tuple)):
        raise SchemaError("expected an array of element indices", path)
    for i, e in enumerate(seq):
        if isinstance(e, bool) or not isinstance(e, int) or not 0 <= e < n:
            raise SchemaError(f"element index must be an int in 0..{n - 1}", f"{path}[{i}]")
    return list(seq)


def _weighted_pairs(seq, n, path):
    if not isinstance(seq, (list, tuple)):
        raise SchemaError("expected an array of [u, v, weight] triples", path)
    out = []
    for i, item in enumerate(seq):
        p = f"{path}[{i}]"
        if not isinstance(item, (list, tuple)) or len(item) != 3:
            raise SchemaError("expected [u, v, weight]", p)
        u, v = _index_list(item[:2], n, p)
        out.append((u, v, _rational(item[2], p + "[2]")))
    return out


def build_oracle(spec: dict, n: int | None = None, path: str = "function") -> SetFunction:
    """Build an oracle from a plain mapping ``{"kind": ..., ...}``.

    ``n`` is the ground-set size when the variant does not imply it; if both
    are present they must agree.
    """
    if not isinstance(spec, dict):
        raise SchemaError("function must be an object", path)
    if n is not None:
        check_ground_set(n)
    kind = _field(spec, "kind", path)

    def need_n():
        if n is None:
            raise SchemaError(f"kind {kind!r} needs ground_set", path)
        return n

    if kind == "table":
        f = Table(need_n(), tuple(_rationals(_field(spec, "values", path), path + ".values")))
    elif kind == "budgeted_additive":
        f = BudgetedAdditive(
            tuple(_rationals(_field(spec, "values", path), path + ".values")),
            _rational(_field(spec, "budget", path), path + ".budget"),
        )
    elif kind == "coverage":
        weights = _rationals(_field(spec, "weights", path), path + ".weights")
        sets = _field(spec, "sets", path)
        if not isinstance(sets, list):
            raise SchemaError("expected an array of point-index arrays", path + ".sets")
        sets = [_index_list(s, len(weights), f"{path}.sets[{i}]") for i, s in enumerate(sets)]
        f = CoverageSystem(tuple(weights), tuple(sets))
    elif kind == "hitting":
        items = _field(spec, "weights", path)
        if not isinstance(items, list):
            raise SchemaError("expected an array of {set, value}", path + ".weights")
        pairs = []
        for i, item in enumerate(items):
            p = f"{path}.weights[{i}]"
            if not isinstance(item, dict):
                raise SchemaError("expected {set, value}", p)
            members = _index_list(_field(item, "set", p), need_n(), p + ".set")
            if not members:
                raise SchemaError("hitting sets must be nonempty", p + ".set")
            pairs.append((mask_of(members), _rational(_field(item, "value", p), p + ".value")))
        f = HittingWeights(need_n(), tuple(pairs))
    elif kind == "directed_cut":
        arcs = _weighted_pairs(_field(spec, "arcs", path), need_n(), path + ".arcs")
        f = DirectedCut(WeightedDigraph(n, tuple(arcs)))
    elif kind == "undirected_cut":
        edges = _weighted_pairs(_field(spec, "edges", path), need_n(), path + ".edges")
        f = UndirectedCut(UndirectedGraph(n, tuple(edges)))
    elif kind == "tree_cut":
        edges = _weighted_pairs(_field(spec, "edges", path), need_n(), path + ".edges")
        f = TreeCut(WeightedTree(n, tuple(edges)))
    elif kind == "uniform_profile":
        f = UniformProfile(tuple(_rationals(_field(spec, "profile", path), path + ".profile")))
    elif kind == "concave_modular":
        f = ConcaveModular(
            tuple(_rationals(_field(spec, "profile", path), path + ".profile")),
            tuple(_rationals(_field(spec, "values", path), path + ".values")),
        )
    elif kind == "sqrt_modular":
        f = SqrtModular(tuple(_rationals(_field(spec, "values", path), path + ".values")))
    elif kind == "scaled_sum":
        terms = _field(spec, "terms", path)
        if not isinstance(terms, list):
            raise SchemaError("expected an array of {coef, function}", path + ".terms")
        built = []
        for i, item in enumerate(terms):
            p = f"{path}.terms[{i}]"
            if not isinstance(item, dict):
                raise SchemaError("expected {coef, function}", p)
            coef = _rational(_field(item, "coef", p), p + ".coef")
            built.append((coef, build_oracle(_field(item, "function", p), n, p + ".function")))
        f = ScaledSum(need_n(), tuple(built))
    elif kind == "expected_coverage":
        from .construct import budgeted_expected_coverage

        base = BudgetedAdditive(
            tuple(_rationals(_field(spec, "values", path), path + ".values")),
            _rational(_field(spec, "budget", path), path + ".budget"),
        )
        f = budgeted_expected_coverage(base)
    elif kind == "hard":
        from .certify import HardInstanceSpec, hard_instance

        hk = _field(spec, "hard_kind", path)
        a_set = spec.get("a_set")
        a_mask = None if a_set is None else mask_of(_index_list(a_set, need_n(), path + ".a_set"))
        f = hard_instance(HardInstanceSpec(hk, n if n is not None else 0, a_mask, spec.get("k")))
    else:
        raise SchemaError(f"unknown function kind {kind!r}", path + ".kind")

    if n is not None and f.n != n:
        raise DimensionMismatch(f"{path}: function has {f.n} elements but ground_set is {n}")
    return f
