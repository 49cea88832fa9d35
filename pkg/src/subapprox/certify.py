"""Lower-bound instances and exact LP certificates for the coverage gap.

The budgeted-uniform instance f_k (n = k^2 unit items, budget k) is the
family on which no coverage function g with beta * f_k <= g <= f_k can reach
beta above 1 - C(k^2 - k, k) / C(k^2, k); that value is the objective of an
explicit feasible solution to the symmetrized dual LP, which
:func:`dual_certificate` rebuilds and checks in exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, isqrt

from . import _lp
from .construct import coverage_ratio
from .core import BudgetedAdditive, HardInstance, SetFunction, full_mask
from .errors import BadInstanceSpec, InstanceTooLarge

_KIND_ALIASES = {
    "general": "general",
    "symmetric": "symmetric",
    "budgeted-uniform": "budgeted-uniform",
    "budgeted_uniform": "budgeted-uniform",
    "budgeted": "budgeted-uniform",
}


def binom(a: int, b: int) -> int:
    """C(a, b), taken as 0 outside 0 <= b <= a."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class HardInstanceSpec:
    kind: str
    n: int = 0
    a_mask: int | None = None
    k: int | None = None

    def __post_init__(self):
        kind = _KIND_ALIASES.get(self.kind)
        if kind is None:
            raise BadInstanceSpec(f"unknown hard instance kind {self.kind!r}")
        object.__setattr__(self, "kind", kind)
        n = self.n or 0
        if kind == "budgeted-uniform":
            k = self.k
            if k is None:
                r = isqrt(n) if n > 0 else 0
                if r < 1 or r * r != n:
                    raise BadInstanceSpec("budgeted-uniform needs k, or n a perfect square")
                k = r
            if isinstance(k, bool) or not isinstance(k, int) or k < 1:
                raise BadInstanceSpec("k must be a positive integer")
            if n and n != k * k:
                raise BadInstanceSpec(f"budgeted-uniform needs n = k^2 = {k * k}, got {n}")
            object.__setattr__(self, "k", k)
            object.__setattr__(self, "n", k * k)
            return
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise BadInstanceSpec("n must be a positive integer")
        if kind == "general":
            if n % 2:
                raise BadInstanceSpec("the general instance needs an even n")
            a = (1 << (n // 2)) - 1 if self.a_mask is None else self.a_mask
            if a <= 0 or a >= full_mask(n):
                raise BadInstanceSpec("A must be a proper nonempty subset")
            object.__setattr__(self, "a_mask", a)


def hard_instance(spec: HardInstanceSpec) -> SetFunction:
    if spec.kind == "budgeted-uniform":
        return BudgetedAdditive((Fraction(1),) * spec.n, spec.k)
    if spec.kind == "general":
        return HardInstance("general", spec.n, spec.a_mask)
    return HardInstance("symmetric", spec.n)


# --------------------------------------------------------------------------
# 1/e enclosure


def inv_e_bounds(terms: int = 20) -> tuple[Fraction, Fraction]:
    """Rationals lo < 1/e < hi from consecutive partial sums of sum (-1)^i / i!."""
    s = Fraction(0)
    partial = []
    for i in range(terms + 2):
        s += Fraction((-1) ** i, factorial(i))
        partial.append(s)
    a, b = partial[-2], partial[-1]
    return min(a, b), max(a, b)


def compare_one_minus_inv_e(q: Fraction) -> int:
    """Sign of q - (1 - 1/e), refining the enclosure until it decides."""
    terms = 10
    while terms <= 400:
        lo, hi = inv_e_bounds(terms)
        if q > 1 - lo:
            return 1
        if q < 1 - hi:
            return -1
        terms *= 2
    raise ArithmeticError(f"{q} too close to 1 - 1/e to separate")


# --------------------------------------------------------------------------
# dual certificate


@dataclass(frozen=True)
class DualCertificate:
    k: int
    n: int
    v_k: Fraction
    u_1: Fraction
    u_n: Fraction
    c: tuple
    delta_c_k: int
    feasible: bool
    objective: Fraction
    closed_form: Fraction

    @property
    def delta_c(self) -> tuple:
        return tuple(binom(self.n - j - 1, self.k - 1) for j in range(1, self.n + 1))


def _f_k(s: int, k: int) -> int:
    return min(s, k)


def dual_certificate(k: int) -> DualCertificate:
    """Rebuild the explicit symmetric dual solution for f_k and check it exactly.

    Variables: v_k = 1 / (C(n,k) k), u_1 = dc_k v_k, u_n = (c_k - k dc_k) v_k,
    all others 0, where c_j = C(n,k) - C(n-j,k) and dc_j = c_{j+1} - c_j.
    """
    if isinstance(k, bool) or not isinstance(k, int) or not 1 <= k <= 20:
        raise BadInstanceSpec("k must be an integer in 1..20")
    n = k * k
    total = binom(n, k)
    c = tuple(total - binom(n - j, k) for j in range(1, n + 1))
    dck = binom(n - k - 1, k - 1)
    ck = c[k - 1]
    v_k = Fraction(1, total * k)
    u_1 = dck * v_k
    u_n = (ck - k * dck) * v_k

    u = [Fraction(0)] * (n + 1)
    v = [Fraction(0)] * (n + 1)
    u[1] += u_1
    u[n] += u_n
    v[k] = v_k

    ok = u_1 >= 0 and u_n >= 0 and v_k >= 0
    ok = ok and all((j - k) * dck + ck >= c[j - 1] for j in range(1, n + 1))
    ok = ok and sum(_f_k(j, k) * binom(n, j) * v[j] for j in range(1, n + 1)) >= 1
    # the full symmetrized covering constraints, one per set size j
    ok = ok and all(
        sum((binom(n, i) - binom(n - j, i)) * (u[i] - v[i]) for i in range(1, n + 1)) >= 0
        for j in range(1, n + 1)
    )
    objective = sum((_f_k(j, k) * binom(n, j) * u[j] for j in range(1, n + 1)), Fraction(0))
    closed = 1 - Fraction(binom(n - k, k), binom(n, k))
    ok = ok and objective == k * ck * v_k == closed
    return DualCertificate(k, n, v_k, u_1, u_n, c, dck, ok, objective, closed)


def primal_construction_bound(k: int) -> Fraction:
    """1 - (1 - 1/k)^k: the ratio reached by the expected-coverage construction on f_k."""
    if k < 1:
        raise BadInstanceSpec("k must be positive")
    return coverage_ratio(k)


# --------------------------------------------------------------------------
# symmetrized primal


@dataclass(frozen=True)
class PrimalOptimum:
    k: int
    alpha: Fraction
    x: tuple  # weight shared by every hitting set of size j, j = 1..n
    certified: bool


def _symmetrized_lp(k: int):
    n = k * k
    A, b = [], []
    hit = [[binom(n, j) - binom(n - s, j) for j in range(1, n + 1)] for s in range(1, n + 1)]
    for s in range(1, n + 1):
        A.append([0] + hit[s - 1])
        b.append(_f_k(s, k))
    for s in range(1, n + 1):
        A.append([_f_k(s, k)] + [-h for h in hit[s - 1]])
        b.append(0)
    c = [1] + [0] * n
    return A, b, c


def symmetrized_primal_optimum(k: int, method: str = "simplex") -> PrimalOptimum:
    """Best beta over coverage functions whose hitting weights depend only on |T|.

    ``method="simplex"`` solves the LP exactly and certifies optimality with
    the dual prices; ``method="vertices"`` enumerates basic feasible points
    (only practical for k <= 2).
    """
    if k < 1 or k * k > 10:
        raise InstanceTooLarge("symmetrized primal is limited to n = k^2 <= 10")
    A, b, c = _symmetrized_lp(k)
    if method == "vertices":
        value, z = _lp.vertex_max(A, b, c)
        return PrimalOptimum(k, value, z[1:], True)
    if method != "simplex":
        raise ValueError(f"unknown method {method!r}")
    sol = _lp.simplex_max(A, b, c)
    return PrimalOptimum(k, sol.value, sol.x[1:], _lp.certify(A, b, c, sol))
