"""Small exact linear programs over Fractions.

Only the shape ``max c.x  s.t.  A x <= b, x >= 0`` with ``b >= 0`` is
supported, which makes the origin a feasible starting basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations


@dataclass(frozen=True)
class LPSolution:
    value: Fraction
    x: tuple
    y: tuple  # optimal dual prices, one per row of A


def _check_shape(A, b, c):
    m, d = len(A), len(c)
    if len(b) != m or any(len(row) != d for row in A):
        raise ValueError("inconsistent LP dimensions")
    if any(bi < 0 for bi in b):
        raise ValueError("right-hand side must be nonnegative")
    return m, d


def simplex_max(A, b, c) -> LPSolution:
    """Dense tableau simplex with Bland's rule (terminates without cycling)."""
    m, d = _check_shape(A, b, c)
    A = [[Fraction(v) for v in row] for row in A]
    # columns 0..d-1 structural, d..d+m-1 slack, last column the rhs
    rows = [A[i] + [Fraction(int(i == j)) for j in range(m)] + [Fraction(b[i])] for i in range(m)]
    cost = [-Fraction(v) for v in c] + [Fraction(0)] * m + [Fraction(0)]
    basis = [d + i for i in range(m)]
    width = d + m
    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            a = rows[i][enter]
            if a > 0:
                ratio = rows[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            raise ValueError("LP is unbounded")
        r = best[1]
        piv = rows[r][enter]
        rows[r] = [v / piv for v in rows[r]]
        for i in range(m):
            if i != r and rows[i][enter]:
                fac = rows[i][enter]
                rows[i] = [v - fac * w for v, w in zip(rows[i], rows[r])]
        fac = cost[enter]
        cost = [v - fac * w for v, w in zip(cost, rows[r])]
        basis[r] = enter
    x = [Fraction(0)] * d
    for i, j in enumerate(basis):
        if j < d:
            x[j] = rows[i][-1]
    y = tuple(cost[d + i] for i in range(m))
    return LPSolution(cost[-1], tuple(x), y)


def certify(A, b, c, sol: LPSolution) -> bool:
    """Exact optimality check: primal and dual feasible with equal objectives."""
    m, d = _check_shape(A, b, c)
    if any(v < 0 for v in sol.x) or any(v < 0 for v in sol.y):
        return False
    for i in range(m):
        if sum(A[i][j] * sol.x[j] for j in range(d)) > b[i]:
            return False
    for j in range(d):
        if sum(A[i][j] * sol.y[i] for i in range(m)) < c[j]:
            return False
    primal = sum(c[j] * sol.x[j] for j in range(d))
    dual = sum(b[i] * sol.y[i] for i in range(m))
    return primal == dual == sol.value


def _solve_square(M, rhs):
    n = len(M)
    aug = [list(row) + [r] for row, r in zip(M, rhs)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                fac = aug[i][col]
                aug[i] = [v - fac * w for v, w in zip(aug[i], aug[col])]
    return [aug[i][n] for i in range(n)]


def vertex_max(A, b, c):
    """Maximum of c.x over the basic feasible points of {A x <= b, x >= 0}.

    Enumerates every choice of d tight constraints among the m + d
    inequalities. Exponential; meant as an independent check on tiny LPs.
    """
    m, d = _check_shape(A, b, c)
    rows = [[Fraction(v) for v in row] for row in A]
    rows += [[Fraction(-int(i == j)) for j in range(d)] for i in range(d)]
    rhs = [Fraction(v) for v in b] + [Fraction(0)] * d
    best = None
    for active in combinations(range(m + d), d):
        x = _solve_square([rows[i] for i in active], [rhs[i] for i in active])
        if x is None:
            continue
        if all(sum(r[j] * x[j] for j in range(d)) <= h for r, h in zip(rows, rhs)):
            val = sum(Fraction(c[j]) * x[j] for j in range(d))
            if best is None or val > best[0]:
                best = (val, tuple(x))
    if best is None:
        raise ValueError("no basic feasible point")
    return best
