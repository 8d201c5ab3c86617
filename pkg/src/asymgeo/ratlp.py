"""Exact rational linear algebra and linear programming kernel.

Everything downstream (gauge evaluation, polyhedra, compactness
certificates) rests on this module.  Vectors are plain tuples of
``fractions.Fraction``, linear programs are solved by a two-phase dense
simplex with Bland's pivoting rule, and there is deliberately no floating
point anywhere.  Instances are desk scale (dimension <= 6, at most a few
hundred rows), so exactness and determinism win over speed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional, Sequence

Rational = Fraction

# Points, directions and functional rows all share one representation.
Vec = tuple[Rational, ...]
Point = Vec
LinFunctional = Vec


def rat(value, den: Optional[int] = None) -> Rational:
    """Coerce ``value`` (int, string like ``"3/5"``, or Fraction) to Rational."""
    if den is not None:
        return Fraction(value, den)
    return Fraction(value)


def as_vec(coords: Iterable) -> tuple[Rational, ...]:
    return tuple(Fraction(c) for c in coords)


def zero_vec(dim: int) -> tuple[Rational, ...]:
    return (Fraction(0),) * dim


def dot(u: Sequence[Rational], v: Sequence[Rational]) -> Rational:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vneg(u):
    return tuple(-a for a in u)


def vscale(t: Rational, u) -> tuple[Rational, ...]:
    t = Fraction(t)
    return tuple(t * a for a in u)


def is_zero_vec(u) -> bool:
    return all(a == 0 for a in u)


def primitive(u) -> tuple[Rational, ...]:
    """Scale ``u`` to integer entries with gcd 1, preserving direction.

    The zero vector is returned unchanged.  Used to canonicalize ray
    directions and constraint rows so that equal directions compare equal.
    """
    if is_zero_vec(u):
        return zero_vec(len(u))
    mult = lcm(*(a.denominator for a in u))
    ints = [int(a * mult) for a in u]
    g = gcd(*ints)
    return tuple(Fraction(n // g) for n in ints)


# ---------------------------------------------------------------------------
# Exact elimination helpers
# ---------------------------------------------------------------------------


def rank(rows: Sequence[Sequence[Rational]]) -> int:
    """Exact rank of the given rows via Gaussian elimination over Q."""
    work = [list(map(Fraction, r)) for r in rows]
    if not work:
        return 0
    ncols = len(work[0])
    for r in work:
        if len(r) != ncols:
            raise ValueError("rows of differing length")
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][col] != 0), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = 1 / work[r][col]
        work[r] = [inv * x for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col] != 0:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        r += 1
        if r == len(work):
            break
    return r


def rref(rows: Sequence[Sequence[Rational]]) -> tuple[list[list[Rational]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot column indices)."""
    work = [list(map(Fraction, r)) for r in rows]
    pivots: list[int] = []
    if not work:
        return [], pivots
    ncols = len(work[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][col] != 0), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = 1 / work[r][col]
        work[r] = [inv * x for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col] != 0:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def null_space_basis(rows: Sequence[Sequence[Rational]], dim: int) -> list[tuple[Rational, ...]]:
    """Deterministic basis of {x : <row, x> = 0 for every row}."""
    red, pivots = rref(rows)
    free = [c for c in range(dim) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * dim
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        basis.append(primitive(v))
    return basis


def invert(rows: Sequence[Sequence[Rational]]) -> list[list[Rational]]:
    """Exact inverse of a square matrix given as rows; raises on singular input."""
    n = len(rows)
    work = [list(map(Fraction, r)) + [Fraction(1) if j == i else Fraction(0) for j in range(n)]
            for i, r in enumerate(rows)]
    for col in range(n):
        piv = next((i for i in range(col, n) if work[i][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        work[col], work[piv] = work[piv], work[col]
        inv = 1 / work[col][col]
        work[col] = [inv * x for x in work[col]]
        for i in range(n):
            if i != col and work[i][col] != 0:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[col])]
    return [r[n:] for r in work]


# ---------------------------------------------------------------------------
# Linear programming
# ---------------------------------------------------------------------------


class LpStatus(enum.Enum):
    OPTIMAL = "OPTIMAL"
    UNBOUNDED = "UNBOUNDED"
    INFEASIBLE = "INFEASIBLE"


@dataclass(frozen=True)
class LpOutcome:
    """Result of ``lp_solve``.

    ``witness`` is the optimizer when OPTIMAL and a recession direction with
    positive objective growth when UNBOUNDED.
    """

    status: LpStatus
    value: Optional[Rational] = None
    witness: Optional[tuple[Rational, ...]] = None


def lp_solve(objective: Sequence[Rational],
             constraints: Sequence[tuple[Sequence[Rational], Rational]]) -> LpOutcome:
    """Maximize <objective, x> subject to <c_j, x> <= b_j, x free.

    Two-phase simplex over exact rationals with Bland's rule, so the result
    is deterministic and cycling is impossible.  Free variables are split
    into positive and negative parts internally.
    """
    c_obj = as_vec(objective)
    d = len(c_obj)
    rows = []
    for cj, bj in constraints:
        cj = as_vec(cj)
        if len(cj) != d:
            raise ValueError(f"constraint dimension {len(cj)} != objective dimension {d}")
        rows.append((cj, Fraction(bj)))

    m = len(rows)
    nreal = 2 * d + m  # u parts, w parts, slacks

    # Tableau rows over columns [u | w | s | artificials], rhs kept >= 0.
    tab: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    basis: list[int] = []
    art_cols: list[int] = []
    for i, (cj, bj) in enumerate(rows):
        flip = bj < 0
        sgn = -1 if flip else 1
        row = [sgn * x for x in cj] + [-sgn * x for x in cj] \
            + [Fraction(0)] * m
        row[2 * d + i] = Fraction(sgn)
        tab.append(row)
        rhs.append(sgn * bj)
        basis.append(-1)  # fixed below

    ncols = nreal
    for i, (cj, bj) in enumerate(rows):
        if bj < 0:
            for r in tab:
                r.append(Fraction(0))
            tab[i][ncols] = Fraction(1)
            basis[i] = ncols
            art_cols.append(ncols)
            ncols += 1
        else:
            basis[i] = 2 * d + i

    def run_simplex(cost: list[Fraction]) -> Optional[int]:
        """Bland simplex on the current tableau; returns entering column on
        unboundedness, None at optimality."""
        # objective row expressed over the current basis
        obj = list(cost)
        for i, bi in enumerate(basis):
            f = obj[bi]
            if f != 0:
                row_i = tab[i]
                for j in range(len(obj)):
                    obj[j] -= f * row_i[j]
        while True:
            enter = next((j for j in range(len(obj)) if obj[j] > 0), None)
            if enter is None:
                return None
            best = None  # (ratio, basis var, row index)
            for i in range(len(tab)):
                a = tab[i][enter]
                if a > 0:
                    key = (rhs[i] / a, basis[i])
                    if best is None or key < best[0:2]:
                        best = (key[0], key[1], i)
            if best is None:
                return enter
            _pivot(best[2], enter)
            # update objective row
            f = obj[enter]
            if f != 0:
                row_i = tab[best[2]]
                obj[:] = [x - f * y if y else x for x, y in zip(obj, row_i)]

    def _pivot(i: int, j: int) -> None:
        piv = tab[i][j]
        inv = 1 / piv
        tab[i] = [inv * x if x else x for x in tab[i]]
        rhs[i] *= inv
        for k in range(len(tab)):
            if k != i:
                f = tab[k][j]
                if f != 0:
                    row_i = tab[i]
                    tab[k] = [x - f * y if y else x for x, y in zip(tab[k], row_i)]
                    rhs[k] -= f * rhs[i]
        basis[i] = j

    if art_cols:
        cost1 = [Fraction(0)] * ncols
        for a in art_cols:
            cost1[a] = Fraction(-1)
        enter = run_simplex(cost1)
        assert enter is None, "phase one cannot be unbounded"
        if sum(rhs[i] for i in range(m) if basis[i] in art_cols) > 0:
            return LpOutcome(LpStatus.INFEASIBLE)
        # pivot remaining artificials out of the basis, or drop zero rows
        keep = []
        for i in range(len(tab)):
            if basis[i] in art_cols:
                j = next((j for j in range(nreal) if tab[i][j] != 0), None)
                if j is None:
                    continue  # redundant row (0 = 0)
                _pivot(i, j)
            keep.append(i)
        tab[:] = [tab[i][:nreal] for i in keep]
        rhs[:] = [rhs[i] for i in keep]
        basis[:] = [basis[i] for i in keep]
        ncols = nreal

    cost2 = [Fraction(0)] * ncols
    for j in range(d):
        cost2[j] = c_obj[j]
        cost2[d + j] = -c_obj[j]
    enter = run_simplex(cost2)

    if enter is not None:
        delta = [Fraction(0)] * nreal
        delta[enter] = Fraction(1)
        for i, bi in enumerate(basis):
            delta[bi] = -tab[i][enter]
        direction = tuple(delta[j] - delta[d + j] for j in range(d))
        return LpOutcome(LpStatus.UNBOUNDED, witness=direction)

    xs = [Fraction(0)] * nreal
    for i, bi in enumerate(basis):
        xs[bi] = rhs[i]
    point = tuple(xs[j] - xs[d + j] for j in range(d))
    return LpOutcome(LpStatus.OPTIMAL, value=dot(c_obj, point), witness=point)


def feasible_nonneg(matrix_rows: Sequence[Sequence[Rational]],
                    rhs_col: Sequence[Rational]) -> bool:
    """Does A lam = b admit lam >= 0?  Phase-one simplex, Bland's rule.

    Dedicated kernel for the conic/convex combination tests, which are by
    far the hottest queries: variables are already sign-constrained, so no
    split is needed and only the artificial phase runs.
    """
    m = len(matrix_rows)
    if m != len(rhs_col):
        raise ValueError("row/rhs count mismatch")
    n = len(matrix_rows[0]) if m else 0
    tab: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for row, bi in zip(matrix_rows, rhs_col):
        row = [Fraction(x) for x in row]
        bi = Fraction(bi)
        if len(row) != n:
            raise ValueError("ragged matrix")
        if bi < 0:
            row = [-x for x in row]
            bi = -bi
        ext = [Fraction(0)] * m
        tab.append(row + ext)
        rhs.append(bi)
    for i in range(m):
        tab[i][n + i] = Fraction(1)
    basis = list(range(n, n + m))
    obj = [sum((tab[i][j] for i in range(m)), Fraction(0)) for j in range(n)] \
        + [Fraction(0)] * m

    while True:
        enter = next((j for j in range(n + m) if obj[j] > 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                key = (rhs[i] / a, basis[i])
                if best is None or key < best[0:2]:
                    best = (key[0], key[1], i)
        assert best is not None, "phase one is bounded"
        i = best[2]
        piv = tab[i][enter]
        inv = 1 / piv
        tab[i] = [inv * x if x else x for x in tab[i]]
        rhs[i] *= inv
        for k in range(m):
            if k != i:
                f = tab[k][enter]
                if f != 0:
                    row_i = tab[i]
                    tab[k] = [x - f * y if y else x for x, y in zip(tab[k], row_i)]
                    rhs[k] -= f * rhs[i]
        f = obj[enter]
        if f != 0:
            row_i = tab[i]
            obj[:] = [x - f * y if y else x for x, y in zip(obj, row_i)]
        basis[i] = enter

    return sum(rhs[i] for i in range(m) if basis[i] >= n) == 0
