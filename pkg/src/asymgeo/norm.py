"""Polyhedral asymmetric norms: gauges of the form max(0, max_i <a_i, x>).

A gauge built from finitely many linear functionals is positively
homogeneous and subadditive by construction; definiteness (the pair
q(x) = q(-x) = 0 forces x = 0) holds exactly when the functionals span the
whole space, which the constructor enforces.  The module also extracts the
degeneracy cone {x : q(x) = 0}, evaluates the symmetrized norm, and builds
gauge balls as (possibly half-open) polyhedra.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from asymgeo.ratlp import Rational, Vec, as_vec, dot, rank, rat, vneg, zero_vec
from asymgeo.polyhedron import (
    Cone,
    Constraint,
    PartialPolyhedron,
    cone_from_rows,
    in_conv_plus_cone,
)


class DefinitenessViolation(ValueError):
    """The functionals span a proper subspace, so the gauge and its reverse
    both vanish along a line and the symmetrized gauge is not a norm."""


@dataclass(frozen=True)
class AsymNorm:
    """Gauge q(x) = max(0, max_i <a_i, x>) over exact rational functionals.

    The zero functional is implicit (it is the 0 inside the max), so q >= 0
    holds structurally.  Functional rows are stored exactly as supplied;
    redundant rows never change values.
    """

    dim: int
    functionals: tuple[Vec, ...]

    def __post_init__(self):
        rows = tuple(as_vec(f) for f in self.functionals)
        object.__setattr__(self, "functionals", rows)


@dataclass(frozen=True)
class DegeneracyCone:
    """The pointed cone of directions with vanishing gauge, by generators."""

    dim: int
    generators: tuple[Vec, ...]

    def as_cone(self) -> Cone:
        return Cone(self.dim, self.generators)


class Closedness(enum.Enum):
    OPEN = "OPEN"
    CLOSED = "CLOSED"


@dataclass(frozen=True)
class Ball:
    center: Vec
    radius: Rational
    closedness: Closedness
    as_set: PartialPolyhedron


def make_norm(dim: int, functionals) -> AsymNorm:
    """Validated gauge; raises DefinitenessViolation on rank-deficient input."""
    if dim < 1:
        raise ValueError("dimension must be positive")
    rows = [as_vec(f) for f in functionals]
    if not rows:
        raise ValueError("at least one functional is required")
    for r in rows:
        if len(r) != dim:
            raise ValueError(f"functional of length {len(r)} in dimension {dim}")
    if rank(rows) < dim:
        raise DefinitenessViolation(
            "functionals span a proper subspace; the gauge would vanish in both "
            "directions along a line"
        )
    return AsymNorm(dim, tuple(rows))


def gauge_eval(norm: AsymNorm, x: Vec) -> Rational:
    """q(x) = max(0, max_i <a_i, x>); always nonnegative."""
    x = as_vec(x)
    if len(x) != norm.dim:
        raise ValueError(f"point of length {len(x)} in dimension {norm.dim}")
    best = Fraction(0)
    for a in norm.functionals:
        v = dot(a, x)
        if v > best:
            best = v
    return best


def sym_gauge_eval(norm: AsymNorm, x: Vec) -> Rational:
    """The symmetrization max(q(x), q(-x)); a genuine norm."""
    x = as_vec(x)
    return max(gauge_eval(norm, x), gauge_eval(norm, vneg(x)))


def degeneracy_cone(norm: AsymNorm) -> DegeneracyCone:
    """Generators of {x : q(x) = 0} = {x : <a_i, x> <= 0 for all i}.

    Pointedness is guaranteed by the constructor's rank check, so the
    double description of the functional rows never yields lineality.
    """
    gens, lin = cone_from_rows(norm.functionals, norm.dim)
    assert not lin, "a definite gauge has a pointed degeneracy cone"
    return DegeneracyCone(norm.dim, gens)


def ball(norm: AsymNorm, center: Vec, radius, closedness: Closedness) -> Ball:
    """Gauge ball around ``center`` as a partial polyhedron.

    Open: {y : q(y - center) < radius}; closed: <=.  The implicit zero
    functional makes the open radius-0 ball empty, while the closed
    radius-0 ball is the degeneracy cone translated to the center.
    """
    center = as_vec(center)
    radius = rat(radius)
    if len(center) != norm.dim:
        raise ValueError(f"center of length {len(center)} in dimension {norm.dim}")
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    strict = closedness is Closedness.OPEN
    rows = [Constraint(a, radius + dot(a, center), strict) for a in norm.functionals]
    if strict and radius == 0:
        # 0 < radius fails identically: the open ball of radius 0 is empty
        rows.append(Constraint(zero_vec(norm.dim), Fraction(0), True))
    return Ball(center, radius, closedness, PartialPolyhedron(norm.dim, tuple(rows)))


def reduce_functionals(norm: AsymNorm) -> AsymNorm:
    """Optional normalization: drop rows that never attain the max.

    A row is redundant iff it lies in the convex hull of the remaining rows
    and the origin, since the gauge is the support function of that hull.
    """
    rows = list(norm.functionals)
    i = 0
    while i < len(rows):
        others = rows[:i] + rows[i + 1:] + [zero_vec(norm.dim)]
        if in_conv_plus_cone(rows[i], others, ()):
            rows.pop(i)
        else:
            i += 1
    return AsymNorm(norm.dim, tuple(rows))
