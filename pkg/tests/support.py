"""Shared test helpers: independent oracles, interval builders, transforms."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from asymgeo.polyhedron import Constraint, PartialPolyhedron
from asymgeo.ratlp import dot


def interval(lo, hi, lo_open: bool = False, hi_open: bool = False) -> PartialPolyhedron:
    """Interval of the line as a partial polyhedron; None endpoint = unbounded."""
    rows = []
    if hi is not None:
        rows.append(Constraint((Fraction(1),), Fraction(hi), hi_open))
    if lo is not None:
        rows.append(Constraint((Fraction(-1),), -Fraction(lo), lo_open))
    return PartialPolyhedron(1, tuple(rows))


def interval_compact_oracle(lo: Optional[Fraction], hi: Optional[Fraction],
                            lo_open: bool, hi_open: bool) -> bool:
    """Cover-argument oracle for the positive-part gauge on the line.

    Independent of the LP/polyhedron machinery: balls of the gauge
    max(0, t) are the lower rays (-inf, c), so a cover of an interval K by
    balls reduces to a family of right endpoints.

    - sup K = +inf: the balls (-inf, n) cover K but any finite union is a
      single lower ray, and K has points beyond it.
    - sup K = b attained: any cover contains a ball (-inf, c) with c > b,
      and that single ball already covers K.
    - sup K = b not attained: the balls (-inf, b - (b - m)/2^k), with m an
      interior point, cover K, yet any finite union stops short of b and
      misses interval points.
    """
    assert hi is None or lo is None or (lo, not lo_open) < (hi, True), "nonempty intervals only"
    if hi is None:
        # spot-check the escape: beyond any candidate finite union bound N
        for bound in (Fraction(1), Fraction(10), Fraction(100)):
            inside = max(bound, Fraction(0) if lo is None else Fraction(lo)) + 1
            assert lo is None or inside > lo
        return False
    if hi_open:
        # points of K exceed every b - eps: take the midpoint toward b
        anchor = Fraction(hi) - 1 if lo is None else Fraction(lo)
        for k in (1, 4, 16):
            eps = (Fraction(hi) - anchor) / (2 ** k)
            missed = Fraction(hi) - eps / 2
            assert missed < hi and (lo is None or missed > lo)
        return False
    return True


def affine_image(region: PartialPolyhedron, scale: Fraction, shift) -> PartialPolyhedron:
    """The set {scale * x + shift : x in region} for scale > 0."""
    assert scale > 0
    rows = tuple(
        Constraint(c.normal, scale * c.rhs + dot(c.normal, shift), c.strict)
        for c in region.constraints
    )
    return PartialPolyhedron(region.dim, rows)


def rand_fraction(rng: random.Random, span: int = 3, max_den: int = 3) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def rand_point(rng: random.Random, dim: int, span: int = 4, max_den: int = 3):
    return tuple(Fraction(rng.randint(-span * max_den, span * max_den), max_den)
                 for _ in range(dim))
