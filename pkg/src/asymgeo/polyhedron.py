"""Exact generalized polyhedra, closed and half-open.

Closed polyhedra carry a generator (V) representation ``conv(vertices) +
cone(rays)``; half-open sets are inequality (H) representations with a
per-row strict flag.  Conversion between the two runs the double
description method over exact rationals, and every predicate (membership,
inclusion, extremality, closedness) reduces to exact support-function
scans and small LPs.

Sets are desk scale: dimension <= 6 and at most a few hundred rows, so the
algorithms favour determinism and verifiability over asymptotics.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple, Optional, Sequence

from asymgeo.ratlp import (
    LpStatus,
    Rational,
    Vec,
    as_vec,
    dot,
    feasible_nonneg,
    invert,
    is_zero_vec,
    lp_solve,
    null_space_basis,
    primitive,
    rank,
    rat,
    rref,
    vneg,
    vscale,
    vsub,
    zero_vec,
)

HRow = tuple[Vec, Rational]  # <normal, x> <= rhs


class LinealityPresentError(ValueError):
    """Raised when extreme rays are requested for a set containing a line."""


class Constraint(NamedTuple):
    normal: Vec
    rhs: Rational
    strict: bool


@dataclass(frozen=True)
class Cone:
    """Finitely generated cone, possibly with lineality.

    ``lineality_basis`` spans the largest subspace contained in the cone;
    generators are kept exactly as supplied (deduplicated and primitive).
    """

    dim: int
    generators: tuple[Vec, ...]
    lineality_basis: tuple[Vec, ...] = ()

    def __post_init__(self):
        gens = _canonical_rays(self.generators, self.dim)
        lin = tuple(primitive(as_vec(b)) for b in self.lineality_basis)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "lineality_basis", lin)


@dataclass(frozen=True)
class PartialPolyhedron:
    """Intersection of closed and open half-spaces.

    Denotes {x : <c_j, x> < b_j for strict rows, <= b_j otherwise}.  Rows
    are stored exactly as given; redundancy never changes the denoted set.
    """

    dim: int
    constraints: tuple[Constraint, ...]

    def __post_init__(self):
        rows = []
        for normal, rhs, strict in self.constraints:
            normal = as_vec(normal)
            if len(normal) != self.dim:
                raise ValueError(f"constraint row of length {len(normal)} in dimension {self.dim}")
            rows.append(Constraint(normal, rat(rhs), bool(strict)))
        object.__setattr__(self, "constraints", tuple(rows))


@dataclass(frozen=True)
class Polyhedron:
    """Closed polyhedron conv(vertices) + cone(rays); never empty.

    Vertices are deduplicated and sorted; rays are reduced to primitive
    integer direction vectors.  Lineality is represented by opposite ray
    pairs.  The listed vertices need not all be extreme; ``extreme_points``
    computes the true extreme set.
    """

    dim: int
    vertices: tuple[Vec, ...]
    rays: tuple[Vec, ...] = ()

    def __post_init__(self):
        verts = sorted({as_vec(v) for v in self.vertices})
        if not verts:
            raise ValueError("a Polyhedron must have at least one vertex; the empty set is represented by None")
        for v in verts:
            if len(v) != self.dim:
                raise ValueError(f"vertex of length {len(v)} in dimension {self.dim}")
        object.__setattr__(self, "vertices", tuple(verts))
        object.__setattr__(self, "rays", _canonical_rays(self.rays, self.dim))

    @cached_property
    def hrep(self) -> tuple[HRow, ...]:
        return dd_convert_v_to_h(self)


def _canonical_rays(rays: Sequence[Vec], dim: int) -> tuple[Vec, ...]:
    out = set()
    for r in rays:
        r = primitive(as_vec(r))
        if len(r) != dim:
            raise ValueError(f"ray of length {len(r)} in dimension {dim}")
        if not is_zero_vec(r):
            out.add(r)
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# Double description
# ---------------------------------------------------------------------------


def _prepare_rows(rows: Sequence[Vec]) -> list[Vec]:
    """Primitive, deduplicated, lexicographically sorted nonzero rows."""
    seen = set()
    for r in rows:
        p = primitive(as_vec(r))
        if not is_zero_vec(p):
            seen.add(p)
    return sorted(seen)


def _pointed_cone_rays(rows: list[Vec], dim: int) -> list[Vec]:
    """Extreme rays of the pointed cone {x : <row, x> <= 0 for all rows}.

    Classic double description: start from a simplicial subcone given by a
    maximal independent row subset, then insert the remaining rows one at a
    time, combining adjacent rays across the new hyperplane.  Adjacency is
    the combinatorial zero-set test, which is valid because the ray set
    stays minimal throughout.  Requires rank(rows) == dim.
    """
    # greedy lexicographically-first independent subset
    base_idx: list[int] = []
    chosen: list[Vec] = []
    for i, row in enumerate(rows):
        if rank(chosen + [row]) > len(chosen):
            base_idx.append(i)
            chosen.append(row)
            if len(chosen) == dim:
                break
    if len(chosen) < dim:
        raise ValueError("cone is not pointed (row rank below dimension)")

    inv = invert(chosen)
    rays = [primitive(tuple(-inv[i][j] for i in range(dim))) for j in range(dim)]
    processed = list(base_idx)

    def incidence(r: Vec) -> frozenset[int]:
        return frozenset(k for k in processed if dot(rows[k], r) == 0)

    inc = {r: incidence(r) for r in rays}

    for i, row in enumerate(rows):
        if i in base_idx:
            continue
        vals = {r: dot(row, r) for r in rays}
        plus = [r for r in rays if vals[r] > 0]
        if not plus:
            processed.append(i)
            for r in rays:
                if vals[r] == 0:
                    inc[r] = inc[r] | {i}
            continue
        minus = [r for r in rays if vals[r] < 0]
        zero = [r for r in rays if vals[r] == 0]
        fresh = []
        for p in plus:
            for q in minus:
                common = inc[p] & inc[q]
                adjacent = not any(
                    r is not p and r is not q and common <= inc[r] for r in rays
                )
                if adjacent:
                    w = primitive(vsub(vscale(vals[p], q), vscale(vals[q], p)))
                    fresh.append(w)
        processed.append(i)
        rays = zero + minus
        for r in rays:
            if vals[r] == 0:
                inc[r] = inc[r] | {i}
        for w in fresh:
            if w not in rays:
                rays.append(w)
                inc[w] = incidence(w)
    return sorted(set(rays))


def cone_from_rows(rows: Sequence[Vec], dim: int) -> tuple[tuple[Vec, ...], tuple[Vec, ...]]:
    """Generators and lineality basis of {x : <row, x> <= 0 for all rows}.

    Lineality (the null space of the rows) is split off first; the pointed
    part is computed in the orthogonal complement and mapped back.
    """
    prepared = _prepare_rows(rows)
    if not prepared:
        ident = [primitive(tuple(Fraction(1 if j == i else 0) for j in range(dim)))
                 for i in range(dim)]
        return (), tuple(ident)
    lin = null_space_basis(prepared, dim)
    if not lin:
        return tuple(_pointed_cone_rays(prepared, dim)), ()
    comp = null_space_basis(lin, dim)
    proj = _prepare_rows([tuple(dot(h, w) for w in comp) for h in prepared])
    if not proj:
        return (), tuple(lin)
    sub_rays = _pointed_cone_rays(proj, len(comp))
    back = []
    for y in sub_rays:
        x = zero_vec(dim)
        for yi, w in zip(y, comp):
            x = tuple(a + yi * b for a, b in zip(x, w))
        back.append(primitive(x))
    return tuple(sorted(back)), tuple(lin)


def dd_convert_h_to_v(hrep: Sequence[HRow], dim: int) -> Optional[Polyhedron]:
    """Generator representation of {x : <c_j, x> <= b_j}; None if empty.

    Works on the homogenization cone {(x, t) : <c_j, x> - b_j t <= 0, t >= 0}:
    generators with positive last coordinate scale to vertices, the rest are
    recession directions, and lineality comes back as opposite ray pairs.
    """
    rows = [as_vec(c) + (-rat(b),) for c, b in hrep]
    rows.append(zero_vec(dim) + (Fraction(-1),))
    gens, lin = cone_from_rows(rows, dim + 1)
    verts = []
    raydirs = []
    for g in gens:
        t = g[-1]
        if t > 0:
            verts.append(vscale(1 / t, g[:-1]))
        else:
            raydirs.append(g[:-1])
    for l in lin:
        assert l[-1] == 0, "homogenization lineality must be horizontal"
        raydirs.append(l[:-1])
        raydirs.append(vneg(l[:-1]))
    if not verts:
        return None
    return Polyhedron(dim, tuple(verts), tuple(raydirs))


def dd_convert_v_to_h(poly: Polyhedron) -> tuple[HRow, ...]:
    """Inequality representation of a closed polyhedron.

    Dualizes the homogenization cone: its polar is described by the
    generators as rows, so one more double description run yields the
    candidate rows.  The lineality of the polar comes back as opposite row
    pairs pinning the affine hull; among the rest only facet rows are kept,
    recognized by their tight generators spanning one dimension less than
    the cone itself.  Rows are primitive integer data in sorted order.
    """
    dim = poly.dim
    gen_rows = [v + (Fraction(1),) for v in poly.vertices]
    gen_rows += [r + (Fraction(0),) for r in poly.rays]
    cone_dim = rank(gen_rows)
    gens, lin = cone_from_rows(gen_rows, dim + 1)
    out: list[HRow] = []
    for h in gens:
        c, g = h[:-1], h[-1]
        if is_zero_vec(c):
            assert g <= 0, "a nonempty polyhedron admits no contradictory row"
            continue
        tight = [row for row in gen_rows if dot(h, row) == 0]
        if rank(tight) == cone_dim - 1:
            out.append((c, -g))
    for l in list(lin) + [vneg(l) for l in lin]:
        c, g = l[:-1], l[-1]
        assert not is_zero_vec(c), "affine-hull rows have nonzero normals"
        out.append((c, -g))
    normalized = set()
    for c, b in out:
        joint = primitive(c + (b,))
        normalized.add((joint[:-1], joint[-1]))
    return tuple(sorted(normalized))


# Closures are memoized: the same region value is closed over and over by
# the inclusion tests, and `to_partial` seeds the cache so converting a
# polyhedron back and forth costs nothing.  Entries are immutable values.
_CLOSURE_CACHE: dict[PartialPolyhedron, Optional[Polyhedron]] = {}
_CLOSURE_CACHE_LIMIT = 50000


def to_partial(poly: Polyhedron) -> PartialPolyhedron:
    """The same closed set as an all-non-strict partial polyhedron."""
    part = PartialPolyhedron(poly.dim, tuple(Constraint(c, b, False) for c, b in poly.hrep))
    _CLOSURE_CACHE.setdefault(part, poly)
    return part


def support_value(poly: Polyhedron, direction: Vec) -> Optional[Rational]:
    """sup of <direction, x> over the polyhedron; None when unbounded.

    Exact and LP-free: the supremum of a linear functional over
    conv(V) + cone(R) is attained at a vertex unless some ray ascends.
    """
    if any(dot(direction, r) > 0 for r in poly.rays):
        return None
    return max(dot(direction, v) for v in poly.vertices)


# ---------------------------------------------------------------------------
# Predicates on partial polyhedra
# ---------------------------------------------------------------------------


def relaxed_rows(region: PartialPolyhedron) -> list[HRow]:
    return [(c.normal, c.rhs) for c in region.constraints]


def partial_is_empty(region: PartialPolyhedron) -> bool:
    """Exact emptiness test honouring strict rows.

    Maximizes a margin variable added to every strict row (capped at 1);
    the set is nonempty iff the closed system is feasible with a strictly
    positive margin.
    """
    dim = region.dim
    ext_rows: list[tuple[Vec, Rational]] = []
    for c in region.constraints:
        margin = Fraction(1) if c.strict else Fraction(0)
        ext_rows.append((c.normal + (margin,), c.rhs))
    ext_rows.append((zero_vec(dim) + (Fraction(1),), Fraction(1)))
    res = lp_solve(zero_vec(dim) + (Fraction(1),), ext_rows)
    if res.status == LpStatus.INFEASIBLE:
        return True
    assert res.status == LpStatus.OPTIMAL, "margin objective is capped"
    return res.value <= 0


def member(region: PartialPolyhedron, x: Vec) -> bool:
    """Exact membership by direct evaluation of every row."""
    x = as_vec(x)
    if len(x) != region.dim:
        raise ValueError(f"point of length {len(x)} in dimension {region.dim}")
    for c in region.constraints:
        val = dot(c.normal, x)
        if c.strict:
            if not val < c.rhs:
                return False
        elif not val <= c.rhs:
            return False
    return True


def closure(region: PartialPolyhedron) -> Optional[Polyhedron]:
    """Topological closure; None when the region is empty.

    For a nonempty intersection of open and closed half-spaces the closure
    is exactly the all-non-strict relaxation, so it suffices to drop the
    strict flags and convert.  Results are memoized by region value.
    """
    if region in _CLOSURE_CACHE:
        return _CLOSURE_CACHE[region]
    if partial_is_empty(region):
        poly = None
    else:
        poly = dd_convert_h_to_v(relaxed_rows(region), region.dim)
        assert poly is not None, "closure of a nonempty region is nonempty"
    if len(_CLOSURE_CACHE) > _CLOSURE_CACHE_LIMIT:
        _CLOSURE_CACHE.clear()
    _CLOSURE_CACHE[region] = poly
    return poly


def is_closed(region: PartialPolyhedron) -> bool:
    """True iff the region equals its closure.

    A strict row matters only when the corresponding face of the closure is
    nonempty, which is decided by maximizing the row over the closure.
    """
    hull = closure(region)
    if hull is None:
        return True
    for c in region.constraints:
        if not c.strict:
            continue
        top = support_value(hull, c.normal)
        assert top is not None, "rows of the region bound its own closure"
        if top == c.rhs:
            return False
    return True


def subset(first: PartialPolyhedron, second: PartialPolyhedron) -> bool:
    """Exact decision of ``first`` being contained in ``second``.

    Each row of ``second`` is maximized over the closure of ``first``; a
    strict row additionally requires the optimal face of the closure to be
    disjoint from ``first`` itself when the bound is attained.
    """
    if first.dim != second.dim:
        raise ValueError("dimension mismatch")
    hull = closure(first)
    if hull is None:
        return True
    for c in second.constraints:
        top = support_value(hull, c.normal)
        if top is None or top > c.rhs:
            return False
        if c.strict and top == c.rhs:
            face = first.constraints + (
                Constraint(c.normal, c.rhs, False),
                Constraint(vneg(c.normal), -c.rhs, False),
            )
            if not partial_is_empty(PartialPolyhedron(first.dim, face)):
                return False
    return True


def set_equal(first: PartialPolyhedron, second: PartialPolyhedron) -> bool:
    return subset(first, second) and subset(second, first)


# ---------------------------------------------------------------------------
# Generator-side predicates
# ---------------------------------------------------------------------------


def in_cone(x: Vec, generators: Sequence[Vec]) -> bool:
    """LP membership of x in the cone spanned by the generators."""
    x = as_vec(x)
    gens = [as_vec(g) for g in generators]
    if not gens:
        return is_zero_vec(x)
    dim = len(x)
    rows = [[g[t] for g in gens] for t in range(dim)]
    return feasible_nonneg(rows, list(x))


def in_conv_plus_cone(x: Vec, points: Sequence[Vec], rays: Sequence[Vec]) -> bool:
    """LP membership of x in conv(points) + cone(rays)."""
    x = as_vec(x)
    pts = [as_vec(p) for p in points]
    rds = [as_vec(r) for r in rays]
    if not pts:
        return False
    dim = len(x)
    cols = pts + rds
    rows = [[c[t] for c in cols] for t in range(dim)]
    rows.append([Fraction(1)] * len(pts) + [Fraction(0)] * len(rds))
    return feasible_nonneg(rows, list(x) + [Fraction(1)])


def _lineality_directions(rays: Sequence[Vec]) -> list[Vec]:
    """Generators whose opposite also lies in the cone; they span the lineality."""
    rays = list(rays)
    return [r for r in rays if in_cone(vneg(r), rays)]


def recession_cone(poly: Polyhedron) -> Cone:
    """cone(rays) of the polyhedron, with an explicit lineality basis."""
    gens = poly.rays
    lin_members = _lineality_directions(gens)
    basis: list[Vec] = []
    if lin_members:
        basis = [primitive(tuple(row)) for row in rref(lin_members)[0]]
    return Cone(poly.dim, gens, tuple(basis))


def contains_line(poly: Polyhedron) -> bool:
    return bool(_lineality_directions(poly.rays))


def extreme_points(poly: Polyhedron) -> tuple[Vec, ...]:
    """The extreme points of the polyhedron.

    A listed vertex is extreme iff it cannot be generated by the remaining
    vertices and the rays; a set containing a line has no extreme points.
    """
    if contains_line(poly):
        return ()
    verts = poly.vertices
    out = []
    for i, v in enumerate(verts):
        others = verts[:i] + verts[i + 1:]
        if not in_conv_plus_cone(v, others, poly.rays):
            out.append(v)
    return tuple(out)


def extreme_rays(poly: Polyhedron) -> tuple[Vec, ...]:
    """Extreme ray directions of the recession cone, line-free sets only.

    Directions are normalized so the first nonzero coordinate is +-1.
    """
    if contains_line(poly):
        raise LinealityPresentError("extreme rays are undefined for sets containing a line")
    rays = poly.rays
    out = []
    for i, r in enumerate(rays):
        others = rays[:i] + rays[i + 1:]
        if not in_cone(r, others):
            out.append(_first_nonzero_unit(r))
    return tuple(sorted(out))


def _first_nonzero_unit(r: Vec) -> Vec:
    lead = next(a for a in r if a != 0)
    return vscale(1 / abs(lead), r)


def minkowski_sum_with_cone(poly: Polyhedron, cone: Cone) -> Polyhedron:
    """poly + cone in generator form, canonicalized by LP redundancy removal."""
    if poly.dim != cone.dim:
        raise ValueError("dimension mismatch")
    rays = list(poly.rays) + list(cone.generators)
    for l in cone.lineality_basis:
        rays.append(l)
        rays.append(vneg(l))
    rays = sorted(set(_canonical_rays(rays, poly.dim)))
    rays = _prune_cone_generators(rays)
    verts = list(poly.vertices)
    i = 0
    while i < len(verts):
        others = verts[:i] + verts[i + 1:]
        if others and in_conv_plus_cone(verts[i], others, rays):
            verts.pop(i)
        else:
            i += 1
    return Polyhedron(poly.dim, tuple(verts), tuple(rays))


def _prune_cone_generators(rays: list[Vec]) -> list[Vec]:
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(rays):
            others = rays[:i] + rays[i + 1:]
            if in_cone(rays[i], others):
                rays.pop(i)
                changed = True
            else:
                i += 1
    return rays
