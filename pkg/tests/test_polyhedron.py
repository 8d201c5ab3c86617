"""Representation conversion, membership, extreme structure, inclusion."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from asymgeo.polyhedron import (
    Cone,
    Constraint,
    LinealityPresentError,
    PartialPolyhedron,
    Polyhedron,
    closure,
    contains_line,
    dd_convert_h_to_v,
    extreme_points,
    extreme_rays,
    in_conv_plus_cone,
    is_closed,
    member,
    minkowski_sum_with_cone,
    partial_is_empty,
    recession_cone,
    set_equal,
    subset,
    to_partial,
)
from asymgeo.ratlp import dot

from support import interval, rand_fraction, rand_point

F = Fraction


def hrow(*coeffs):
    *normal, rhs = coeffs
    return (tuple(F(c) for c in normal), F(rhs))


def region(dim, *rows):
    return PartialPolyhedron(dim, tuple(Constraint(tuple(map(F, n)), F(b), s) for n, b, s in rows))


# --- conversion ------------------------------------------------------------


def test_h_to_v_interval():
    p = dd_convert_h_to_v([hrow(1, 1), hrow(-1, 0)], 1)
    assert p.vertices == ((0,), (1,))
    assert p.rays == ()


def test_v_to_h_quadrant():
    p = Polyhedron(2, [(0, 0)], [(-1, 0), (0, -1)])
    assert set(p.hrep) == {((F(1), F(0)), F(0)), ((F(0), F(1)), F(0))}


def test_h_to_v_strip_with_lineality():
    p = dd_convert_h_to_v([hrow(1, 0, 1), hrow(-1, 0, 1)], 2)
    assert p.vertices == ((-1, 0), (1, 0))
    assert set(p.rays) == {(0, 1), (0, -1)}
    assert contains_line(p)


def test_h_to_v_empty():
    assert dd_convert_h_to_v([hrow(1, 0), hrow(-1, -1)], 1) is None


def test_round_trip_on_random_points():
    rng = random.Random(3)
    for trial in range(25):
        d = rng.randint(1, 3)
        m = rng.randint(1, 8)
        rows = [(rand_point(rng, d, span=3), rand_fraction(rng)) for _ in range(m)]
        p = dd_convert_h_to_v(rows, d)
        for _ in range(40):
            x = rand_point(rng, d)
            in_h = all(dot(c, x) <= b for c, b in rows)
            if p is None:
                assert not in_h
            else:
                assert in_h == in_conv_plus_cone(x, p.vertices, p.rays)


# --- closure / membership / closedness --------------------------------------


def test_closure_examples():
    half_open = interval(-1, 1, lo_open=True)
    assert closure(half_open).vertices == ((-1,), (1,))
    assert closure(region(1, ((1,), 0, True), ((-1,), 0, True))) is None
    quadrant = region(2, ((-1, 0), 0, True), ((0, -1), 0, True))
    hull = closure(quadrant)
    assert hull.vertices == ((0, 0),)
    assert set(hull.rays) == {(1, 0), (0, 1)}


def test_member_examples():
    half_open = interval(-1, 1, lo_open=True)
    assert member(half_open, (1,))
    assert not member(half_open, (-1,))
    assert member(half_open, (0,))


def test_member_dimension_check():
    with pytest.raises(ValueError):
        member(interval(0, 1), (0, 0))


def test_is_closed_examples():
    assert not is_closed(interval(-1, 1, lo_open=True))
    assert is_closed(region(1, ((1,), 2, True), ((1,), 1, False)))
    assert is_closed(interval(-1, 1))
    assert is_closed(region(1, ((1,), 0, True), ((-1,), 0, True)))  # empty set


def test_minkowski_examples():
    p = minkowski_sum_with_cone(Polyhedron(1, [(1,)]), Cone(1, [(-1,)]))
    assert p.vertices == ((1,),) and p.rays == ((-1,),)

    square = Polyhedron(2, [(0, 0), (1, 0), (0, 1), (1, 1)])
    assert minkowski_sum_with_cone(square, Cone(2, [])) == square

    seg = Polyhedron(2, [(0, 0), (1, 0)])
    half_strip = minkowski_sum_with_cone(seg, Cone(2, [(0, -1)]))
    expected = region(2, ((1, 0), 1, False), ((-1, 0), 0, False), ((0, 1), 0, False))
    assert set_equal(to_partial(half_strip), expected)


def test_minkowski_prunes_redundancy():
    p = minkowski_sum_with_cone(
        Polyhedron(2, [(0, 0)], [(-1, 0)]),
        Cone(2, [(0, -1), (-1, -1)]),
    )
    assert set(p.rays) == {(-1, 0), (0, -1)}


def test_extreme_points_examples():
    square = Polyhedron(2, [(0, 0), (1, 0), (0, 1), (1, 1)])
    assert set(extreme_points(square)) == {(0, 0), (1, 0), (0, 1), (1, 1)}
    padded = Polyhedron(2, [(0, 0), (1, 0), (0, 1), (1, 1), (F(1, 2), F(1, 2))])
    assert set(extreme_points(padded)) == {(0, 0), (1, 0), (0, 1), (1, 1)}
    ray = Polyhedron(1, [(1,)], [(-1,)])
    assert extreme_points(ray) == ((1,),)


def test_extreme_points_with_lineality_is_empty():
    line = Polyhedron(2, [(0, 0)], [(0, 1), (0, -1)])
    assert extreme_points(line) == ()


def test_extreme_rays_examples():
    quad = Polyhedron(2, [(0, 0)], [(-1, 0), (0, -1)])
    assert set(extreme_rays(quad)) == {(-1, 0), (0, -1)}
    box = Polyhedron(2, [(0, 0), (1, 1)])
    assert extreme_rays(box) == ()
    fan = Polyhedron(2, [(0, 0)], [(-1, 0), (0, -1), (-1, -1)])
    assert set(extreme_rays(fan)) == {(-1, 0), (0, -1)}


def test_extreme_rays_reject_lineality():
    strip = dd_convert_h_to_v([hrow(1, 0, 1), hrow(-1, 0, 1)], 2)
    with pytest.raises(LinealityPresentError):
        extreme_rays(strip)


def test_recession_examples():
    box = Polyhedron(2, [(0, 0), (1, 1)])
    rc = recession_cone(box)
    assert rc.generators == () and rc.lineality_basis == ()
    ray = Polyhedron(1, [(1,)], [(-1,)])
    assert recession_cone(ray).generators == ((-1,),)
    strip = dd_convert_h_to_v([hrow(1, 0, 1), hrow(-1, 0, 1)], 2)
    rc = recession_cone(strip)
    assert rc.lineality_basis == ((0, 1),)


def test_contains_line_examples():
    strip = dd_convert_h_to_v([hrow(1, 0, 1), hrow(-1, 0, 1)], 2)
    assert contains_line(strip)
    assert not contains_line(Polyhedron(1, [(5,)]))


def test_subset_examples():
    half_open = interval(-1, 1, lo_open=True)
    assert subset(half_open, interval(None, 1))
    assert not subset(interval(-1, 1), half_open)
    assert subset(interval(1, 1), half_open)


def test_subset_detects_strict_face():
    # [0,1] is not inside [0,1) but [0,1) is inside [0,1]
    assert not subset(interval(0, 1), interval(0, 1, hi_open=True))
    assert subset(interval(0, 1, hi_open=True), interval(0, 1))
    # empty sets are inside everything
    empty = region(1, ((1,), 0, True), ((-1,), 0, True))
    assert subset(empty, interval(5, 6))
    assert not subset(interval(5, 6), empty)


def test_set_equal_ignores_representation():
    a = region(1, ((2,), 2, False), ((-1,), 0, False))
    b = region(1, ((1,), 1, False), ((-3,), 0, False), ((1,), 7, False))
    assert set_equal(a, b)


# --- structural properties ---------------------------------------------------


def _random_line_free_poly(rng: random.Random):
    while True:
        d = rng.randint(1, 3)
        m = rng.randint(1, 6)
        rows = [(rand_point(rng, d, span=3), rand_fraction(rng)) for _ in range(m)]
        for j in range(d):
            if rng.random() < 0.6:
                e = tuple(F(1 if i == j else 0) for i in range(d))
                rows.append((e, F(rng.randint(1, 3))))
        p = dd_convert_h_to_v(rows, d)
        if p is not None and not contains_line(p):
            return p


def test_minkowski_weyl_reconstruction():
    """Line-free polyhedra equal the hull of extreme points plus extreme rays."""
    rng = random.Random(5)
    for _ in range(20):
        p = _random_line_free_poly(rng)
        rebuilt = Polyhedron(p.dim, extreme_points(p), extreme_rays(p))
        assert set_equal(to_partial(rebuilt), to_partial(p))


def test_extremality_is_intrinsic():
    rng = random.Random(7)
    for _ in range(12):
        p = _random_line_free_poly(rng)
        ext_v, ext_r = set(extreme_points(p)), set(extreme_rays(p))
        verts = list(p.vertices)
        rays = list(p.rays)
        # pad with redundant data: midpoints and doubled/summed rays
        if len(verts) >= 2:
            verts.append(tuple((a + b) / 2 for a, b in zip(verts[0], verts[1])))
        if rays:
            rays.append(tuple(2 * x for x in rays[0]))
            if len(rays) >= 2:
                rays.append(tuple(a + b for a, b in zip(rays[0], rays[1])))
        padded = Polyhedron(p.dim, tuple(verts), tuple(rays))
        assert set(extreme_points(padded)) == ext_v
        assert set(extreme_rays(padded)) == ext_r


def test_closure_idempotent_and_monotone():
    rng = random.Random(11)
    for _ in range(12):
        d = rng.randint(1, 2)
        m = rng.randint(1, 5)
        rows = tuple(
            Constraint(rand_point(rng, d, span=3), rand_fraction(rng), rng.random() < 0.5)
            for _ in range(m)
        )
        k = PartialPolyhedron(d, rows)
        hull = closure(k)
        if hull is None:
            continue
        again = closure(to_partial(hull))
        assert set_equal(to_partial(again), to_partial(hull))
        assert subset(k, to_partial(hull))


@settings(max_examples=40, deadline=None)
@given(st.fractions(min_value=0, max_value=1, max_denominator=12))
def test_member_respects_convexity(lam):
    rng = random.Random(13)
    k = region(2, ((1, 1), 2, True), ((-1, 0), 1, False), ((0, -1), 1, False))
    pts = [p for p in (rand_point(rng, 2) for _ in range(60)) if member(k, p)]
    for x, y in zip(pts, pts[1:]):
        mix = tuple(lam * a + (1 - lam) * b for a, b in zip(x, y))
        assert member(k, mix)


def _brute_cone_rays(rows, dim):
    """Independent oracle: extreme rays of a pointed cone {<row,x> <= 0} are
    the feasible directions whose tight rows span dimension dim-1, found by
    enumerating row subsets of that rank."""
    from itertools import combinations
    from asymgeo.ratlp import null_space_basis, primitive, rank as _rank

    out = set()
    if dim == 1:
        for s in ((F(1),), (F(-1),)):
            if all(dot(r, s) <= 0 for r in rows):
                out.add(s)
        return out
    for sub in combinations(range(len(rows)), dim - 1):
        base = [rows[i] for i in sub]
        if _rank(base) != dim - 1:
            continue
        direction = null_space_basis(base, dim)[0]
        for s in (direction, tuple(-c for c in direction)):
            if all(dot(r, s) <= 0 for r in rows):
                tight = [r for r in rows if dot(r, s) == 0]
                if _rank(tight) == dim - 1:
                    out.add(primitive(s))
    return out


def test_pointed_cone_rays_match_enumeration_oracle():
    from asymgeo.polyhedron import cone_from_rows
    from asymgeo.ratlp import null_space_basis

    rng = random.Random(17)
    checked = 0
    while checked < 40:
        d = rng.randint(2, 4)
        m = rng.randint(d, d + 4)
        rows = [rand_point(rng, d, span=2) for _ in range(m)]
        rows = [r for r in rows if any(c != 0 for c in r)]
        if not rows or null_space_basis(rows, d):
            continue  # oracle handles pointed cones only
        checked += 1
        gens, lin = cone_from_rows(rows, d)
        assert lin == ()
        assert set(gens) == _brute_cone_rays(rows, d), (d, rows)


def _brute_vertices(rows, dim):
    """Independent oracle: vertices are the feasible basic solutions, i.e.
    unique solutions of full-rank row subsets that satisfy every row."""
    from itertools import combinations
    from asymgeo.ratlp import invert, rank as _rank

    out = set()
    for sub in combinations(range(len(rows)), dim):
        mat = [rows[i][0] for i in sub]
        if _rank(mat) != dim:
            continue
        inv = invert(mat)
        x = tuple(sum(inv[i][j] * rows[sub[j]][1] for j in range(dim))
                  for i in range(dim))
        if all(dot(c, x) <= b for c, b in rows):
            out.add(x)
    return out


def test_extreme_points_match_basic_solution_oracle():
    rng = random.Random(19)
    checked = 0
    while checked < 40:
        d = rng.randint(1, 3)
        m = rng.randint(d, d + 4)
        rows = [(rand_point(rng, d, span=2), rand_fraction(rng)) for _ in range(m)]
        poly = dd_convert_h_to_v(rows, d)
        if poly is None or contains_line(poly):
            continue
        checked += 1
        assert set(extreme_points(poly)) == _brute_vertices(rows, d), (d, rows)


def test_vrep_and_cached_hrep_denote_the_same_set():
    rng = random.Random(29)
    for _ in range(20):
        d = rng.randint(1, 3)
        p = Polyhedron(
            d,
            [rand_point(rng, d) for _ in range(rng.randint(1, 4))],
            [rand_point(rng, d) for _ in range(rng.randint(0, 2))],
        )
        for _ in range(40):
            x = rand_point(rng, d)
            in_v = in_conv_plus_cone(x, p.vertices, p.rays)
            in_h = all(dot(c, x) <= b for c, b in p.hrep)
            assert in_v == in_h


def _subset_oracle(k1: PartialPolyhedron, k2: PartialPolyhedron) -> bool:
    """Independent inclusion route: k1 is inside k2 iff k1 meets no row's
    complement, where the complement of <c,x> <= b is the open side
    -<c,x> < -b (and closed for strict rows)."""
    from asymgeo.ratlp import vneg

    for c, b, strict in k2.constraints:
        negated = Constraint(vneg(c), -b, not strict)
        if not partial_is_empty(PartialPolyhedron(k1.dim, k1.constraints + (negated,))):
            return False
    return True


def test_subset_agrees_with_complement_oracle():
    rng = random.Random(23)
    agree_true = agree_false = 0
    for _ in range(250):
        d = rng.randint(1, 3)

        def draw():
            rows = tuple(
                Constraint(rand_point(rng, d, span=3), rand_fraction(rng), rng.random() < 0.5)
                for _ in range(rng.randint(1, d + 2))
            )
            return PartialPolyhedron(d, rows)

        k1, k2 = draw(), draw()
        got = subset(k1, k2)
        assert got == _subset_oracle(k1, k2), (k1, k2)
        agree_true += got
        agree_false += not got
    assert agree_true > 20 and agree_false > 20


def test_partial_is_empty_cases():
    assert partial_is_empty(region(1, ((1,), 0, True), ((-1,), 0, True)))
    assert not partial_is_empty(interval(0, 0))  # single point
    assert partial_is_empty(region(1, ((0,), 0, True)))  # 0 < 0 never holds
    assert not partial_is_empty(PartialPolyhedron(1, ()))  # whole line


def test_vertexless_polyhedron_rejected():
    with pytest.raises(ValueError):
        Polyhedron(1, [])
