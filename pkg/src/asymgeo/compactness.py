"""Compactness in the gauge topology, decided with checkable certificates.

For a nonempty half-open polyhedral region K under a polyhedral gauge, the
decision procedure is:

    compact  <=>  (a) every recession direction of the closure has gauge 0
             and  (b) every extreme point of closure(K) + C lies in K,

where C is the degeneracy cone of the gauge.  Sufficiency: the convex hull
S of those extreme points is a bounded polytope contained in K, and the
(pointed, closed) sum closure(K) + C decomposes as S + C, so S squeezes K
as S <= K <= S + C; any cover of S by gauge-open sets absorbs C and hence
covers all of K.  Necessity: a closure recession direction survives inside
K itself (strict rows only relax along it), so a direction of positive
gauge embeds an escaping ray; and an extreme point of the sum that misses
K stays extreme in the smaller sum K + C, which is closed and must keep
its extreme points inside K — a contradiction either way.

A COMPACT verdict therefore ships the center polytope S with the verified
sandwich, and a NOT_COMPACT verdict ships a witness that re-verifies by
direct evaluation.  If the internal sandwich check ever failed the verdict
would be reported UNKNOWN rather than guessed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Union

from asymgeo.ratlp import Vec, rat, vneg, zero_vec
from asymgeo.norm import AsymNorm, Closedness, DegeneracyCone, ball, degeneracy_cone, gauge_eval
from asymgeo.polyhedron import (
    Constraint,
    PartialPolyhedron,
    Polyhedron,
    closure,
    contains_line,
    extreme_points,
    member,
    minkowski_sum_with_cone,
    partial_is_empty,
    recession_cone,
    set_equal,
    subset,
    support_value,
    to_partial,
)


class EmptyRegionError(ValueError):
    """The decision procedure requires a nonempty region."""


class EmptyExtremeSetError(ValueError):
    """No extreme points exist (the saturated hull contains a line)."""


class Verdict(enum.Enum):
    COMPACT = "COMPACT"
    NOT_COMPACT = "NOT_COMPACT"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class BadRecessionDirection:
    """Closure recession direction of positive gauge: an escaping ray."""

    direction: Vec


@dataclass(frozen=True)
class EscapedExtremePoint:
    """Extreme point of the saturated hull that the region fails to contain."""

    point: Vec


Witness = Union[BadRecessionDirection, EscapedExtremePoint]


@dataclass(frozen=True)
class CompactnessCertificate:
    verdict: Verdict
    center: Optional[Polyhedron] = None
    witness: Optional[Witness] = None


@dataclass(frozen=True)
class Instance:
    """A gauge together with a nonempty region, plus the cached geometry
    every operation needs: the closure, the degeneracy cone, and the
    saturated hull closure + cone."""

    norm: AsymNorm
    region: PartialPolyhedron
    hull: Polyhedron
    degeneracy: DegeneracyCone
    saturated: Polyhedron

    @classmethod
    def build(cls, norm: AsymNorm, region: PartialPolyhedron) -> "Instance":
        if norm.dim != region.dim:
            raise ValueError("gauge and region dimensions differ")
        hull = closure(region)
        if hull is None:
            raise EmptyRegionError("the region is empty")
        cone = degeneracy_cone(norm)
        saturated = minkowski_sum_with_cone(hull, cone.as_cone())
        return cls(norm, region, hull, cone, saturated)


def region_extreme_points(inst: Instance) -> tuple[Vec, ...]:
    """Extreme points of the (possibly half-open) region itself.

    A non-vertex point of the region sits inside a segment that the strict
    flags keep or cut wholly, so the extreme points are exactly the closure
    vertices that survive membership.
    """
    return tuple(v for v in extreme_points(inst.hull) if member(inst.region, v))


def saturation_extreme_points(inst: Instance) -> tuple[Vec, ...]:
    """Extreme points of closure(region) + degeneracy cone."""
    return extreme_points(inst.saturated)


def center_candidate(inst: Instance) -> Polyhedron:
    """The bounded polytope spanned by the saturated hull's extreme points."""
    ext = saturation_extreme_points(inst)
    if not ext:
        raise EmptyExtremeSetError("the saturated hull has no extreme points")
    return Polyhedron(inst.region.dim, ext, ())


def _sum_with_degeneracy(inst: Instance, poly: Polyhedron) -> Polyhedron:
    return minkowski_sum_with_cone(poly, inst.degeneracy.as_cone())


def _sandwich_holds(inst: Instance, core: Polyhedron) -> bool:
    padded = _sum_with_degeneracy(inst, core)
    return subset(to_partial(core), inst.region) and subset(inst.region, to_partial(padded))


def decide_compact(inst: Instance) -> CompactnessCertificate:
    """Verdict plus certificate; see the module docstring for the criterion.

    Witnesses are deterministic: directions and points are examined in
    sorted order and the first violation is reported.
    """
    rec = recession_cone(inst.hull)
    directions = set(rec.generators)
    for l in rec.lineality_basis:
        directions.add(l)
        directions.add(vneg(l))
    for d in sorted(directions):
        if gauge_eval(inst.norm, d) > 0:
            return CompactnessCertificate(Verdict.NOT_COMPACT, witness=BadRecessionDirection(d))
    for v in saturation_extreme_points(inst):
        if not member(inst.region, v):
            return CompactnessCertificate(Verdict.NOT_COMPACT, witness=EscapedExtremePoint(v))
    core = center_candidate(inst)
    if not _sandwich_holds(inst, core):
        return CompactnessCertificate(Verdict.UNKNOWN)
    return CompactnessCertificate(Verdict.COMPACT, center=core)


def sandwich_certify(core: Polyhedron, region: PartialPolyhedron, norm: AsymNorm) -> bool:
    """True iff core <= region <= core + degeneracy cone.

    A true result certifies compactness of the region: the core is a
    bounded polytope, and gauge-open sets absorb the degeneracy cone, so
    any cover of the core extends over the padded set and hence the region.
    """
    if core.rays:
        raise ValueError("the core must be a bounded polytope")
    if core.dim != region.dim or norm.dim != region.dim:
        raise ValueError("dimension mismatch")
    padded = minkowski_sum_with_cone(core, degeneracy_cone(norm).as_cone())
    return subset(to_partial(core), region) and subset(region, to_partial(padded))


def saturate_region(inst: Instance) -> PartialPolyhedron:
    """The half-open sum region + degeneracy cone as a partial polyhedron.

    Rows come from the closed sum; a row is strict exactly when its optimal
    face over the closure never meets the region, since a boundary point of
    the sum decomposes as (face point of the closure) + (cone point).
    """
    rows = inst.saturated.hrep
    out = []
    for c, b in rows:
        top = support_value(inst.hull, c)
        assert top is not None and top <= b, "sum rows bound the closure"
        strict = False
        if top == b:
            face = inst.region.constraints + (
                Constraint(c, b, False),
                Constraint(vneg(c), -b, False),
            )
            strict = partial_is_empty(PartialPolyhedron(inst.region.dim, face))
        out.append(Constraint(c, b, strict))
    return PartialPolyhedron(inst.region.dim, tuple(out))


# ---------------------------------------------------------------------------
# Structure report
# ---------------------------------------------------------------------------


class ClaimStatus(enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    NOT_APPLICABLE = "NOT_APPLICABLE"


CLAIM_LABELS = {
    "T1": "extreme points of the saturated hull lie in the region",
    "T2": "the region has at least one extreme point",
    "T3": "center <= region <= center + cone, and both sums agree",
    "T4": "region + cone is closed (equals the saturated hull)",
    "T5": "the region contains no line",
    "T6": "region + cone is itself judged compact",
}


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    status: ClaimStatus
    detail: Optional[str] = None

    @property
    def label(self) -> str:
        return CLAIM_LABELS[self.claim_id]


@dataclass(frozen=True)
class TheoremReport:
    claims: tuple[ClaimResult, ...]

    @property
    def all_pass(self) -> bool:
        return all(c.status is ClaimStatus.PASS for c in self.claims)


def verify_theorems(inst: Instance,
                    certificate: Optional[CompactnessCertificate] = None) -> TheoremReport:
    """Evaluate the six structural claims that hold for compact regions.

    Requires a COMPACT verdict; otherwise every claim is reported
    NOT_APPLICABLE.  FAIL entries carry a concrete counterexample.
    """
    cert = certificate if certificate is not None else decide_compact(inst)
    if cert.verdict is not Verdict.COMPACT:
        claims = tuple(
            ClaimResult(cid, ClaimStatus.NOT_APPLICABLE, "region not judged compact")
            for cid in sorted(CLAIM_LABELS)
        )
        return TheoremReport(claims)

    claims = []
    ext_sat = saturation_extreme_points(inst)
    core = cert.center
    assert core is not None

    escaped = next((v for v in ext_sat if not member(inst.region, v)), None)
    claims.append(_claim("T1", escaped is None,
                         None if escaped is None else f"escaped extreme point {escaped}"))

    own_ext = region_extreme_points(inst)
    claims.append(_claim("T2", bool(own_ext), "no extreme point found"))

    padded = _sum_with_degeneracy(inst, core)
    sat_partial = to_partial(inst.saturated)
    t3 = (subset(to_partial(core), inst.region)
          and subset(inst.region, to_partial(padded))
          and set_equal(to_partial(padded), sat_partial))
    claims.append(_claim("T3", t3, "sandwich inclusion or sum identity failed"))

    half_open_sum = saturate_region(inst)
    t4 = set_equal(half_open_sum, sat_partial)
    claims.append(_claim("T4", t4, "the half-open sum differs from its closure"))

    t5 = not contains_line(inst.hull)
    claims.append(_claim("T5", t5, "closure contains a line"))

    sum_inst = Instance.build(inst.norm, half_open_sum)
    t6 = decide_compact(sum_inst).verdict is Verdict.COMPACT
    claims.append(_claim("T6", t6, "the saturated region is not judged compact"))

    return TheoremReport(tuple(claims))


def _claim(cid: str, ok: bool, fail_detail: Optional[str]) -> ClaimResult:
    if ok:
        return ClaimResult(cid, ClaimStatus.PASS)
    return ClaimResult(cid, ClaimStatus.FAIL, fail_detail)


def ball_no_line_check(norm: AsymNorm, radius, closedness: Closedness) -> bool:
    """True iff the closure of the given ball around 0 contains no line.

    Holds for every valid gauge: a line in a ball would force the gauge and
    its reverse to vanish along the line's direction.
    """
    radius = rat(radius)
    if radius <= 0:
        raise ValueError("radius must be positive")
    b = ball(norm, zero_vec(norm.dim), radius, closedness)
    hull = closure(b.as_set)
    assert hull is not None, "a positive-radius ball is nonempty"
    return not contains_line(hull)
