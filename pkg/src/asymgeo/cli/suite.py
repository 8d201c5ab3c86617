"""Built-in reference suite: fixed instances with embedded expected outcomes.

Each catalog entry decides compactness, runs the structure checks, and
compares against the expected verdict and center.  The suite is
self-verifying: any mismatch is reported and flips the overall status.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from asymgeo.compactness import (
    Instance,
    Verdict,
    decide_compact,
    verify_theorems,
)
from asymgeo.cli.generators import gen_arc_hull, gen_lattice_norm
from asymgeo.norm import AsymNorm, make_norm
from asymgeo.polyhedron import Constraint, PartialPolyhedron


@dataclass(frozen=True)
class RunReport:
    """One instance's outcome in stable, line-oriented form.

    ``matched`` is None outside suite runs (nothing to compare against).
    """

    name: str
    dim: int
    functionals: int
    rows: int
    verdict: str
    center: Optional[tuple] = None
    witness: Optional[str] = None
    claims: tuple = ()
    note: Optional[str] = None
    matched: Optional[bool] = None
    timing_ms: float = 0.0

    def render(self, include_timing: bool = True) -> str:
        lines = [
            f"instance: {self.name}",
            f"dim: {self.dim}",
            f"functionals: {self.functionals}",
            f"rows: {self.rows}",
            f"verdict: {self.verdict}",
        ]
        if self.center is not None:
            pts = "; ".join("(" + ", ".join(str(x) for x in v) + ")" for v in self.center)
            lines.append(f"center: {pts}")
        if self.witness is not None:
            lines.append(f"witness: {self.witness}")
        for cid, status in self.claims:
            lines.append(f"{cid}: {status}")
        if self.note:
            lines.append(f"note: {self.note}")
        if self.matched is not None:
            lines.append(f"matched: {'yes' if self.matched else 'NO'}")
        if include_timing:
            lines.append(f"timing_ms: {self.timing_ms:.1f}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    norm: AsymNorm
    region: PartialPolyhedron
    expected_verdict: Verdict
    expected_center: Optional[tuple] = None  # exact vertex tuple, or None to skip
    expect_all_claims_pass: bool = True
    note: Optional[str] = None


def _ray_gauge() -> AsymNorm:
    return make_norm(1, [(1,)])


def _interval(lo, lo_strict, hi, hi_strict) -> PartialPolyhedron:
    rows = []
    if hi is not None:
        rows.append(Constraint((Fraction(1),), Fraction(hi), hi_strict))
    if lo is not None:
        rows.append(Constraint((Fraction(-1),), Fraction(-lo), lo_strict))
    return PartialPolyhedron(1, tuple(rows))


def reference_catalog() -> list[CatalogEntry]:
    ray = _ray_gauge()
    sup2 = gen_lattice_norm(2, "sup")
    square = PartialPolyhedron(2, (
        Constraint((Fraction(1), Fraction(0)), Fraction(1), False),
        Constraint((Fraction(0), Fraction(1)), Fraction(1), False),
        Constraint((Fraction(-1), Fraction(0)), Fraction(0), False),
        Constraint((Fraction(0), Fraction(-1)), Fraction(0), False),
    ))
    sym2 = make_norm(2, [(1, 0), (0, 1), (-1, 0), (0, -1)])
    triangle = PartialPolyhedron(2, (
        Constraint((Fraction(-1), Fraction(0)), Fraction(0), False),
        Constraint((Fraction(0), Fraction(-1)), Fraction(0), False),
        Constraint((Fraction(1), Fraction(1)), Fraction(1), False),
    ))

    entries = [
        CatalogEntry(
            "half-open interval (-1,1]",
            ray,
            _interval(-1, True, 1, False),
            Verdict.COMPACT,
            expected_center=((Fraction(1),),),
        ),
        CatalogEntry(
            "vanishing-cone translate at 0",
            ray,
            _interval(None, False, 0, False),
            Verdict.COMPACT,
            expected_center=((Fraction(0),),),
        ),
        CatalogEntry(
            "vanishing-cone translate at 3/2",
            ray,
            _interval(None, False, Fraction(3, 2), False),
            Verdict.COMPACT,
            expected_center=((Fraction(3, 2),),),
        ),
        CatalogEntry(
            "unit square, sup lattice gauge",
            sup2,
            square,
            Verdict.COMPACT,
            expected_center=((Fraction(1), Fraction(1)),),
        ),
        CatalogEntry(
            "triangle under a symmetric gauge",
            sym2,
            triangle,
            Verdict.COMPACT,
            expected_center=(
                (Fraction(0), Fraction(0)),
                (Fraction(0), Fraction(1)),
                (Fraction(1), Fraction(0)),
            ),
        ),
    ]
    arc_note = (
        "every sampled stand-in of the circular-arc hull has a finite center, "
        "but the center grows with the sample count; the exact curved region "
        "this family approximates admits no compact center at all"
    )
    for n_arc in (2, 4, 8, 16):
        norm, region = gen_arc_hull(n_arc)
        entries.append(CatalogEntry(
            f"arc-hull approximation, {n_arc} segments",
            norm,
            region,
            Verdict.COMPACT,
            expected_center=None,
            note=arc_note,
        ))
    return entries


def run_reference_suite() -> tuple[list[RunReport], bool]:
    """Execute the catalog; returns the reports and the overall status."""
    reports = []
    ok = True
    previous_center_size = 0
    for entry in reference_catalog():
        start = time.perf_counter()
        inst = Instance.build(entry.norm, entry.region)
        cert = decide_compact(inst)
        report_claims = []
        matched = cert.verdict is entry.expected_verdict
        center = None
        witness = None
        if cert.center is not None:
            center = cert.center.vertices
            if entry.expected_center is not None:
                matched = matched and tuple(sorted(center)) == tuple(sorted(entry.expected_center))
        if cert.witness is not None:
            witness = repr(cert.witness)
        if cert.verdict is Verdict.COMPACT:
            rep = verify_theorems(inst, cert)
            report_claims = [(c.claim_id, c.status.value) for c in rep.claims]
            if entry.expect_all_claims_pass:
                matched = matched and rep.all_pass
        if entry.name.startswith("arc-hull"):
            # the centers must grow strictly with the sample count
            matched = matched and center is not None and len(center) > previous_center_size
            previous_center_size = len(center) if center is not None else 0
        elapsed = (time.perf_counter() - start) * 1000.0
        ok = ok and matched
        reports.append(RunReport(
            name=entry.name,
            dim=entry.norm.dim,
            functionals=len(entry.norm.functionals),
            rows=len(entry.region.constraints),
            verdict=cert.verdict.value,
            center=center,
            witness=witness,
            claims=tuple(report_claims),
            note=entry.note,
            matched=matched,
            timing_ms=elapsed,
        ))
    return reports, ok
