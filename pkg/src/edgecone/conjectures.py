"""Probe the two open statements linking strong reductions and Gorensteinness.

Statement A: if S is normal and G is unmixed with a strong reduction, every
interior semigroup point has a principal representation.
Statement B: for normal S, Gorenstein iff unmixed with a strong reduction.

Findings are reported, never asserted: the interior scan is truncated.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .canonical import (
    GorensteinVerdict,
    Verdict,
    default_degree_bound,
    gorenstein_decide,
    principality_check,
)
from .cone import FacetSet, build_generators, enumerate_facets
from .graph import DEFAULT_COVER_CAP, DEFAULT_CYCLE_CAP, Graph, cover_report, enumerate_odd_cycles
from .reduction import (
    DEFAULT_SCAN_POINT_CAP,
    interior_semigroup_points,
    is_strong,
    iter_reductions,
    max_alpha_representation,
    principal_representation,
)
from .semigroup import NormalityReport, is_normal
from .triangulation import triangulate


class ProbeStatus(enum.Enum):
    CONSISTENT = "Consistent"
    CANDIDATE = "CounterexampleCandidate"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class ConjectureReport:
    status: ProbeStatus
    statement_a: ProbeStatus
    statement_b: ProbeStatus
    gorenstein: Optional[GorensteinVerdict]
    lattice_gorenstein: Optional[GorensteinVerdict]
    has_strong_reduction: Optional[bool]
    scan: dict = field(default_factory=dict)
    certificates: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "statement_a": self.statement_a.value,
            "statement_b": self.statement_b.value,
            "gorenstein": None if self.gorenstein is None else self.gorenstein.to_json(),
            "lattice_gorenstein": None if self.lattice_gorenstein is None else self.lattice_gorenstein.to_json(),
            "has_strong_reduction": self.has_strong_reduction,
            "scan": self.scan,
            "certificates": self.certificates,
        }


def _strong_reductions(g: Graph, cycle_cap: int) -> list:
    cycles = enumerate_odd_cycles(g, cycle_cap)
    out = []
    for r in iter_reductions(g, cycles=cycles):
        v = is_strong(g, r, cycles)
        if v.strong:
            out.append((r, v))
    return out


def conjecture_probe(g: Graph, degree_bound: Optional[int] = None,
                     point_cap: int = DEFAULT_SCAN_POINT_CAP,
                     normality: Optional[NormalityReport] = None,
                     facets: Optional[FacetSet] = None, cover_cap: int = DEFAULT_COVER_CAP,
                     cycle_cap: int = DEFAULT_CYCLE_CAP) -> ConjectureReport:
    """Test both statements on ``g``.

    Statement A is checked against every strong reduction at once: a point
    counts against it only if none of them gives it a principal
    representation.
    """
    if degree_bound is None:
        degree_bound = default_degree_bound(g)
    gs = build_generators(g)
    tri = triangulate(gs.gens)
    normality = normality or is_normal(g, triangulation=tri)
    na = ProbeStatus.NOT_APPLICABLE
    if not normality.normal:
        return ConjectureReport(na, na, na, None, None, None,
                                certificates={"normality": normality.to_json()})
    fs = facets or enumerate_facets(gs)
    decided = gorenstein_decide(g, degree_bound, normality=normality, facets=fs, tri=tri,
                                cover_cap=cover_cap, cycle_cap=cycle_cap)
    lattice = principality_check(g, degree_bound, normality=normality, facets=fs, tri=tri)
    cr = cover_report(g, cover_cap)
    strong = _strong_reductions(g, cycle_cap) if cr.unmixed and cr.tau == (g.n + 1) // 2 else []
    has_strong = cr.unmixed and bool(strong)
    certs: dict = {}
    scan: dict = {}

    status_a = na
    if has_strong:
        status_a = ProbeStatus.CONSISTENT
        checked, scanned, truncated = 0, 0, False
        bad = None
        for b in range(1, degree_bound + 1):
            pts = list(interior_semigroup_points(g, fs, b))
            if checked + len(pts) > point_cap:
                truncated = True
                break
            for w in pts:
                checked += 1
                if all(principal_representation(g, r, w) is None for r, _ in strong):
                    bad = w
                    break
            if bad is not None:
                break
            scanned = b
        scan = {"degree_bound": degree_bound, "scanned_degree": scanned,
                "points_checked": checked, "truncated": truncated}
        if bad is not None:
            status_a = ProbeStatus.CANDIDATE
            rep, top = max_alpha_representation(g, strong[0][0], bad)
            certs["statement_a"] = {
                "vector": list(bad),
                "strong_reductions": [r.to_json() for r, _ in strong],
                "max_edge_part_sum": top,
                "maximal_representation": rep.to_json(),
            }

    # statement B compares the lattice-level verdict with strong-reduction existence
    status_b = ProbeStatus.CONSISTENT
    if lattice.verdict is Verdict.UNKNOWN:
        status_b = na
    elif lattice.gorenstein != has_strong:
        status_b = ProbeStatus.CANDIDATE
        certs["statement_b"] = {
            "lattice_verdict": lattice.verdict.value,
            "generators": lattice.certificates.get("generators"),
            "unmixed": cr.unmixed,
            "strong_reduction": strong[0][0].to_json() if strong else None,
        }
    if decided.verdict is not Verdict.UNKNOWN and lattice.verdict is not Verdict.UNKNOWN \
            and decided.verdict is not lattice.verdict:
        certs["cascade_disagreement"] = {"cascade": decided.to_json(), "lattice": lattice.to_json()}

    overall = ProbeStatus.CONSISTENT
    if ProbeStatus.CANDIDATE in (status_a, status_b) or "cascade_disagreement" in certs:
        overall = ProbeStatus.CANDIDATE
    return ConjectureReport(overall, status_a, status_b, decided, lattice, has_strong, scan, certs)
