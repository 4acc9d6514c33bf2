"""Minimal generators of the interior ideal and the Gorenstein decision.

For normal S the canonical module is spanned by the semigroup points in the
open cone; S is Gorenstein exactly when that ideal has a single generator.
Two generator searches are provided:

* ``exact``: every minimal interior point sits in the relative interior of
  some triangulation cell with all coefficients at most one, so the finite
  set ``parallelepiped point + sum of a subset of the cell's zero-coefficient
  generators`` contains them all.  Their degree is at most n+1.
* ``lattice``: enumerate interior points degree by degree, keep the ones no
  earlier generator divides, and stop trusting the result only once the
  generator list has been stable for ceil(n/2)+1 degrees.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .cone import FacetSet, build_generators, enumerate_facets, is_interior, lattice_points
from .errors import CapExceededError, ContractError
from .graph import (
    DEFAULT_COVER_CAP,
    DEFAULT_CYCLE_CAP,
    Graph,
    OddCycle,
    bipartition_or_odd_cycle,
    cover_report,
)
from .reduction import find_strong_reduction
from .semigroup import NormalityReport, is_normal, membership
from .triangulation import Triangulation, parallelepiped, triangulate

DEFAULT_LATTICE_POINT_CAP = 2 * 10**5


def default_degree_bound(g: Graph) -> int:
    return 2 * g.n + 2


def ones_vector(g: Graph, b: int) -> tuple:
    return tuple([1] * g.n) + (b,)


def candidate_generator(g: Graph, facets: Optional[FacetSet] = None) -> list:
    """The vectors (1, b) that can generate a principal interior ideal."""
    fs = facets or enumerate_facets(build_generators(g))
    top = g.n // 2 + 1
    bs = range(1, top + 1) if not isinstance(bipartition_or_odd_cycle(g), OddCycle) else [top]
    return [w for w in (ones_vector(g, b) for b in bs) if is_interior(fs, w)]


def divides(g: Graph, w: Sequence[int], gen: Sequence[int]) -> bool:
    """True iff w - gen lies in NB."""
    diff = tuple(a - b for a, b in zip(w, gen))
    return membership(g, diff) is not None


@dataclass(frozen=True)
class CanonicalGenerators:
    degree_bound: int
    generators: tuple
    complete: bool
    method: str  # "exact" | "lattice"
    normality: str  # "verified" | "assumed" | "not normal"
    points_checked: int = 0
    exact_degree_bound: Optional[int] = None  # proven bound on generator degree (exact method)

    @property
    def principal(self) -> bool:
        return self.complete and len(self.generators) == 1

    def to_json(self) -> dict:
        return {
            "degree_bound": self.degree_bound,
            "generators": [list(w) for w in self.generators],
            "complete": self.complete,
            "method": self.method,
            "normality": self.normality,
            "points_checked": self.points_checked,
            "exact_degree_bound": self.exact_degree_bound,
        }


def _subset_sums(k: int) -> np.ndarray:
    """All 0/1 rows of length k, shape (2**k, k)."""
    codes = np.arange(1 << k, dtype=np.int64)
    return ((codes[:, None] >> np.arange(k)) & 1).astype(np.int64)


def interior_cell_candidates(gens: Sequence[tuple], tri: Triangulation, fs: FacetSet) -> np.ndarray:
    """Distinct interior lattice points that could be minimal, sorted by (degree, lex)."""
    G = np.array(gens, dtype=np.int64)
    N = np.array([f.vector for f in fs.normals], dtype=np.int64)
    found = set()
    for s in tri.simplices:
        idx = np.array(s.indices)
        for p, t in parallelepiped(gens, s):
            zero = idx[[i for i, c in enumerate(t) if c == 0]]
            pts = np.asarray(p, dtype=np.int64) + _subset_sums(len(zero)) @ G[zero]
            pts = pts[(pts @ N.T > 0).all(axis=1)]
            found.update(map(tuple, pts.tolist()))
    out = sorted(found, key=lambda w: (w[-1], w))
    return np.array(out, dtype=np.int64).reshape(len(out), len(gens[0]))


def minimal_interior_points(points: np.ndarray, gens: Sequence[tuple], fs: FacetSet) -> np.ndarray:
    """Rows x such that x - g leaves the open cone for every generator g."""
    if not len(points):
        return points
    G = np.array(gens, dtype=np.int64)
    N = np.array([f.vector for f in fs.normals], dtype=np.int64)
    vals = points @ N.T  # (m, f)
    gvals = G @ N.T  # (N, f)
    divisible = np.zeros(len(points), dtype=bool)
    for row in gvals:
        divisible |= ((vals - row) > 0).all(axis=1)
    return points[~divisible]


def exact_canonical_generators(g: Graph, degree_bound: int, tri: Optional[Triangulation] = None,
                               facets: Optional[FacetSet] = None, normality: str = "verified") -> CanonicalGenerators:
    gs = build_generators(g)
    fs = facets or enumerate_facets(gs)
    tri = tri or triangulate(gs.gens)
    cands = interior_cell_candidates(gs.gens, tri, fs)
    mins = [tuple(int(x) for x in row) for row in minimal_interior_points(cands, gs.gens, fs)]
    kept = tuple(w for w in mins if w[-1] <= degree_bound)
    top = max(w[-1] for w in mins)
    return CanonicalGenerators(degree_bound, kept, top <= degree_bound, "exact", normality,
                               points_checked=len(cands), exact_degree_bound=g.n + 1)


def lattice_canonical_generators(g: Graph, degree_bound: int, facets: Optional[FacetSet] = None,
                                 point_cap: int = DEFAULT_LATTICE_POINT_CAP,
                                 normality: str = "verified") -> CanonicalGenerators:
    """Degree-by-degree scan with the stabilization rule deciding completeness."""
    fs = facets or enumerate_facets(build_generators(g))
    gens = []
    checked = 0
    last_new = 0
    for b in range(1, degree_bound + 1):
        for w in lattice_points(fs, b, interior=True):
            checked += 1
            if checked > point_cap:
                raise CapExceededError("interior lattice points", point_cap, tuple(gens))
            if membership(g, w) is None:
                continue
            if not any(divides(g, w, x) for x in gens if x[-1] < b):
                gens.append(w)
                last_new = b
    window = (g.n + 1) // 2 + 1
    complete = bool(gens) and degree_bound - last_new >= window
    return CanonicalGenerators(degree_bound, tuple(gens), complete, "lattice", normality, points_checked=checked)


def canonical_generators(g: Graph, degree_bound: Optional[int] = None, method: str = "auto",
                         normality: Optional[NormalityReport] = None, assume_normal: bool = False,
                         point_cap: int = DEFAULT_LATTICE_POINT_CAP,
                         tri: Optional[Triangulation] = None,
                         facets: Optional[FacetSet] = None) -> CanonicalGenerators:
    """Minimal interior semigroup points of degree at most ``degree_bound``.

    ``method="auto"`` uses the exact cell search when S is normal (verified or
    assumed) and the lattice scan otherwise.
    """
    if degree_bound is None:
        degree_bound = default_degree_bound(g)
    if degree_bound < 1:
        raise ContractError("degree_bound must be at least 1")
    if method not in ("auto", "exact", "lattice"):
        raise ContractError(f"unknown method {method!r}")
    if assume_normal:
        flag = "assumed"
    else:
        normality = normality or is_normal(g, triangulation=tri)
        flag = "verified" if normality.normal else "not normal"
    if method == "exact" and flag == "not normal":
        raise ContractError("the exact generator search needs S to be normal")
    if method == "lattice" or (method == "auto" and flag == "not normal"):
        return lattice_canonical_generators(g, degree_bound, facets, point_cap, flag)
    return exact_canonical_generators(g, degree_bound, tri, facets, flag)


def facet_gorenstein_point(fs: FacetSet) -> Optional[tuple]:
    """The lattice point at height one on every primitive facet normal, if there is one.

    For a normal affine semigroup this exists exactly when the interior ideal
    is principal, and then it is the generator.
    """
    n = fs.n
    b = None
    for f in fs.ell_facets:
        r = f.vector[n]
        num = 1 + sum(-x for x in f.vector[:n])
        if num % r:
            return None
        if b is None:
            b = num // r
        elif b != num // r:
            return None
    if b is None:
        return None
    return tuple([1] * n) + (b,)


# -- decision cascade -----------------------------------------------------------


class Verdict(enum.Enum):
    GORENSTEIN = "Gorenstein"
    NOT_GORENSTEIN = "NotGorenstein"
    UNKNOWN = "UnknownUpTo"


class Rule(enum.Enum):
    BIPARTITE_BRV = "BipartiteBRV"
    UNMIXED_TAU = "UnmixedTauObstruction"
    PARITY = "ParityTheorem"
    STRONG_REDUCTION = "StrongReductionObstruction"
    PRINCIPALITY = "PrincipalityCheck"


@dataclass(frozen=True)
class GorensteinVerdict:
    verdict: Verdict
    provenance: Rule
    generator: Optional[tuple] = None
    certificates: dict = field(default_factory=dict)
    degree_bound: Optional[int] = None
    complete: bool = True
    normality: str = "verified"

    @property
    def gorenstein(self) -> bool:
        return self.verdict is Verdict.GORENSTEIN

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "provenance": self.provenance.value,
            "generator": None if self.generator is None else list(self.generator),
            "certificates": self.certificates,
            "bounds": {"degree": self.degree_bound, "complete": self.complete},
            "normality": self.normality,
        }


def principality_check(g: Graph, degree_bound: Optional[int] = None, normality: Optional[NormalityReport] = None,
                        assume_normal: bool = False, **kw) -> GorensteinVerdict:
    """Decide Gorensteinness from the canonical generators alone.

    Without normality the interior points need not span the canonical
    module, so a non-normal S yields an unknown verdict carrying the
    normality witness.
    """
    if degree_bound is None:
        degree_bound = default_degree_bound(g)
    if not assume_normal:
        normality = normality or is_normal(g, triangulation=kw.get("tri"))
        if not normality.normal:
            return GorensteinVerdict(Verdict.UNKNOWN, Rule.PRINCIPALITY, None,
                                     {"normality": normality.to_json()}, degree_bound, False, "not normal")
    cg = canonical_generators(g, degree_bound, normality=normality, assume_normal=assume_normal, **kw)
    certs = {"generators": [list(w) for w in cg.generators], "method": cg.method}
    common = dict(certificates=certs, degree_bound=degree_bound, normality=cg.normality)
    if len(cg.generators) >= 2:
        certs["second_generator"] = list(cg.generators[1])
        return GorensteinVerdict(Verdict.NOT_GORENSTEIN, Rule.PRINCIPALITY, **common)
    if cg.complete and len(cg.generators) == 1:
        return GorensteinVerdict(Verdict.GORENSTEIN, Rule.PRINCIPALITY, cg.generators[0], **common)
    return GorensteinVerdict(Verdict.UNKNOWN, Rule.PRINCIPALITY, complete=False, **common)


def gorenstein_decide(g: Graph, degree_bound: Optional[int] = None, assume_normal: bool = False,
                      normality: Optional[NormalityReport] = None, force_principality: bool = False,
                      method: str = "auto", facets: Optional[FacetSet] = None,
                      tri: Optional[Triangulation] = None, cover_cap: int = DEFAULT_COVER_CAP,
                      cycle_cap: int = DEFAULT_CYCLE_CAP) -> GorensteinVerdict:
    """Run the combinatorial rules in order, falling back to the generator check.

    ``force_principality`` skips the rules and goes straight to the lattice side.
    """
    if degree_bound is None:
        degree_bound = default_degree_bound(g)
    if assume_normal:
        flag = "assumed"
    else:
        normality = normality or is_normal(g, triangulation=tri)
        flag = "verified" if normality.normal else "not normal"
    kw = dict(method=method, facets=facets, tri=tri)
    if assume_normal:
        kw["assume_normal"] = True
    else:
        kw["normality"] = normality
    if force_principality or flag == "not normal":
        return principality_check(g, degree_bound, **kw)

    def rule(verdict, prov, generator=None, **certs):
        return GorensteinVerdict(verdict, prov, generator, certs, degree_bound, True, flag)

    cr = cover_report(g, cover_cap)
    split = bipartition_or_odd_cycle(g)
    bipartite = not isinstance(split, OddCycle)
    if bipartite:
        parts = [list(p) for p in split]
        if cr.unmixed:
            gen = candidate_generator(g, facets)[0]
            return rule(Verdict.GORENSTEIN, Rule.BIPARTITE_BRV, gen, bipartition=parts, tau=cr.tau)
        return rule(Verdict.NOT_GORENSTEIN, Rule.BIPARTITE_BRV, bipartition=parts,
                    mixed_covers=[list(c) for c in cr.witness_pair])
    if not cr.unmixed:
        return rule(Verdict.NOT_GORENSTEIN, Rule.UNMIXED_TAU, mixed_covers=[list(c) for c in cr.witness_pair])
    half = (g.n + 1) // 2
    if cr.tau != half:
        return rule(Verdict.NOT_GORENSTEIN, Rule.UNMIXED_TAU, tau=cr.tau, ceil_half_n=half)
    if g.n % 2 == 0:
        return rule(Verdict.NOT_GORENSTEIN, Rule.PARITY, odd_cycle=split.to_json())
    search = find_strong_reduction(g, cycle_cap=cycle_cap)
    if search.strong is None:
        return rule(Verdict.NOT_GORENSTEIN, Rule.STRONG_REDUCTION,
                    reductions=[r.to_json() for r in search.examined], search=search.status.value)
    out = principality_check(g, degree_bound, **kw)
    out.certificates["strong_reduction"] = search.strong.to_json()
    return out
