"""Tau-reductions into edges and at most one short odd cycle.

A reduction here is always a ceil(n/2)-tau-reduction: a vertex partition
into edges G_1..G_{s-1} plus a last part that is an edge or an induced
3-, 5- or 7-cycle, with cover numbers adding up to tau(G).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Iterator, Optional, Sequence

from .cone import FacetSet, build_generators, enumerate_facets, lattice_points
from .errors import CapExceededError, ContractError
from .graph import (
    DEFAULT_CYCLE_CAP,
    Graph,
    OddCycle,
    closed_neighborhood,
    cover_report,
    enumerate_odd_cycles,
    is_induced_cycle,
)
from .semigroup import (
    Representation,
    cycle_matching,
    membership,
    search_representation,
)

CYCLE_LENGTHS = (3, 5, 7)
DEFAULT_NODE_CAP = 10**6


@dataclass(frozen=True)
class StrengthVerdict:
    strong: bool
    witness: Optional[tuple] = None  # (vertex x, OddCycle C) with no edge from x into V(C)

    def to_json(self) -> dict:
        if self.witness is None:
            return {"strong": self.strong, "witness": None}
        x, c = self.witness
        return {"strong": self.strong, "witness": {"vertex": x, "cycle": c.to_json()}}


@dataclass(frozen=True)
class TauReduction:
    edge_parts: tuple  # edge indices, increasing
    cycle_part: Optional[OddCycle] = None
    strong: Optional[StrengthVerdict] = None

    @property
    def s(self) -> int:
        return len(self.edge_parts) + (self.cycle_part is not None)

    @property
    def u(self) -> int:
        """Number of edge parts, i.e. s or s-1."""
        return len(self.edge_parts)

    def parts(self, g: Graph) -> list:
        out = [tuple(g.edge(k)) for k in self.edge_parts]
        if self.cycle_part is not None:
            out.append(tuple(sorted(self.cycle_part.vertices)))
        return out

    def to_json(self) -> dict:
        return {
            "edge_parts": list(self.edge_parts),
            "cycle_part": None if self.cycle_part is None else self.cycle_part.to_json(),
            "strong": None if self.strong is None else self.strong.to_json(),
        }


def validate_reduction(g: Graph, r: TauReduction, tau: Optional[int] = None) -> None:
    """Raise ContractError unless ``r`` is a ceil(n/2)-tau-reduction of ``g``."""
    seen = []
    for k in r.edge_parts:
        seen.extend(g.edge(k))
    c = r.cycle_part
    if c is not None:
        if c.k not in CYCLE_LENGTHS or not is_induced_cycle(g, c):
            raise ContractError("cycle part must be an induced 3-, 5- or 7-cycle")
        seen.extend(c.vertices)
    if sorted(seen) != list(g.vertices):
        raise ContractError("parts do not partition V(G)")
    if tau is None:
        tau = cover_report(g).tau
    total = len(r.edge_parts) + (0 if c is None else (c.k + 1) // 2)
    if total != tau:
        raise ContractError(f"cover numbers add to {total}, not tau = {tau}")


def _perfect_matchings(g: Graph, vertices: frozenset, budget: list) -> Iterator[tuple]:
    """Perfect matchings of the induced subgraph on ``vertices``, lexicographic."""
    if not vertices:
        yield ()
        return
    budget[0] -= 1
    if budget[0] < 0:
        raise CapExceededError("reduction search nodes", budget[1])
    v = min(vertices)
    for u in sorted(g.adjacency[v] & vertices):
        k = g.edge_index[(v, u)]
        for rest in _perfect_matchings(g, vertices - {v, u}, budget):
            yield tuple(sorted((k,) + rest))


def iter_reductions(g: Graph, cycles: Optional[Sequence[OddCycle]] = None,
                    node_cap: int = DEFAULT_NODE_CAP,
                    cycle_cap: int = DEFAULT_CYCLE_CAP) -> Iterator[TauReduction]:
    """Every vertex partition into edges plus (n odd) one induced short odd cycle.

    Does not check tau-additivity; callers filter on tau(G) = ceil(n/2).
    """
    budget = [node_cap, node_cap]
    everything = frozenset(g.vertices)
    if g.n % 2 == 0:
        for m in _perfect_matchings(g, everything, budget):
            yield TauReduction(m)
        return
    if cycles is None:
        cycles = enumerate_odd_cycles(g, cycle_cap)
    for c in cycles:
        if c.k not in CYCLE_LENGTHS or not is_induced_cycle(g, c):
            continue
        for m in _perfect_matchings(g, everything - c.vertex_set, budget):
            yield TauReduction(m, c)


class ReductionStatus(enum.Enum):
    FOUND = "found"
    NOT_UNMIXED = "not unmixed"
    WRONG_TAU = "tau != ceil(n/2)"
    ANOMALY = "search exhausted"


@dataclass(frozen=True)
class ReductionOutcome:
    reduction: Optional[TauReduction]
    status: ReductionStatus

    @property
    def reason(self) -> str:
        return self.status.value


def find_reduction(g: Graph, node_cap: int = DEFAULT_NODE_CAP) -> ReductionOutcome:
    """The first ceil(n/2)-tau-reduction in search order, or the reason there is none."""
    cr = cover_report(g)
    if not cr.unmixed:
        return ReductionOutcome(None, ReductionStatus.NOT_UNMIXED)
    if cr.tau != (g.n + 1) // 2:
        return ReductionOutcome(None, ReductionStatus.WRONG_TAU)
    for r in iter_reductions(g, node_cap=node_cap):
        return ReductionOutcome(r, ReductionStatus.FOUND)
    return ReductionOutcome(None, ReductionStatus.ANOMALY)


def is_strong(g: Graph, r: TauReduction, cycles: Optional[Sequence[OddCycle]] = None,
              cycle_cap: int = DEFAULT_CYCLE_CAP) -> StrengthVerdict:
    """Check that every vertex near the cycle part reaches every odd cycle by an edge.

    Witness search order: vertex of N[G_s] first, then cycles in enumeration order.
    """
    if r.cycle_part is None:
        return StrengthVerdict(True)
    if cycles is None:
        cycles = enumerate_odd_cycles(g, cycle_cap)
    near = closed_neighborhood(g, r.cycle_part.vertices)
    for x in near:
        reach = g.adjacency[x] | {x}
        for c in cycles:
            # an edge {x, z} meets V(C) iff x or a neighbour of x lies on C
            if not (reach & c.vertex_set):
                return StrengthVerdict(False, (x, c))
    return StrengthVerdict(True)


@dataclass(frozen=True)
class StrongSearch:
    strong: Optional[TauReduction]
    examined: tuple  # TauReductions with their StrengthVerdict attached
    status: ReductionStatus


def find_strong_reduction(g: Graph, node_cap: int = DEFAULT_NODE_CAP,
                          cycle_cap: int = DEFAULT_CYCLE_CAP) -> StrongSearch:
    """Run the strength check over all reductions until one is strong."""
    cr = cover_report(g)
    if not cr.unmixed:
        return StrongSearch(None, (), ReductionStatus.NOT_UNMIXED)
    if cr.tau != (g.n + 1) // 2:
        return StrongSearch(None, (), ReductionStatus.WRONG_TAU)
    cycles = enumerate_odd_cycles(g, cycle_cap) if g.n % 2 else []
    examined = []
    for r in iter_reductions(g, cycles=cycles if g.n % 2 else None, node_cap=node_cap):
        verdict = is_strong(g, r, cycles)
        r = replace(r, strong=verdict)
        examined.append(r)
        if verdict.strong:
            return StrongSearch(r, tuple(examined), ReductionStatus.FOUND)
    status = ReductionStatus.FOUND if examined else ReductionStatus.ANOMALY
    return StrongSearch(None, tuple(examined), status)


# -- maximal and principal representations --------------------------------------


def _max_weight(g: Graph, w: Sequence[int], weighted: Sequence[int]) -> Optional[tuple]:
    """Largest alpha-sum over ``weighted`` edges among all representations of w.

    Returns ``(weight, representation)`` with the lexicographically largest
    alpha among maximisers, or None when w is not in NB.
    """
    if membership(g, w) is None:
        return None
    top = sum(min(w[a - 1], w[b - 1]) for a, b in (g.edge(k) for k in weighted))
    for t in range(top, -1, -1):
        rep = search_representation(g, w, weighted=weighted, weight_need=t)
        if rep is not None:
            return sum(rep.alpha[k - 1] for k in weighted), rep
    raise AssertionError("unreachable: weight 0 is always feasible for members")


def max_alpha_representation(g: Graph, r: TauReduction, w: Sequence[int]) -> Optional[tuple]:
    """``(representation, sum over edge parts)`` maximising that sum, or None if w is not in NB."""
    found = _max_weight(g, tuple(w), r.edge_parts)
    if found is None:
        return None
    weight, rep = found
    return rep, weight


@dataclass(frozen=True)
class PrincipalRepresentation:
    representation: Representation
    u: int
    sum_alpha_u: int
    cycle_orientation: Optional[tuple] = None  # (y_j1, ..., y_jk)
    anchor: Optional[int] = None

    def to_json(self) -> dict:
        return {
            "representation": self.representation.to_json(),
            "u": self.u,
            "sum_alpha_u": self.sum_alpha_u,
            "cycle_orientation": None if self.cycle_orientation is None else list(self.cycle_orientation),
            "anchor": self.anchor,
        }


def cycle_shift(g: Graph, c: OddCycle) -> tuple:
    """The vector (1_C, (k+1)/2)."""
    return c.indicator(g.n) + ((c.k + 1) // 2,)


def orientation_at(c: OddCycle, anchor: int) -> tuple:
    """Edge sequence of ``c`` starting and ending at ``anchor``."""
    s = c.vertices.index(anchor)
    return c.edges[s:] + c.edges[:s]


def principal_representation(g: Graph, r: TauReduction, w: Sequence[int]) -> Optional[PrincipalRepresentation]:
    """Search for a principal representation of ``w`` relative to ``r``.

    The maximality condition is global: the edge-part sum must equal its
    maximum over all representations of w.  Among principal representations
    the one with lexicographically largest alpha is returned.
    """
    w = tuple(w)
    best = _max_weight(g, w, r.edge_parts)
    if best is None:
        return None
    top, _ = best
    c = r.cycle_part
    if c is None:
        rep = search_representation(g, w, extra_lambda=1, weighted=r.edge_parts, weight_need=top)
        if rep is None:
            return None
        return PrincipalRepresentation(rep, r.u, top)
    # A cycle-case principal representation with anchor x_l is exactly a
    # representation of w - (1_C, (k+1)/2) with the same edge-part sum, plus
    # the matching of C - x_l and (e_l, 1).
    shift = cycle_shift(g, c)
    rest = tuple(a - b for a, b in zip(w, shift))
    if min(rest) < 0:
        return None
    sub = search_representation(g, rest, weighted=r.edge_parts, weight_need=top)
    if sub is None:
        return None
    options = []
    for anchor in c.vertices:
        alpha = list(sub.alpha)
        for k in cycle_matching(c, anchor):
            alpha[k - 1] += 1
        beta = list(sub.beta)
        beta[anchor - 1] += 1
        options.append((tuple(alpha), anchor, tuple(beta)))
    alpha, anchor, beta = max(options)
    rep = Representation(alpha, beta, sub.lambda_)
    if rep.evaluate(g) != w:
        raise AssertionError("principal representation does not evaluate back")
    return PrincipalRepresentation(rep, r.u, top, orientation_at(c, anchor), anchor)


def is_principal(g: Graph, r: TauReduction, rep: Representation, w: Sequence[int]) -> bool:
    """Check the three defining conditions of a principal representation directly."""
    if rep.evaluate(g) != tuple(w):
        return False
    best = _max_weight(g, w, r.edge_parts)
    if best is None or sum(rep.alpha[k - 1] for k in r.edge_parts) != best[0]:
        return False
    c = r.cycle_part
    if c is None:
        return rep.lambda_ > 0
    for anchor in c.vertices:
        if rep.beta[anchor - 1] > 0 and all(rep.alpha[k - 1] > 0 for k in cycle_matching(c, anchor)):
            return True
    return False


# -- sufficiency scan -------------------------------------------------------------


class SufficiencyStatus(enum.Enum):
    ALL_PRINCIPAL = "AllPrincipalUpTo"
    COUNTEREXAMPLE = "CounterexampleAt"


@dataclass(frozen=True)
class SufficiencyVerdict:
    status: SufficiencyStatus
    degree_bound: int
    scanned_degree: int  # last degree scanned in full
    points_checked: int
    complete: bool  # every degree up to degree_bound scanned
    counterexample: Optional[tuple] = None

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "degree_bound": self.degree_bound,
            "scanned_degree": self.scanned_degree,
            "points_checked": self.points_checked,
            "complete": self.complete,
            "counterexample": None if self.counterexample is None else list(self.counterexample),
        }


DEFAULT_SCAN_POINT_CAP = 2 * 10**5


def interior_semigroup_points(g: Graph, fs: FacetSet, b: int, normal: bool = True):
    """Interior points of degree b that lie in NB (all of them when S is normal)."""
    for w in lattice_points(fs, b, interior=True):
        if normal or membership(g, w) is not None:
            yield w


def gorenstein_sufficiency(g: Graph, r: TauReduction, degree_bound: Optional[int] = None,
                           point_cap: int = DEFAULT_SCAN_POINT_CAP,
                           facets: Optional[FacetSet] = None, normal: bool = True) -> SufficiencyVerdict:
    """Test every interior semigroup point up to ``degree_bound`` for a principal representation.

    Degrees are scanned in increasing order and points lexicographically, so
    the first counterexample is reproducible.  When ``point_cap`` would be
    exceeded the scan stops at the last fully scanned degree.
    """
    if degree_bound is None:
        degree_bound = 2 * g.n + 2
    fs = facets or enumerate_facets(build_generators(g))
    checked = 0
    done = 0
    for b in range(1, degree_bound + 1):
        pts = list(interior_semigroup_points(g, fs, b, normal))
        if checked + len(pts) > point_cap:
            return SufficiencyVerdict(SufficiencyStatus.ALL_PRINCIPAL, degree_bound, done, checked, False)
        for w in pts:
            checked += 1
            if principal_representation(g, r, w) is None:
                return SufficiencyVerdict(SufficiencyStatus.COUNTEREXAMPLE, degree_bound, done,
                                          checked, True, counterexample=w)
        done = b
    return SufficiencyVerdict(SufficiencyStatus.ALL_PRINCIPAL, degree_bound, done, checked, True)
