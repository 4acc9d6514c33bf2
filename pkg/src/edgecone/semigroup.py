"""Membership in the affine semigroup NB and the special vectors built from G.

A lattice vector is a plain tuple ``(a_1, ..., a_n, b)``; ``b`` is its degree.

Writing w = sum alpha_j (v_j, 1) + sum beta_i (e_i, 1) + lambda e_{n+1}
forces ``beta = a - A alpha`` and ``lambda = b - |a| + sum(alpha)``, so a
representation is just an edge-coefficient vector alpha with ``A alpha <= a``
and ``sum(alpha) >= |a| - b``: a capacitated b-matching problem.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .cone import build_generators
from .errors import CapExceededError, ContractError
from .graph import Graph, OddCycle, is_vertex_cover
from .triangulation import Triangulation, parallelepiped, triangulate


@dataclass(frozen=True)
class Representation:
    alpha: tuple
    beta: tuple
    lambda_: int

    def evaluate(self, g: Graph) -> tuple:
        a = list(self.beta)
        for k, c in enumerate(self.alpha, start=1):
            if c:
                i, j = g.edge(k)
                a[i - 1] += c
                a[j - 1] += c
        return tuple(a) + (sum(self.alpha) + sum(self.beta) + self.lambda_,)

    @property
    def degree(self) -> int:
        return sum(self.alpha) + sum(self.beta) + self.lambda_

    def to_json(self) -> dict:
        return {"alpha": list(self.alpha), "beta": list(self.beta), "lambda": self.lambda_}

    @classmethod
    def from_json(cls, data: dict) -> "Representation":
        return cls(tuple(data["alpha"]), tuple(data["beta"]), int(data["lambda"]))


def representation_from_alpha(g: Graph, w: Sequence[int], alpha: Sequence[int]) -> Representation:
    """Complete an edge-coefficient vector to a representation of ``w``."""
    a = list(w[:-1])
    for k, c in enumerate(alpha, start=1):
        if c:
            i, j = g.edge(k)
            a[i - 1] -= c
            a[j - 1] -= c
    lam = w[-1] - sum(w[:-1]) + sum(alpha)
    if min(a, default=0) < 0 or lam < 0:
        raise ContractError(f"alpha={tuple(alpha)} does not extend to a representation of {tuple(w)}")
    rep = Representation(tuple(alpha), tuple(a), lam)
    assert rep.evaluate(g) == tuple(w)
    return rep


def degree(w: Sequence[int]) -> int:
    return w[-1]


def norm(w: Sequence[int]) -> int:
    """|w~|, the sum of the first n coordinates."""
    return sum(w[:-1])


# -- b-matching search ----------------------------------------------------------


def _edge_order(g: Graph) -> list:
    return list(range(1, g.q + 1))


def _search_alpha(g: Graph, caps: Sequence[int], need: int, edges: Sequence[int],
                  weighted: frozenset = frozenset(), weight_need: int = 0):
    """Find alpha on ``edges`` with A alpha <= caps and sum(alpha) >= need.

    Optionally also require the coefficients on ``weighted`` edges to sum to
    at least ``weight_need``.  Depth-first, each coefficient tried from its
    largest value down, so the first hit is the lexicographically largest
    feasible alpha.  Returns a dict edge -> coefficient, or None.
    """
    if need <= 0 and weight_need <= 0:
        return {}
    ends = [g.edge(k) for k in edges]
    is_w = [k in weighted for k in edges]
    m = len(ends)
    # vertices still touched by edges[i:]
    touched = [()] * (m + 1)
    acc = set()
    for i in range(m - 1, -1, -1):
        acc |= set(ends[i])
        touched[i] = tuple(sorted(acc))
    w_after = [[] for _ in range(m + 1)]
    for i in range(m - 1, -1, -1):
        w_after[i] = w_after[i + 1] + ([ends[i]] if is_w[i] else [])
    failed = set()
    caps = list(caps)
    chosen = [0] * m

    def go(i, need, wneed):
        need, wneed = max(need, 0), max(wneed, 0)
        if not need and not wneed:
            return True
        if i == m:
            return False
        if sum(caps[v - 1] for v in touched[i]) // 2 < need:
            return False
        if wneed > 0 and sum(min(caps[a - 1], caps[b - 1]) for a, b in w_after[i]) < wneed:
            return False
        key = (i, need, wneed, tuple(caps[v - 1] for v in touched[i]))
        if key in failed:
            return False
        a, b = ends[i]
        top = min(caps[a - 1], caps[b - 1])
        wi = is_w[i]
        for c in range(top, -1, -1):
            caps[a - 1] -= c
            caps[b - 1] -= c
            chosen[i] = c
            ok = go(i + 1, need - c, wneed - c if wi else wneed)
            caps[a - 1] += c
            caps[b - 1] += c
            if ok:
                return True
        chosen[i] = 0
        failed.add(key)
        return False

    if not go(0, need, weight_need):
        return None
    return {k: c for k, c in zip(edges, chosen) if c}


def search_representation(g: Graph, w: Sequence[int], extra_lambda: int = 0,
                          weighted: Iterable[int] = (), weight_need: int = 0) -> Optional[Representation]:
    """Lexicographically largest-alpha representation under optional side constraints.

    ``extra_lambda`` demands lambda >= extra_lambda; ``weight_need`` demands
    the alpha-sum over ``weighted`` edges to be at least that much.
    """
    w = tuple(w)
    if not _valid_shape(g, w) or norm(w) > 2 * degree(w) - extra_lambda:
        return None
    found = _search_alpha(g, w[:-1], norm(w) - degree(w) + extra_lambda, _edge_order(g),
                          frozenset(weighted), weight_need)
    if found is None:
        return None
    alpha = tuple(found.get(k, 0) for k in range(1, g.q + 1))
    return representation_from_alpha(g, w, alpha)


def _valid_shape(g: Graph, w: Sequence[int]) -> bool:
    return len(w) == g.n + 1 and min(w) >= 0


def membership(g: Graph, w: Sequence[int]) -> Optional[Representation]:
    """A representation of ``w`` over B, or None when ``w`` is not in NB."""
    return search_representation(g, w)


def in_semigroup(g: Graph, w: Sequence[int]) -> bool:
    return membership(g, w) is not None


def membership_edges_only(g: Graph, w: Sequence[int]) -> Optional[tuple]:
    """Edge coefficients with sum alpha_j (v_j, 1) = w; requires |w~| = 2b."""
    w = tuple(w)
    if norm(w) != 2 * degree(w):
        raise ContractError(f"|w~| = {norm(w)} differs from 2b = {2 * degree(w)}")
    rep = membership(g, w)
    if rep is None:
        return None
    # forced: |w~| = 2 sum(alpha) + sum(beta) and sum(alpha) >= |w~| - b = b
    assert not any(rep.beta) and rep.lambda_ == 0
    return rep.alpha


# -- special vectors ------------------------------------------------------------


def spanning_tree_vector(g: Graph, tree: Iterable[int]):
    """The interior vector sum over tree edges of (v_j, 1), plus e_{n+1}."""
    tree = set(tree)
    if len(tree) != g.n - 1 or not all(1 <= k <= g.q for k in tree):
        raise ContractError("not a spanning tree edge set")
    alpha = tuple(int(k in tree) for k in range(1, g.q + 1))
    rep = Representation(alpha, tuple([0] * g.n), 1)
    w = rep.evaluate(g)
    if min(w[:-1]) == 0:
        raise ContractError("tree does not span")
    return w, rep


def private_edges(g: Graph, cover: Iterable[int]) -> dict:
    """For each cover vertex, its smallest-index edge meeting the cover only there."""
    cset = set(cover)
    out = {}
    for x in sorted(cset):
        for k, (i, j) in enumerate(g.edges, start=1):
            if x in (i, j) and len(cset & {i, j}) == 1:
                out[x] = k
                break
        else:
            raise ContractError(f"cover is not minimal: x{x} has no private edge")
    return out


def cover_vector(g: Graph, cover: Iterable[int]):
    """The interior vector attached to a minimal vertex cover (one private edge per cover vertex)."""
    cset = set(cover)
    if not is_vertex_cover(g, cset):
        raise ContractError(f"{sorted(cset)} is not a vertex cover")
    priv = private_edges(g, cset)
    alpha = [0] * g.q
    reached = set(cset)
    for x, k in priv.items():
        alpha[k - 1] += 1
        reached |= set(g.edge(k))
    beta = tuple(int(v not in reached) for v in g.vertices)
    rep = Representation(tuple(alpha), beta, 1)
    return rep.evaluate(g), rep


def odd_cycle_vector(g: Graph, c: OddCycle, anchor: int):
    """(1_C, (k+1)/2) written with the cycle edges opposite ``anchor`` plus (e_anchor, 1)."""
    if anchor not in c.vertex_set:
        raise ContractError(f"x{anchor} is not on the cycle")
    alpha = [0] * g.q
    for k in cycle_matching(c, anchor):
        alpha[k - 1] = 1
    beta = tuple(int(v == anchor) for v in g.vertices)
    rep = Representation(tuple(alpha), beta, 0)
    return rep.evaluate(g), rep


def cycle_matching(c: OddCycle, anchor: int) -> tuple:
    """Edges of ``c`` forming the perfect matching of the path C - anchor."""
    s = c.vertices.index(anchor)
    k = c.k
    # edges[i] joins vertices[i], vertices[i+1]; start right after the anchor
    return tuple(sorted(c.edges[(s + 1 + 2 * t) % k] for t in range((k - 1) // 2)))


# -- normality ------------------------------------------------------------------


class Normality(enum.Enum):
    NORMAL = "Normal"
    NOT_NORMAL = "NotNormal"
    UNKNOWN = "UnknownUpTo"


@dataclass(frozen=True)
class NormalityReport:
    verdict: Normality
    checked_degree: int
    lattice_points_checked: int
    witness: Optional[tuple] = None
    threshold: int = 0
    method: str = "triangulation"

    @property
    def normal(self) -> bool:
        return self.verdict is Normality.NORMAL

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "checked_degree": self.checked_degree,
            "lattice_points_checked": self.lattice_points_checked,
            "witness": None if self.witness is None else list(self.witness),
            "threshold": self.threshold,
            "method": self.method,
        }

    @classmethod
    def from_json(cls, data: dict) -> "NormalityReport":
        w = data.get("witness")
        return cls(Normality(data["verdict"]), data["checked_degree"], data["lattice_points_checked"],
                   None if w is None else tuple(w), data.get("threshold", 0),
                   data.get("method", "triangulation"))


DEFAULT_POINT_CAP = 10**6


def is_normal(g: Graph, degree_bound: Optional[int] = None, point_cap: int = DEFAULT_POINT_CAP,
              triangulation: Optional[Triangulation] = None) -> NormalityReport:
    """Decide whether cone(B) cap Z^{n+1} equals NB, looking at degrees <= degree_bound.

    The candidates are the nonzero points of the fundamental parallelepipeds
    of a triangulation; all of them have degree at most n, so a bound of at
    least n gives a definite answer.
    """
    n = g.n
    if degree_bound is None:
        degree_bound = n
    if degree_bound < 1:
        raise ContractError("degree_bound must be at least 1")
    gens = build_generators(g).gens
    tri = triangulation or triangulate(gens)
    checked = 0
    skipped = False
    for s in tri.simplices:
        if s.volume == 1:
            continue
        for x, _ in parallelepiped(gens, s):
            if not any(x):
                continue
            if degree(x) > degree_bound:
                skipped = True
                continue
            checked += 1
            if checked > point_cap:
                raise CapExceededError("normality lattice points", point_cap)
            if membership(g, x) is None:
                return NormalityReport(Normality.NOT_NORMAL, degree_bound, checked, witness=x, threshold=n)
    if skipped or degree_bound < n:
        return NormalityReport(Normality.UNKNOWN, degree_bound, checked, threshold=n)
    return NormalityReport(Normality.NORMAL, degree_bound, checked, threshold=n)
