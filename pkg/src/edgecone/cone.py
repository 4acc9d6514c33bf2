"""The cone spanned by B and its exact facet description.

B consists of (e_i, 1) for every vertex, (v_j, 1) for every edge and the
unit vector e_{n+1}; all live at height one in Z^{n+1}.  Facets come from an
incremental double description over the integers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .errors import ContractError, InternalInvariantError
from .graph import Graph, bipartition_or_odd_cycle, maximal_stable_sets, OddCycle
from .linalg import adjugate, dot, primitive, rank


# -- generators -----------------------------------------------------------------


@dataclass(frozen=True)
class Provenance:
    kind: str  # "vertex" | "edge" | "unit"
    index: int = 0

    def __str__(self):
        if self.kind == "unit":
            return "e_{n+1}"
        return f"{'x' if self.kind == 'vertex' else 'y'}{self.index}"


@dataclass(frozen=True)
class GeneratorSet:
    n: int
    gens: tuple
    provenance: tuple

    @property
    def dim(self) -> int:
        return self.n + 1

    def __len__(self):
        return len(self.gens)

    def index_of_vertex(self, i: int) -> int:
        return i - 1

    def index_of_edge(self, j: int) -> int:
        return self.n + j - 1

    @property
    def unit_index(self) -> int:
        return len(self.gens) - 1


def build_generators(g: Graph) -> GeneratorSet:
    n = g.n
    gens, prov = [], []
    for i in range(1, n + 1):
        v = [0] * (n + 1)
        v[i - 1] = 1
        v[n] = 1
        gens.append(tuple(v))
        prov.append(Provenance("vertex", i))
    for j, (a, b) in enumerate(g.edges, start=1):
        v = [0] * (n + 1)
        v[a - 1] = v[b - 1] = 1
        v[n] = 1
        gens.append(tuple(v))
        prov.append(Provenance("edge", j))
    gens.append(tuple([0] * n + [1]))
    prov.append(Provenance("unit"))
    return GeneratorSet(n, tuple(gens), tuple(prov))


# -- facets ---------------------------------------------------------------------


@dataclass(frozen=True)
class FacetNormal:
    """An inward facet normal.

    ``vector`` is the primitive integer normal.  Ell-type facets also carry
    ``ell`` so that the normal is a positive multiple of (-ell, 1).
    """

    vector: tuple
    kind: str  # "coordinate" | "ell"
    coordinate: int = 0
    ell: Optional[tuple] = None

    def value(self, w: Sequence[int]) -> int:
        return dot(self.vector, w)


def _classify(vec: tuple, n: int) -> FacetNormal:
    last = vec[n]
    if last == 0:
        nz = [i for i, x in enumerate(vec) if x != 0]
        if len(nz) != 1 or vec[nz[0]] != 1:
            raise InternalInvariantError(f"height-zero facet {vec} is not a coordinate facet")
        return FacetNormal(vec, "coordinate", coordinate=nz[0] + 1)
    if last < 0:
        raise InternalInvariantError(f"facet {vec} is negative on e_(n+1)")
    ell = tuple(Fraction(-x, last) for x in vec[:n])
    return FacetNormal(vec, "ell", ell=ell)


@dataclass(frozen=True)
class FacetSet:
    n: int
    coordinate_facets: tuple
    ell_facets: tuple

    @property
    def m(self) -> int:
        return len(self.ell_facets)

    @property
    def normals(self) -> tuple:
        return self.coordinate_facets + self.ell_facets

    @property
    def ells(self) -> tuple:
        return tuple(f.ell for f in self.ell_facets)

    def to_json(self) -> dict:
        return {
            "coordinate": [f.coordinate for f in self.coordinate_facets],
            "ell": [[_frac_str(x) for x in f.ell] for f in self.ell_facets],
        }

    @classmethod
    def from_json(cls, n: int, data: dict) -> "FacetSet":
        coords = []
        for i in data["coordinate"]:
            v = [0] * (n + 1)
            v[i - 1] = 1
            coords.append(FacetNormal(tuple(v), "coordinate", coordinate=i))
        ells = []
        for row in data["ell"]:
            ell = tuple(Fraction(x) for x in row)
            den = 1
            for x in ell:
                den = den * x.denominator // gcd(den, x.denominator)
            vec = primitive([int(-x * den) for x in ell] + [den])
            ells.append(FacetNormal(vec, "ell", ell=ell))
        return cls(n, tuple(coords), tuple(ells))

    def verify(self, gs: GeneratorSet) -> None:
        """Check soundness and the facet rank condition; raise on failure."""
        for f in self.normals:
            tight = [g for g in gs.gens if dot(f.vector, g) < 0]
            if tight:
                raise InternalInvariantError(f"{f.vector} negative on {tight[0]}")
            if rank([g for g in gs.gens if dot(f.vector, g) == 0]) != gs.n:
                raise InternalInvariantError(f"{f.vector} is not a facet")


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _initial_basis(gens: Sequence[tuple]) -> list:
    basis = []
    for idx, g in enumerate(gens):
        if rank([gens[i] for i in basis] + [g]) == len(basis) + 1:
            basis.append(idx)
            if len(basis) == len(g):
                break
    return basis


def dual_rays(gens: Sequence[tuple]) -> list:
    """Extreme rays of the dual of cone(gens), for a full-dimensional pointed cone.

    Incremental double description; insertion order is the order of ``gens``.
    Returns primitive integer vectors, unordered.
    """
    d = len(gens[0])
    basis = _initial_basis(gens)
    if len(basis) != d:
        raise InternalInvariantError("generators do not span the ambient space")
    adj, det_ = adjugate([gens[i] for i in basis])
    sign = 1 if det_ > 0 else -1
    rays = []
    for k in range(d):
        # column k of the adjugate vanishes on every basis vector but the k-th
        r = primitive([sign * adj[i][k] for i in range(d)])
        zero = 0
        for pos, gi in enumerate(basis):
            if pos != k:
                zero |= 1 << gi
        rays.append((r, zero))
    in_basis = set(basis)
    for gi, g in enumerate(gens):
        if gi in in_basis:
            continue
        pos, neg, keep = [], [], []
        for r, z in rays:
            s = dot(r, g)
            if s > 0:
                pos.append((r, z, s))
                keep.append((r, z))
            elif s < 0:
                neg.append((r, z, s))
            else:
                keep.append((r, z | (1 << gi)))
        if not neg:
            rays = keep
            continue
        all_zero = [z for _, z in rays]
        new = []
        for rp, zp, sp in pos:
            for rn, zn, sn in neg:
                common = zp & zn
                if bin(common).count("1") < d - 2:
                    continue
                # combinatorial adjacency: no third ray is tight on all of common
                if any((z & common) == common and z != zp and z != zn for z in all_zero):
                    continue
                vec = primitive([sp * b - sn * a for a, b in zip(rp, rn)])
                new.append((vec, common | (1 << gi)))
        rays = keep + new
    return [r for r, _ in rays]


def enumerate_facets(gs: GeneratorSet) -> FacetSet:
    n = gs.n
    coords, ells = [], []
    for vec in dual_rays(list(gs.gens)):
        f = _classify(vec, n)
        (coords if f.kind == "coordinate" else ells).append(f)
    coords.sort(key=lambda f: f.coordinate)
    ells.sort(key=lambda f: f.ell)
    if [f.coordinate for f in coords] != list(range(1, n + 1)):
        raise InternalInvariantError("coordinate facets missing")
    return FacetSet(n, tuple(coords), tuple(ells))


# -- positions ------------------------------------------------------------------


class Position(enum.Enum):
    OUTSIDE = "outside"
    BOUNDARY = "boundary"
    INTERIOR = "interior"


@dataclass(frozen=True)
class ConePosition:
    kind: Position
    tight: tuple = ()

    @property
    def interior(self) -> bool:
        return self.kind is Position.INTERIOR


def position(fs: FacetSet, w: Sequence[int]) -> ConePosition:
    """Locate an integer vector against the facet description."""
    if len(w) != fs.n + 1:
        raise ContractError(f"expected a vector of length {fs.n + 1}")
    tight = []
    for f in fs.normals:
        v = f.value(w)
        if v < 0:
            return ConePosition(Position.OUTSIDE)
        if v == 0:
            tight.append(f)
    if tight:
        return ConePosition(Position.BOUNDARY, tuple(tight))
    return ConePosition(Position.INTERIOR)


def in_cone(fs: FacetSet, w: Sequence[int]) -> bool:
    return all(f.value(w) >= 0 for f in fs.normals)


def is_interior(fs: FacetSet, w: Sequence[int]) -> bool:
    return all(f.value(w) > 0 for f in fs.normals)


# -- cross-check helpers --------------------------------------------------------


def expected_special_normals(g: Graph) -> list:
    """Ell vectors that must appear among the facets.

    Half the all-ones vector when g has an odd cycle, plus the indicator of
    every maximal stable set.
    """
    out = []
    if isinstance(bipartition_or_odd_cycle(g), OddCycle):
        out.append(tuple(Fraction(1, 2) for _ in range(g.n)))
    for f in maximal_stable_sets(g):
        fs = set(f)
        out.append(tuple(Fraction(int(i in fs)) for i in g.vertices))
    return out


def tree_plus_edge_rank(g: Graph, tree: Sequence[int], e: int) -> int:
    """Rank of the characteristic vectors of ``tree`` plus edge ``e``."""
    if e in tree:
        raise ContractError(f"y{e} already in the tree")
    if len(set(tree)) != g.n - 1:
        raise ContractError("tree must have n-1 edges")
    rows = []
    for k in list(tree) + [e]:
        a, b = g.edge(k)
        rows.append(tuple(int(v in (a, b)) for v in g.vertices))
    return rank(rows)


def lattice_points(fs: FacetSet, b: int, interior: bool = False):
    """Yield the lattice points of degree ``b`` in the cone (or its interior).

    Points come out in lexicographic order.  Entries are bounded by b since
    every generator is 0/1 at height one.
    """
    n = fs.n
    lo = 1 if interior else 0
    if b < 0 or (interior and b < 1):
        return
    rows = [f.vector for f in fs.ell_facets]
    strict = 1 if interior else 0
    # best-case contribution of coordinates i.. for each facet, a_i in [lo, b]
    best = [[0] * (n + 1) for _ in rows]
    for r, vec in enumerate(rows):
        for i in range(n - 1, -1, -1):
            best[r][i] = best[r][i + 1] + max(vec[i] * lo, vec[i] * b)
    partial = [vec[n] * b for vec in rows]
    point = [0] * n

    def rec(i):
        if i == n:
            yield tuple(point) + (b,)
            return
        for a in range(lo, b + 1):
            ok = True
            for r, vec in enumerate(rows):
                if partial[r] + vec[i] * a + best[r][i + 1] < strict:
                    ok = False
                    break
            if not ok:
                continue
            point[i] = a
            for r, vec in enumerate(rows):
                partial[r] += vec[i] * a
            yield from rec(i + 1)
            for r, vec in enumerate(rows):
                partial[r] -= vec[i] * a

    yield from rec(0)
