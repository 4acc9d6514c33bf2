"""Slow reference implementations used to cross-check the fast paths.

Nothing here shares code with the production algorithms beyond the Graph
type and generator construction: facets come from exhaustive n-subsets,
membership from exhaustive coefficient enumeration, cycles from vertex
permutations.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Iterator, Optional, Sequence

import numpy as np

from .cone import build_generators
from .graph import Graph


def brute_force_facets(g: Graph) -> set:
    """Primitive inward facet normals of cone(B), from every n-subset of generators."""
    gens = np.array(build_generators(g).gens, dtype=np.int64)
    d = gens.shape[1]
    subsets = np.array(list(combinations(range(len(gens)), d - 1)), dtype=np.int64)
    out = set()
    chunk = 20000
    for start in range(0, len(subsets), chunk):
        sub = gens[subsets[start:start + chunk]]  # (m, d-1, d)
        # cofactor expansion: normal_k = (-1)^k det(sub without column k)
        cols = []
        for k in range(d):
            minor = np.delete(sub, k, axis=2).astype(float)
            cols.append(((-1) ** k) * np.rint(np.linalg.det(minor)).astype(np.int64))
        normals = np.stack(cols, axis=1)
        # keep only normals that vanish exactly on their own subset
        exact = ~np.any(np.einsum("mij,mj->mi", sub, normals), axis=1)
        normals = normals[exact & np.any(normals != 0, axis=1)]
        vals = normals @ gens.T
        for vec, v in zip(normals, vals):
            if (v >= 0).all():
                pass
            elif (v <= 0).all():
                vec = -vec
            else:
                continue
            # the tight generators must span a hyperplane, not less
            tight = gens[(vec @ gens.T) == 0]
            if np.linalg.matrix_rank(tight.astype(float)) != d - 1:
                continue
            gcd = int(np.gcd.reduce(np.abs(vec)))
            out.add(tuple(int(x) // gcd for x in vec))
    return out


def facet_ells(normals: set, n: int) -> set:
    """Ell vectors of the non-coordinate normals, as Fraction tuples."""
    return {tuple(Fraction(-x, v[n]) for x in v[:n]) for v in normals if v[n] != 0}


def representations(g: Graph, w: Sequence[int]) -> Iterator[tuple]:
    """Every (alpha, beta, lambda) with sum alpha (v,1) + sum beta (e,1) + lambda e_{n+1} = w."""
    n, q = g.n, g.q
    a, b = list(w[:-1]), w[-1]
    if len(w) != n + 1 or min(w) < 0:
        return
    edges = list(g.edges)

    def rec(k, caps, alpha):
        if k == q:
            beta = tuple(caps)
            lam = b - sum(alpha) - sum(beta)
            if lam >= 0:
                yield tuple(alpha), beta, lam
            return
        i, j = edges[k]
        for c in range(min(caps[i - 1], caps[j - 1]) + 1):
            caps[i - 1] -= c
            caps[j - 1] -= c
            alpha.append(c)
            yield from rec(k + 1, caps, alpha)
            alpha.pop()
            caps[i - 1] += c
            caps[j - 1] += c

    yield from rec(0, a, [])


def brute_membership(g: Graph, w: Sequence[int]) -> bool:
    return next(representations(g, w), None) is not None


def lattice_box(n: int, b: int) -> Iterator[tuple]:
    """All (a, b) with 0 <= a_i <= b; no point of degree b in the cone lies outside."""
    for a in product(range(b + 1), repeat=n):
        yield a + (b,)


def brute_interior(normals: set, w: Sequence[int]) -> bool:
    return all(sum(x * y for x, y in zip(v, w)) > 0 for v in normals)


def brute_odd_cycles(g: Graph) -> list:
    """Vertex sets and cyclic orders of all odd cycles, one entry per cycle."""
    seen = set()
    out = []
    for k in range(3, g.n + 1, 2):
        for verts in combinations(g.vertices, k):
            first, rest = verts[0], verts[1:]
            for perm in permutations(rest):
                order = (first,) + perm
                if order[1] > order[-1]:
                    continue
                if all(g.has_edge(order[i], order[(i + 1) % k]) for i in range(k)):
                    key = frozenset(frozenset((order[i], order[(i + 1) % k])) for i in range(k))
                    if key not in seen:
                        seen.add(key)
                        out.append(order)
    return out


def brute_is_strong(g: Graph, cycle_vertices: Optional[Sequence[int]]) -> bool:
    """Literal quantifier check of the strength condition for a cycle part."""
    if cycle_vertices is None:
        return True
    near = set(cycle_vertices)
    for x in cycle_vertices:
        near |= g.adjacency[x]
    for x in near:
        for cyc in brute_odd_cycles(g):
            if not any(x in e and set(e) & set(cyc) for e in g.edges):
                return False
    return True


def brute_principal(g: Graph, edge_parts: Sequence[int], cycle: Optional[Sequence[int]],
                    w: Sequence[int]) -> Optional[tuple]:
    """A principal representation found by listing every representation of w, or None.

    ``cycle`` is the cyclic vertex order of the cycle part.  Condition (1) is
    taken over all representations; conditions on lambda or on the
    alternating cycle edges and the anchor are then checked for every
    rotation and reflection.
    """
    reps = list(representations(g, w))
    if not reps:
        return None
    top = max(sum(al[k - 1] for k in edge_parts) for al, _, _ in reps)
    best = [rep for rep in reps if sum(rep[0][k - 1] for k in edge_parts) == top]
    if cycle is None:
        return next((rep for rep in best if rep[2] > 0), None)
    k = len(cycle)
    orders = []
    for s in range(k):
        rot = tuple(cycle[s:]) + tuple(cycle[:s])
        orders += [rot, (rot[0],) + tuple(reversed(rot[1:]))]
    for rep in best:
        alpha, beta, _ = rep
        for order in orders:
            # order = (x_l, ...): y_{j_i} joins order[i-1], order[i]; y_{j_1}, y_{j_k} meet at x_l
            ys = [g.edge_index[tuple(sorted((order[i - 1], order[i % k])))] for i in range(1, k + 1)]
            if beta[order[0] - 1] > 0 and all(alpha[ys[i - 1] - 1] > 0 for i in range(2, k, 2)):
                return rep
    return None


def brute_minimal_interior(g: Graph, normals: set, w: Sequence[int]) -> bool:
    """w is interior, in NB and not divisible by a smaller interior NB point."""
    if not brute_interior(normals, w) or not brute_membership(g, w):
        return False
    for gen in build_generators(g).gens:
        x = tuple(a - b for a, b in zip(w, gen))
        if min(x) >= 0 and brute_interior(normals, x) and brute_membership(g, x):
            return False
    return True


def _reduction_parts(data: dict) -> tuple:
    cyc = data.get("cycle_part")
    return tuple(data["edge_parts"]), None if cyc is None else tuple(cyc["vertices"])


def brute_valid_reduction(g: Graph, edge_parts: Sequence[int], cycle: Optional[Sequence[int]]) -> bool:
    """Partition, induced short odd cycle and cover-number additivity, all by brute force."""
    verts = [v for k in edge_parts for v in g.edge(k)] + list(cycle or ())
    if sorted(verts) != list(g.vertices):
        return False
    if cycle is not None:
        k = len(cycle)
        if k not in (3, 5, 7):
            return False
        ring = {frozenset((cycle[i], cycle[(i + 1) % k])) for i in range(k)}
        inside = {frozenset(e) for e in g.edges if set(e) <= set(cycle)}
        if inside != ring:
            return False
    tau = min(len(c) for c in brute_covers(g))
    return len(edge_parts) + (0 if cycle is None else (len(cycle) + 1) // 2) == tau


def brute_covers(g: Graph) -> list:
    """Every minimal vertex cover, from all vertex subsets."""
    covers = [set(c) for k in range(g.n + 1) for c in combinations(g.vertices, k)
              if all(a in c or b in c for a, b in g.edges)]
    return [c for c in covers if not any(d < c for d in covers)]


def verify_probe_certificate(g: Graph, certificates: dict) -> list:
    """Re-check every claim in a probe's certificates with the brute-force routines.

    Returns ``(claim, ok)`` pairs; an empty certificate set yields no pairs.
    """
    checks = []
    normals = brute_force_facets(g)
    a = certificates.get("statement_a")
    if a is not None:
        w = tuple(a["vector"])
        checks.append(("vector is interior", brute_interior(normals, w)))
        checks.append(("vector is in NB", brute_membership(g, w)))
        for data in a["strong_reductions"]:
            parts, cyc = _reduction_parts(data)
            tag = f"reduction {list(parts)} + {list(cyc) if cyc else '-'}"
            checks.append((f"{tag} is valid", brute_valid_reduction(g, parts, cyc)))
            checks.append((f"{tag} is strong", brute_is_strong(g, cyc)))
            checks.append((f"{tag}: no principal representation", brute_principal(g, parts, cyc, w) is None))
    b = certificates.get("statement_b")
    if b is not None:
        gens = [tuple(x) for x in b.get("generators") or []]
        covers = brute_covers(g)
        checks.append(("unmixed claim", (len({len(c) for c in covers}) == 1) == b["unmixed"]))
        if b["lattice_verdict"] == "NotGorenstein":
            checks.append(("two distinct generators listed", len(set(gens)) >= 2))
            for w in gens[:2]:
                checks.append((f"{list(w)} is a minimal interior point", brute_minimal_interior(g, normals, w)))
        else:
            checks.append(("one generator listed", len(gens) == 1))
        data = b.get("strong_reduction")
        if data is not None:
            parts, cyc = _reduction_parts(data)
            checks.append(("listed reduction is valid", brute_valid_reduction(g, parts, cyc)))
            checks.append(("listed reduction is strong", brute_is_strong(g, cyc)))
    return checks
