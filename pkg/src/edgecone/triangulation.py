"""Placing triangulation of cone(B) and fundamental-parallelepiped points.

Every lattice point of the cone lies in some simplicial cone sigma of the
triangulation, hence in ``par(sigma) + N-span(sigma)``.  That reduces
normality to a finite check and also bounds where canonical-module
generators can live.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .errors import InternalInvariantError
from .linalg import adjugate, dot, normal_vector
from .cone import _initial_basis


@dataclass(frozen=True)
class Simplex:
    indices: tuple  # generator indices, increasing
    volume: int  # |det|, the index of the sublattice


@dataclass(frozen=True)
class Triangulation:
    gens: tuple
    simplices: tuple

    @property
    def normalized_volume(self) -> int:
        return sum(s.volume for s in self.simplices)


def triangulate(gens: Sequence[tuple]) -> Triangulation:
    """Placing triangulation: start from the first basis, add generators in order."""
    gens = tuple(tuple(g) for g in gens)
    d = len(gens[0])
    basis = _initial_basis(gens)
    if len(basis) != d:
        raise InternalInvariantError("generators do not span the ambient space")
    simplices = [tuple(sorted(basis))]
    adj, det_ = adjugate([gens[i] for i in basis])
    sign = 1 if det_ > 0 else -1
    boundary = {}
    for k, gk in enumerate(basis):
        face = tuple(sorted(gi for gi in basis if gi != gk))
        boundary[face] = tuple(sign * adj[i][k] for i in range(d))
    placed = set(basis)
    for pi, p in enumerate(gens):
        if pi in placed:
            continue
        visible = [f for f, nrm in boundary.items() if dot(nrm, p) < 0]
        if not visible:
            continue  # already inside the current cone
        placed.add(pi)
        ridge_count = {}
        for face in visible:
            del boundary[face]
            simplices.append(tuple(sorted(face + (pi,))))
            for drop in face:
                ridge = tuple(x for x in face if x != drop)
                new_face = tuple(sorted(ridge + (pi,)))
                ridge_count.setdefault(new_face, []).append(drop)
        for new_face, opposite in ridge_count.items():
            if len(opposite) > 1:
                continue
            nrm = normal_vector([gens[i] for i in new_face])
            if dot(nrm, gens[opposite[0]]) < 0:
                nrm = tuple(-x for x in nrm)
            boundary[new_face] = nrm
    out = []
    for s in simplices:
        _, dd = adjugate([gens[i] for i in s])
        out.append(Simplex(s, abs(dd)))
    return Triangulation(gens, tuple(out))


def parallelepiped(gens: Sequence[tuple], simplex: Simplex) -> list:
    """Lattice points of the half-open parallelepiped of ``simplex``.

    Returns pairs ``(point, coeffs)`` where ``coeffs[i] / volume`` is the
    coefficient of the i-th simplex generator, each in ``[0, volume)``.
    Includes the origin.
    """
    rows = [gens[i] for i in simplex.indices]
    d = len(rows)
    D = simplex.volume
    if D == 1:
        return [(tuple([0] * d), tuple([0] * d))]
    adj, det_ = adjugate(rows)
    sign = 1 if det_ > 0 else -1
    # x = sum_i (t_i / D) rows[i]  <=>  t = D * x @ M^{-1} = sign * x @ adj
    steps = [tuple((sign * adj[j][i]) % D for i in range(d)) for j in range(d)]
    zero = tuple([0] * d)
    seen = {zero}
    queue = deque([zero])
    while queue:
        t = queue.popleft()
        for s in steps:
            u = tuple((a + b) % D for a, b in zip(t, s))
            if u not in seen:
                seen.add(u)
                queue.append(u)
    if len(seen) != D:
        raise InternalInvariantError(f"parallelepiped has {len(seen)} points, expected {D}")
    out = []
    for t in sorted(seen):
        num = [sum(t[i] * rows[i][c] for i in range(d)) for c in range(d)]
        if any(v % D for v in num):
            raise InternalInvariantError("non-integral parallelepiped point")
        out.append((tuple(v // D for v in num), t))
    return out
