"""Exact integer/rational linear algebra on small dense matrices.

Matrices are lists of rows of Python ints.  The adjugate and kernel routines
try a float computation first and keep it only if an exact integer check
passes; otherwise they fall back to rational elimination.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

import numpy as np


def primitive(v: Sequence[int]) -> tuple:
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def rank(rows: Sequence[Sequence]) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, len(m)):
            if m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def det(rows: Sequence[Sequence[int]]) -> int:
    """Integer determinant by fraction-free Bareiss elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1] if n else 1


def adjugate(rows: Sequence[Sequence[int]]) -> tuple:
    """Return ``(adj, d)`` with ``adj @ M == d * I`` and d = det(M) != 0."""
    m = np.array(rows, dtype=np.int64)
    fd = np.linalg.det(m.astype(float))
    d = int(round(fd))
    if d != 0:
        adj = np.rint(np.linalg.inv(m.astype(float)) * fd).astype(np.int64)
        if (adj @ m == d * np.eye(len(m), dtype=np.int64)).all():
            return adj.tolist(), d
    return _adjugate_exact(rows)


def _adjugate_exact(rows: Sequence[Sequence[int]]) -> tuple:
    n = len(rows)
    m = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    d = det(rows)
    adj = [[int(x * d) for x in r[n:]] for r in m]
    return adj, d


def normal_vector(rows: Sequence[Sequence[int]]) -> tuple:
    """Primitive integer vector orthogonal to ``rows`` (which must have corank 1)."""
    m = np.array(rows, dtype=np.int64)
    if m.shape[0] == m.shape[1] - 1:
        # generalized cross product: signed maximal minors
        minors = np.stack([np.delete(m, k, axis=1) for k in range(m.shape[1])]).astype(float)
        signs = np.where(np.arange(m.shape[1]) % 2 == 0, 1, -1)
        vec = signs * np.rint(np.linalg.det(minors)).astype(np.int64)
        if vec.any() and not (m @ vec).any():
            return _orient_first_nonzero(primitive([int(x) for x in vec]))
    return _orient_first_nonzero(_normal_vector_exact(rows))


def _orient_first_nonzero(v: tuple) -> tuple:
    # the two routines may disagree in sign; fix one representative
    first = next(x for x in v if x)
    return v if first > 0 else tuple(-x for x in v)


def _normal_vector_exact(rows: Sequence[Sequence[int]]) -> tuple:
    ncols = len(rows[0])
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    if len(free) != 1:
        raise ValueError(f"expected corank 1, got nullity {len(free)}")
    f = free[0]
    sol = [Fraction(0)] * ncols
    sol[f] = Fraction(1)
    for i, c in enumerate(pivots):
        sol[c] = -m[i][f]
    den = 1
    for x in sol:
        den = den * x.denominator // gcd(den, x.denominator)
    return primitive([int(x * den) for x in sol])
