"""Small-graph census: canonical labeling, graph6 and connected-graph generation.

Canonical form is found by colour refinement plus individualisation, taking
the lexicographically largest adjacency word over all leaves of the search
tree.  That is exponential on very symmetric graphs, but fine up to n = 9.
"""

from __future__ import annotations

import hashlib
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import GraphError
from .graph import Graph

HARD_N_LIMIT = 9


def _refine(adj: Sequence[frozenset], cells: list) -> list:
    """Split cells by neighbour counts into other cells until stable."""
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        where = {}
        for ci, c in enumerate(cells):
            for v in c:
                where[v] = ci
        out = []
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups = {}
            for v in c:
                sig = [0] * len(cells)
                for u in adj[v]:
                    sig[where[u]] += 1
                groups.setdefault(tuple(sig), []).append(v)
            if len(groups) > 1:
                changed = True
            out.extend(groups[k] for k in sorted(groups))
        cells = out
    return cells


def _word(adj: Sequence[frozenset], order: Sequence[int]) -> tuple:
    n = len(order)
    return tuple(int(order[j] in adj[order[i]]) for j in range(n) for i in range(j))


def canonical_order(g: Graph) -> tuple:
    """Vertex order (old labels) realising the canonical adjacency word."""
    adj = [frozenset()] + [frozenset(g.adjacency[v]) for v in g.vertices]
    by_degree = {}
    for v in g.vertices:
        by_degree.setdefault(len(adj[v]), []).append(v)
    start = _refine(adj, [by_degree[d] for d in sorted(by_degree)])
    best = [None, None]

    def search(cells):
        cells = _refine(adj, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = tuple(c[0] for c in cells)
            w = _word(adj, order)
            if best[0] is None or w > best[0]:
                best[0], best[1] = w, order
            return
        for v in cells[target]:
            rest = [u for u in cells[target] if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search(start)
    return best[1]


def canonical_form(g: Graph) -> Graph:
    order = canonical_order(g)
    perm = {old: new for new, old in enumerate(order, start=1)}
    return Graph(g.n, tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in g.edges)))


def to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise GraphError("graph6 writer supports n <= 62 only")
    bits = [int(g.has_edge(i, j)) for j in range(2, g.n + 1) for i in range(1, j)]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        chars.append(chr(63 + int("".join(map(str, bits[k:k + 6])), 2)))
    return "".join(chars)


def from_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s or not all(63 <= ord(ch) <= 126 for ch in s):
        raise GraphError(f"not a graph6 string: {line!r}")
    n = ord(s[0]) - 63
    if n > 62:
        raise GraphError("graph6 reader supports n <= 62 only")
    bits = []
    for ch in s[1:]:
        v = ord(ch) - 63
        bits.extend((v >> (5 - t)) & 1 for t in range(6))
    need = n * (n - 1) // 2
    if len(bits) < need:
        raise GraphError(f"graph6 string too short for n={n}")
    edges = []
    k = 0
    for j in range(2, n + 1):
        for i in range(1, j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, tuple(edges))


def canonical_hash(g: Graph) -> str:
    """Isomorphism-invariant digest."""
    return hashlib.sha256(to_graph6(canonical_form(g)).encode()).hexdigest()[:16]


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple:
    """One canonical representative per isomorphism class of connected graphs on n vertices.

    Every connected graph has a vertex whose removal keeps it connected, so
    extending each class on n-1 vertices by a vertex with a nonempty
    neighbourhood reaches every class.
    """
    if n < 1 or n > HARD_N_LIMIT:
        raise GraphError(f"census supports 1 <= n <= {HARD_N_LIMIT}")
    if n == 1:
        return ()  # a graph needs at least one edge here
    if n == 2:
        return (Graph(2, ((1, 2),)),)
    seen = {}
    for h in connected_graphs(n - 1):
        for mask in range(1, 1 << (n - 1)):
            extra = tuple((i, n) for i in range(1, n) if mask >> (i - 1) & 1)
            c = canonical_form(Graph(n, h.edges + extra))
            seen.setdefault(to_graph6(c), c)
    return tuple(seen[k] for k in sorted(seen))


def census(n_max: int) -> Iterator[Graph]:
    for n in range(2, n_max + 1):
        yield from connected_graphs(n)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        if line.strip() and not line.lstrip().startswith("#"):
            yield from_graph6(line)
