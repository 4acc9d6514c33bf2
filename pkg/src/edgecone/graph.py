"""Connected simple graphs and the vertex-cover combinatorics built on them.

Vertices and edges are 1-based everywhere: vertex ``i`` is x_i and edge
``j`` is y_j, the j-th line of the edge list.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence, Union

from .errors import (
    CapExceededError,
    ContractError,
    DisconnectedGraphError,
    DuplicateEdgeError,
    EmptyEdgeSetError,
    LoopError,
    MalformedLineError,
)

DEFAULT_COVER_CAP = 10**6
DEFAULT_CYCLE_CAP = 10**5


@dataclass(frozen=True)
class Graph:
    """A connected simple graph on vertices 1..n with an ordered edge list."""

    n: int
    edges: tuple

    def __post_init__(self):
        if self.n < 1:
            raise MalformedLineError(f"vertex count must be positive, got {self.n}")
        seen = set()
        normalized = []
        for k, (i, j) in enumerate(self.edges, start=1):
            i, j = int(i), int(j)
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise MalformedLineError(f"edge y{k}={{{i},{j}}} out of range 1..{self.n}")
            if i == j:
                raise LoopError(f"edge y{k} is a loop at x{i}")
            e = (min(i, j), max(i, j))
            if e in seen:
                raise DuplicateEdgeError(f"edge y{k}={{{i},{j}}} is repeated")
            seen.add(e)
            normalized.append(e)
        if not normalized:
            raise EmptyEdgeSetError("graph has no edges")
        object.__setattr__(self, "edges", tuple(normalized))
        if len(self._component_of(1)) != self.n:
            raise DisconnectedGraphError("graph is not connected")

    @property
    def q(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def adjacency(self) -> dict:
        adj = {v: set() for v in range(1, self.n + 1)}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return {v: frozenset(s) for v, s in adj.items()}

    @cached_property
    def edge_index(self) -> dict:
        """Map sorted endpoint pair -> 1-based edge index."""
        return {e: k for k, e in enumerate(self.edges, start=1)}

    @cached_property
    def neighbor_masks(self) -> tuple:
        # bit v-1 set for each neighbour; index 0 unused
        masks = [0] * (self.n + 1)
        for i, j in self.edges:
            masks[i] |= 1 << (j - 1)
            masks[j] |= 1 << (i - 1)
        return tuple(masks)

    def edge(self, k: int) -> tuple:
        return self.edges[k - 1]

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edge_index

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def _component_of(self, start):
        adj = {v: [] for v in range(1, self.n + 1)}
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return seen

    def induced_edges(self, vertices: Iterable[int]) -> list:
        vs = set(vertices)
        return [k for k, (i, j) in enumerate(self.edges, start=1) if i in vs and j in vs]

    def to_edge_list(self) -> str:
        lines = [str(self.n)] + [f"{i} {j}" for i, j in self.edges]
        return "\n".join(lines) + "\n"

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex v renamed to perm[v-1]."""
        return Graph(self.n, tuple((perm[i - 1], perm[j - 1]) for i, j in self.edges))


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: first line n, then one ``i j`` per edge.

    ``#`` starts a comment; blank lines are ignored.  Edge order is kept,
    since edge indices are meaningful downstream.
    """
    n = None
    edges = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1 or not parts[0].isdigit() or int(parts[0]) < 1:
                raise MalformedLineError(f"expected vertex count, got {raw!r}", lineno)
            n = int(parts[0])
            continue
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise MalformedLineError(f"expected 'i j', got {raw!r}", lineno)
        i, j = int(parts[0]), int(parts[1])
        if not (1 <= i <= n and 1 <= j <= n):
            raise MalformedLineError(f"vertex out of range 1..{n} in {raw!r}", lineno)
        if i == j:
            raise LoopError(f"loop at x{i}", lineno)
        key = (min(i, j), max(i, j))
        if key in seen:
            raise DuplicateEdgeError(f"edge {{{i},{j}}} already given on line {seen[key]}", lineno)
        seen[key] = lineno
        edges.append((i, j))
    if n is None:
        raise MalformedLineError("empty document")
    if not edges:
        raise EmptyEdgeSetError("graph has no edges")
    return Graph(n, tuple(edges))


def load_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


# -- covers and stable sets ---------------------------------------------------


@dataclass(frozen=True)
class CoverReport:
    tau: int
    alpha: int
    unmixed: bool
    minimal_covers: tuple
    witness_pair: Optional[tuple] = None

    def to_json(self) -> dict:
        return {
            "tau": self.tau,
            "alpha": self.alpha,
            "unmixed": self.unmixed,
            "minimal_covers": [list(c) for c in self.minimal_covers],
            "witness_pair": None if self.witness_pair is None else [list(c) for c in self.witness_pair],
        }


def _mask_to_set(mask: int) -> tuple:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _set_to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def maximal_stable_sets(g: Graph, cap: int = DEFAULT_COVER_CAP) -> list:
    """All inclusion-maximal stable sets, sorted lexicographically.

    Bron-Kerbosch with pivoting, run on the complement graph.
    """
    full = (1 << g.n) - 1
    # non-neighbours in the complement sense: allowed partners of v
    compl = [0] * (g.n + 1)
    for v in g.vertices:
        compl[v] = full & ~g.neighbor_masks[v] & ~(1 << (v - 1))
    found = []

    def expand(r, p, x):
        if not p and not x:
            found.append(r)
            if len(found) > cap:
                raise CapExceededError("maximal stable sets", cap, [_mask_to_set(m) for m in found])
            return
        pu = p | x
        # pivot with most complement-neighbours inside p
        best, pivot = -1, 0
        while pu:
            low = pu & -pu
            u = low.bit_length()
            c = bin(p & compl[u]).count("1")
            if c > best:
                best, pivot = c, u
            pu ^= low
        cand = p & ~compl[pivot]
        while cand:
            low = cand & -cand
            v = low.bit_length()
            expand(r | low, p & compl[v], x & compl[v])
            p &= ~low
            x |= low
            cand ^= low

    expand(0, full, 0)
    return sorted(_mask_to_set(m) for m in found)


def is_vertex_cover(g: Graph, cover: Iterable[int]) -> bool:
    c = set(cover)
    return all(i in c or j in c for i, j in g.edges)


def cover_report(g: Graph, cap: int = DEFAULT_COVER_CAP) -> CoverReport:
    """Enumerate minimal vertex covers as complements of maximal stable sets."""
    everything = set(g.vertices)
    covers = sorted(tuple(sorted(everything - set(f))) for f in maximal_stable_sets(g, cap))
    covers.sort(key=lambda c: (len(c), c))
    tau = len(covers[0])
    unmixed = all(len(c) == tau for c in covers)
    witness = None
    if not unmixed:
        other = next(c for c in covers if len(c) != tau)
        witness = (covers[0], other)
    return CoverReport(tau=tau, alpha=g.n - tau, unmixed=unmixed,
                       minimal_covers=tuple(covers), witness_pair=witness)


# -- bipartiteness and cycles ---------------------------------------------------


@dataclass(frozen=True)
class OddCycle:
    """An odd cycle: ``edges[i]`` joins ``vertices[i]`` and ``vertices[i+1]`` (cyclically)."""

    vertices: tuple
    edges: tuple

    @property
    def k(self) -> int:
        return len(self.vertices)

    @property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def indicator(self, n: int) -> tuple:
        vs = self.vertex_set
        return tuple(1 if v in vs else 0 for v in range(1, n + 1))

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "edges": list(self.edges)}


def make_cycle(g: Graph, vertices: Sequence[int]) -> OddCycle:
    """Build an OddCycle from a closed vertex walk, canonically rotated.

    The traversal starts at the smallest vertex and heads towards its
    smaller cycle-neighbour.
    """
    vs = list(vertices)
    k = len(vs)
    if k < 3 or k % 2 == 0 or len(set(vs)) != k:
        raise ContractError(f"not an odd cycle: {vs}")
    for a, b in zip(vs, vs[1:] + vs[:1]):
        if not g.has_edge(a, b):
            raise ContractError(f"{{x{a},x{b}}} is not an edge")
    s = vs.index(min(vs))
    vs = vs[s:] + vs[:s]
    if vs[-1] < vs[1]:
        vs = [vs[0]] + vs[:0:-1]
    edges = tuple(g.edge_index[(min(a, b), max(a, b))] for a, b in zip(vs, vs[1:] + vs[:1]))
    return OddCycle(tuple(vs), edges)


def bipartition_or_odd_cycle(g: Graph) -> Union[tuple, OddCycle]:
    """Two-colour by BFS from x1; on failure return the odd cycle it exposes.

    Returns ``(part_of_x1, other_part)`` when bipartite.
    """
    colour = {1: 0}
    parent = {1: None}
    depth = {1: 0}
    queue = deque([1])
    while queue:
        v = queue.popleft()
        for u in sorted(g.adjacency[v]):
            if u not in colour:
                colour[u] = 1 - colour[v]
                parent[u] = v
                depth[u] = depth[v] + 1
                queue.append(u)
    for i, j in g.edges:
        if colour[i] == colour[j]:
            # climb to the lowest common ancestor
            a, b = [i], [j]
            while depth[a[-1]] > depth[b[-1]]:
                a.append(parent[a[-1]])
            while depth[b[-1]] > depth[a[-1]]:
                b.append(parent[b[-1]])
            while a[-1] != b[-1]:
                a.append(parent[a[-1]])
                b.append(parent[b[-1]])
            walk = a + b[-2::-1]
            return make_cycle(g, walk)
    left = tuple(v for v in g.vertices if colour[v] == 0)
    right = tuple(v for v in g.vertices if colour[v] == 1)
    return left, right


def is_bipartite(g: Graph) -> bool:
    return not isinstance(bipartition_or_odd_cycle(g), OddCycle)


def enumerate_odd_cycles(g: Graph, cap: int = DEFAULT_CYCLE_CAP) -> list:
    """Every odd cycle of ``g`` (not only induced ones), each once.

    Sorted by sorted vertex set, then traversal.
    """
    if cap <= 0:
        raise ContractError("cap must be positive")
    adj = {v: sorted(g.adjacency[v]) for v in g.vertices}
    found = []

    for s in g.vertices:
        path = [s]
        on_path = {s}

        def extend(v):
            for u in adj[v]:
                if u == s:
                    if len(path) >= 3 and len(path) % 2 == 1 and path[1] < path[-1]:
                        found.append(tuple(path))
                        if len(found) > cap:
                            raise CapExceededError(
                                "odd cycles", cap,
                                sorted((make_cycle(g, c) for c in found[:cap]), key=_cycle_key))
                elif u > s and u not in on_path:
                    path.append(u)
                    on_path.add(u)
                    extend(u)
                    path.pop()
                    on_path.discard(u)

        extend(s)
    return sorted((make_cycle(g, c) for c in found), key=_cycle_key)


def _cycle_key(c: OddCycle):
    return (tuple(sorted(c.vertices)), c.vertices)


def is_induced_cycle(g: Graph, c: OddCycle) -> bool:
    return len(g.induced_edges(c.vertices)) == c.k


def spanning_tree(g: Graph) -> tuple:
    """BFS tree from x1 with neighbours visited in increasing order."""
    seen = {1}
    queue = deque([1])
    tree = []
    while queue:
        v = queue.popleft()
        for u in sorted(g.adjacency[v]):
            if u not in seen:
                seen.add(u)
                tree.append(g.edge_index[(min(u, v), max(u, v))])
                queue.append(u)
    return tuple(sorted(tree))


def has_property_P(g: Graph, y: int):
    """Check property (P) for edge ``y``.

    Returns ``(True, None)`` or ``(False, (k1, k2))`` where edges
    ``k1 = {x, z}`` and ``k2 = {x', z'}`` have ``{z, z'}`` missing from the
    graph.  A common neighbour (z = z') counts as a violation.
    """
    if not 1 <= y <= g.q:
        raise ContractError(f"no edge y{y}")
    a, b = g.edge(y)
    for x, xp in ((a, b), (b, a)):
        for z in sorted(g.adjacency[x] - {xp}):
            for zp in sorted(g.adjacency[xp] - {x}):
                if z == zp or not g.has_edge(z, zp):
                    k1 = g.edge_index[(min(x, z), max(x, z))]
                    k2 = g.edge_index[(min(xp, zp), max(xp, zp))]
                    return False, (k1, k2)
    return True, None


def closed_neighborhood(g: Graph, a: Iterable[int]) -> tuple:
    aset = set(a)
    if not aset <= set(g.vertices):
        raise ContractError(f"{sorted(aset)} is not a subset of V(G)")
    out = set(aset)
    for v in aset:
        out |= g.adjacency[v]
    return tuple(sorted(out))
