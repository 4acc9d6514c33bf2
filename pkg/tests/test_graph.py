from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import NAMED, corpus
from edgecone.errors import (
    CapExceededError,
    DisconnectedGraphError,
    DuplicateEdgeError,
    EmptyEdgeSetError,
    LoopError,
    MalformedLineError,
)
from edgecone.graph import (
    Graph,
    OddCycle,
    bipartition_or_odd_cycle,
    closed_neighborhood,
    cover_report,
    enumerate_odd_cycles,
    has_property_P,
    is_vertex_cover,
    maximal_stable_sets,
    parse_graph,
    spanning_tree,
)
from edgecone.oracles import brute_covers, brute_odd_cycles
from strategies import connected_graphs


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


class TestParsing:
    def test_smallest_graph(self):
        g = parse_graph("2\n1 2")
        assert (g.n, g.q) == (2, 1)

    def test_fixture_edge_order(self, g9):
        assert (g9.n, g9.q) == (9, 10)
        assert g9.edge(1) == (6, 7)
        assert g9.edge(10) == (1, 7)

    def test_comments_and_blank_lines(self):
        g = parse_graph("# header\n3  # three vertices\n\n1 2\n2 3 # tail\n")
        assert g.edges == ((1, 2), (2, 3))

    @pytest.mark.parametrize(
        "text, err, line",
        [
            ("3\n1 2\n1 3\n1 2", DuplicateEdgeError, 4),
            ("3\n1 2\n2 1", DuplicateEdgeError, 3),
            ("2\n1 1", LoopError, 2),
            ("3\n1 2", DisconnectedGraphError, None),
            ("3\n", EmptyEdgeSetError, None),
            ("", MalformedLineError, None),
            ("x\n1 2", MalformedLineError, 1),
            ("2\n1 2 3", MalformedLineError, 2),
            ("2\n1 5", MalformedLineError, 2),
        ],
    )
    def test_errors_are_distinct(self, text, err, line):
        with pytest.raises(err) as info:
            parse_graph(text)
        if line is not None:
            assert info.value.line == line

    def test_round_trip(self, g9):
        assert parse_graph(g9.to_edge_list()) == g9


class TestCovers:
    def test_path(self):
        cr = cover_report(NAMED["P3"])
        assert (cr.tau, cr.alpha, cr.unmixed) == (1, 2, False)
        assert cr.witness_pair == ((2,), (1, 3))

    def test_worked_example(self, g9):
        cr = cover_report(g9)
        assert (cr.tau, cr.unmixed) == (5, True)

    def test_square(self):
        cr = cover_report(NAMED["C4"])
        assert cr.unmixed and cr.tau == 2
        assert cr.minimal_covers == ((1, 3), (2, 4))

    def test_cap(self):
        with pytest.raises(CapExceededError):
            cover_report(NAMED["C7"], cap=3)

    @pytest.mark.parametrize("g", corpus(6), ids=lambda g: str(g.edges))
    def test_against_subset_oracle(self, g):
        cr = cover_report(g)
        expected = sorted(tuple(sorted(c)) for c in brute_covers(g))
        assert sorted(cr.minimal_covers) == expected
        assert cr.tau + cr.alpha == g.n
        sizes = {len(f) for f in maximal_stable_sets(g)}
        assert cr.unmixed == (len(sizes) == 1)

    @given(connected_graphs(max_n=8))
    @settings(max_examples=60, deadline=None)
    def test_stable_sets_match_complement_cliques(self, g):
        comp = nx.complement(to_nx(g))
        expected = sorted(tuple(sorted(c)) for c in nx.find_cliques(comp))
        assert sorted(map(tuple, maximal_stable_sets(g))) == expected
        for c in cover_report(g).minimal_covers:
            assert is_vertex_cover(g, c)
            assert all(not is_vertex_cover(g, set(c) - {v}) for v in c)


class TestCycles:
    def test_bipartition(self):
        assert bipartition_or_odd_cycle(NAMED["C4"]) == ((1, 3), (2, 4))

    def test_triangle(self):
        c = bipartition_or_odd_cycle(NAMED["C3"])
        assert isinstance(c, OddCycle) and c.vertices == (1, 2, 3)

    def test_worked_example(self, g9):
        cycles = enumerate_odd_cycles(g9)
        assert [c.vertices for c in cycles] == [(1, 2, 3, 4, 5), (1, 7, 9)]
        assert cycles[1].edges == (10, 9, 8)

    def test_pentagon_and_square(self):
        assert [c.k for c in enumerate_odd_cycles(NAMED["C5"])] == [5]
        assert enumerate_odd_cycles(NAMED["C4"]) == []

    def test_cap_carries_partial(self):
        with pytest.raises(CapExceededError) as info:
            enumerate_odd_cycles(NAMED["K4"], cap=2)
        assert len(info.value.partial) == 2

    @given(connected_graphs(max_n=7))
    @settings(max_examples=60, deadline=None)
    def test_cycles_match_networkx(self, g):
        ours = {frozenset(c.edges) for c in enumerate_odd_cycles(g)}
        theirs = set()
        for cyc in nx.simple_cycles(to_nx(g)):
            if len(cyc) % 2:
                k = len(cyc)
                theirs.add(frozenset(g.edge_index[tuple(sorted((cyc[i], cyc[(i + 1) % k])))] for i in range(k)))
        assert ours == theirs
        assert len(ours) == len(brute_odd_cycles(g))

    @given(connected_graphs(max_n=8))
    @settings(max_examples=80, deadline=None)
    def test_split_is_valid(self, g):
        out = bipartition_or_odd_cycle(g)
        if isinstance(out, OddCycle):
            assert out.k % 2 == 1
            for i, k in enumerate(out.edges):
                assert set(g.edge(k)) == {out.vertices[i], out.vertices[(i + 1) % out.k]}
            assert not nx.is_bipartite(to_nx(g))
        else:
            a, b = map(set, out)
            assert a | b == set(g.vertices) and not a & b
            assert all((x in a) != (y in a) for x, y in g.edges)


class TestTreesAndNeighbourhoods:
    def test_edge_and_triangle(self):
        assert spanning_tree(NAMED["K2"]) == (1,)
        assert len(spanning_tree(NAMED["C3"])) == 2

    @given(connected_graphs(max_n=9))
    @settings(max_examples=50, deadline=None)
    def test_tree_is_spanning(self, g):
        t = spanning_tree(g)
        h = nx.Graph([g.edge(k) for k in t])
        assert len(t) == g.n - 1 and h.number_of_nodes() == g.n and nx.is_tree(h)

    def test_closed_neighbourhood(self, g9):
        assert closed_neighborhood(g9, range(1, 6)) == (1, 2, 3, 4, 5, 7, 9)
        assert closed_neighborhood(NAMED["K2"], [1]) == (1, 2)
        assert closed_neighborhood(g9, g9.vertices) == tuple(g9.vertices)


def property_P_oracle(g: Graph, y: int) -> bool:
    a, b = g.edge(y)
    for e1, e2 in combinations(g.edges, 2):
        for f1, f2 in ((e1, e2), (e2, e1)):
            for x, xp in ((a, b), (b, a)):
                if x in f1 and xp in f2 and set(f1) != {a, b} and set(f2) != {a, b}:
                    z = f1[0] if f1[1] == x else f1[1]
                    zp = f2[0] if f2[1] == xp else f2[1]
                    if z == zp or not g.has_edge(z, zp):
                        return False
    return True


class TestPropertyP:
    def test_examples(self, g9):
        assert has_property_P(NAMED["C4"], 1)[0]
        assert has_property_P(NAMED["P3"], 2)[0]
        assert has_property_P(g9, 1)[0]

    def test_counterexample_shape(self):
        ok, pair = has_property_P(NAMED["C5"], 1)
        assert not ok and len(pair) == 2

    @given(connected_graphs(max_n=7))
    @settings(max_examples=60, deadline=None)
    def test_matches_pair_oracle(self, g):
        for y in range(1, g.q + 1):
            assert has_property_P(g, y)[0] == property_P_oracle(g, y)
