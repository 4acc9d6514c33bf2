from itertools import combinations

import pytest

from conftest import NAMED, corpus
from edgecone.canonical import (
    Rule,
    Verdict,
    candidate_generator,
    canonical_generators,
    divides,
    facet_gorenstein_point,
    gorenstein_decide,
    lattice_canonical_generators,
)
from edgecone.cone import build_generators, enumerate_facets
from edgecone.errors import ContractError
from edgecone.graph import cover_report, is_bipartite
from edgecone.oracles import brute_force_facets, brute_interior, brute_minimal_interior, lattice_box
from edgecone.semigroup import is_normal

G9_GENERATORS = (
    (1, 1, 1, 1, 1, 1, 1, 1, 1, 5),
    (2, 1, 1, 2, 1, 1, 2, 1, 2, 7),
    (2, 1, 2, 1, 1, 1, 2, 1, 2, 7),
)

NORMAL_SMALL = [g for g in corpus(5) if is_normal(g).normal]


class TestCandidates:
    def test_examples(self, g9):
        assert candidate_generator(NAMED["K2"]) == [(1, 1, 2)]
        assert candidate_generator(NAMED["C3"]) == [(1, 1, 1, 2)]
        assert candidate_generator(g9) == [(1,) * 9 + (5,)]

    def test_divides(self):
        k2 = NAMED["K2"]
        assert divides(k2, (1, 1, 2), (1, 1, 2))
        assert divides(k2, (2, 2, 4), (1, 1, 2))
        assert divides(k2, (1, 1, 3), (1, 1, 2))
        assert not divides(k2, (2, 1, 2), (1, 1, 2))


class TestGenerators:
    def test_edge(self):
        cg = canonical_generators(NAMED["K2"], 6)
        assert cg.generators == ((1, 1, 2),) and cg.complete and cg.principal

    def test_square(self):
        assert canonical_generators(NAMED["C4"], 8).generators == ((1, 1, 1, 1, 3),)

    def test_worked_example(self, g9):
        cg = canonical_generators(g9, 12)
        assert cg.complete and cg.generators == G9_GENERATORS

    def test_worked_example_generators_by_enumeration(self, g9):
        normals = brute_force_facets(g9)
        for w in G9_GENERATORS:
            assert brute_minimal_interior(g9, normals, w)

    def test_truncation_marks_incomplete(self, g9):
        cg = canonical_generators(g9, 6)
        assert cg.generators == G9_GENERATORS[:1] and not cg.complete and not cg.principal

    def test_contracts(self):
        with pytest.raises(ContractError):
            canonical_generators(NAMED["K2"], 0)
        with pytest.raises(ContractError):
            canonical_generators(NAMED["K2"], 4, method="magic")
        with pytest.raises(ContractError):
            canonical_generators(NAMED["bowtie_path"], 8, method="exact")

    def test_non_normal_falls_back_to_lattice(self):
        cg = canonical_generators(NAMED["bowtie_path"], 5)
        assert cg.method == "lattice" and cg.normality == "not normal"

    @pytest.mark.parametrize("g", NORMAL_SMALL, ids=lambda g: str(g.edges))
    def test_exact_matches_lattice_scan(self, g):
        exact = canonical_generators(g, method="exact")
        bound = g.n + 2
        scanned = lattice_canonical_generators(g, bound)
        assert scanned.generators == tuple(w for w in exact.generators if w[-1] <= bound)
        assert max(w[-1] for w in exact.generators) <= exact.exact_degree_bound

    @pytest.mark.parametrize("name", ["K2", "P3", "C3", "C4", "paw", "star"])
    def test_against_minimality_oracle(self, name):
        g = NAMED[name]
        normals = brute_force_facets(g)
        bound = g.n + 1
        expected = tuple(w for b in range(bound + 1) for w in lattice_box(g.n, b)
                         if brute_minimal_interior(g, normals, w))
        assert canonical_generators(g, bound).generators == expected

    @pytest.mark.parametrize("g", corpus(6), ids=lambda g: str(g.edges))
    def test_pairwise_non_divisible_and_interior(self, g):
        cg = canonical_generators(g, assume_normal=not is_normal(g).normal, method="auto")
        normals = {f.vector for f in enumerate_facets(build_generators(g)).normals}
        for w in cg.generators:
            assert brute_interior(normals, w)
        for a, b in combinations(cg.generators, 2):
            assert not divides(g, a, b) and not divides(g, b, a)


class TestFacetOracle:
    @pytest.mark.parametrize("g", [g for g in corpus(6) if is_normal(g).normal], ids=lambda g: str(g.edges))
    def test_height_one_point_matches_principality(self, g):
        cg = canonical_generators(g)
        point = facet_gorenstein_point(enumerate_facets(build_generators(g)))
        assert (point is not None) == cg.principal
        if point is not None:
            assert cg.generators == (point,)


class TestDecide:
    def test_path(self):
        v = gorenstein_decide(NAMED["P3"])
        assert v.verdict is Verdict.NOT_GORENSTEIN and v.provenance is Rule.BIPARTITE_BRV

    def test_square(self):
        v = gorenstein_decide(NAMED["C4"])
        assert v.gorenstein and v.provenance is Rule.BIPARTITE_BRV and v.generator == (1, 1, 1, 1, 3)

    def test_worked_example(self, g9):
        v = gorenstein_decide(g9)
        assert v.verdict is Verdict.NOT_GORENSTEIN and v.provenance is Rule.STRONG_REDUCTION
        assert v.certificates["reductions"]

    def test_triangle(self):
        v = gorenstein_decide(NAMED["C3"])
        assert v.gorenstein and v.provenance is Rule.PRINCIPALITY and v.generator == (1, 1, 1, 2)
        assert "strong_reduction" in v.certificates

    def test_odd_cycles(self):
        for name, b in (("C5", 3), ("C7", 4)):
            v = gorenstein_decide(NAMED[name])
            assert v.gorenstein and v.generator == (1,) * int(name[1]) + (b,)

    def test_parity(self):
        v = gorenstein_decide(NAMED["corona"])
        assert v.verdict is Verdict.NOT_GORENSTEIN and v.provenance is Rule.PARITY

    def test_non_normal_is_unknown(self):
        v = gorenstein_decide(NAMED["bowtie_path"])
        assert v.verdict is Verdict.UNKNOWN and v.normality == "not normal"
        assert v.certificates["normality"]["witness"]

    def test_json_shape(self, g9):
        data = gorenstein_decide(g9).to_json()
        assert set(data) >= {"verdict", "provenance", "generator", "certificates", "bounds"}
        assert data["bounds"] == {"degree": 20, "complete": True}

    @pytest.mark.parametrize("g", [g for g in corpus(6) if is_normal(g).normal], ids=lambda g: str(g.edges))
    def test_rules_agree_with_generators(self, g):
        fast = gorenstein_decide(g)
        slow = gorenstein_decide(g, force_principality=True)
        assert slow.complete and fast.verdict == slow.verdict
        if fast.gorenstein:
            assert fast.generator == slow.generator
            n, b = g.n, fast.generator[-1]
            assert fast.generator[:-1] == (1,) * n and b <= n // 2 + 1
            if not is_bipartite(g):
                cr = cover_report(g)
                assert b == n // 2 + 1 and cr.unmixed and cr.tau == (n + 1) // 2
