"""End-to-end acceptance checks.

Each test prints one ``[acceptance k] PASS|FAIL`` line to the terminal, even
under output capture, and then asserts the same outcome.
"""

import json
import time
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from conftest import FIXTURES, corpus
from edgecone.canonical import (
    Verdict,
    canonical_generators,
    facet_gorenstein_point,
    gorenstein_decide,
    principality_check,
)
from edgecone.cli import main
from edgecone.cone import build_generators, enumerate_facets
from edgecone.conjectures import ProbeStatus
from edgecone.errors import ContractError
from edgecone.graph import Graph, cover_report, is_bipartite, load_graph, maximal_stable_sets
from edgecone.harness import CorpusSpec, RunConfig, scan
from edgecone.oracles import brute_force_facets, lattice_box
from edgecone.reduction import (
    SufficiencyStatus,
    find_reduction,
    find_strong_reduction,
    gorenstein_sufficiency,
    is_strong,
    iter_reductions,
    validate_reduction,
)
from edgecone.semigroup import cover_vector, is_normal, membership, spanning_tree_vector

pytestmark = pytest.mark.slow


def report(capsys, number: int, ok: bool, detail: str) -> None:
    with capsys.disabled():
        print(f"\n[acceptance {number}] {'PASS' if ok else 'FAIL'}: {detail}")
    assert ok, detail


def normals_matrix(g: Graph) -> np.ndarray:
    fs = enumerate_facets(build_generators(g))
    return np.array([f.vector for f in fs.normals], dtype=np.int64)


def all_interior(points: np.ndarray, normals: np.ndarray) -> bool:
    return bool((points @ normals.T > 0).all())


# -- 1 --------------------------------------------------------------------------


def test_worked_example(capsys):
    start = time.perf_counter()
    g = load_graph(FIXTURES / "g9.edges")
    problems = []
    cr = cover_report(g)
    if not (cr.unmixed and cr.tau == 5):
        problems.append(f"cover report tau={cr.tau} unmixed={cr.unmixed}")
    r = find_reduction(g).reduction
    if r is None or r.edge_parts != (1, 2) or r.cycle_part.edges != (3, 4, 5, 6, 7):
        problems.append(f"reduction {r}")
    else:
        v = is_strong(g, r)
        if v.strong or v.witness[0] != 3 or v.witness[1].vertices != (1, 7, 9):
            problems.append(f"strength {v}")
    verdict = gorenstein_decide(g)
    if verdict.verdict is not Verdict.NOT_GORENSTEIN:
        problems.append(f"verdict {verdict.verdict}")
    gens = canonical_generators(g, 12).generators
    if len(gens) < 2:
        problems.append(f"generators {gens}")
    elapsed = time.perf_counter() - start
    if elapsed >= 60:
        problems.append(f"took {elapsed:.1f} s")
    report(capsys, 1, not problems,
           f"g9 tau=5 unmixed, reduction y1,y2 + C5, witness x3 vs (x1,x9,x7), "
           f"{verdict.provenance.value}, {len(gens)} generators, {elapsed:.1f} s"
           + (f"; problems: {problems}" if problems else ""))


# -- 2 --------------------------------------------------------------------------


def test_bipartite_sweep(capsys):
    graphs = [g for g in corpus(7) if is_bipartite(g)]
    bad = []
    for g in graphs:
        normality = is_normal(g)
        if not normality.normal:
            bad.append((g.edges, "bipartite but not normal"))
            continue
        expected = cover_report(g).unmixed
        rules = gorenstein_decide(g, normality=normality)
        lattice = principality_check(g, normality=normality)
        heights = facet_gorenstein_point(enumerate_facets(build_generators(g))) is not None
        if rules.gorenstein != expected:
            bad.append((g.edges, "rules", rules.verdict.value))
        if lattice.complete and lattice.gorenstein != expected:
            bad.append((g.edges, "lattice", lattice.verdict.value))
        if heights != expected:
            bad.append((g.edges, "facet heights"))
    report(capsys, 2, not bad, f"{len(graphs)} bipartite graphs n<=7, {len(bad)} disagreements {bad[:3]}")


# -- 3 --------------------------------------------------------------------------


def test_facet_sweep(capsys):
    graphs = corpus(6)
    misses = []
    for g in graphs:
        fs = enumerate_facets(build_generators(g))
        normals = {f.vector for f in fs.normals}
        if normals != brute_force_facets(g):
            misses.append((g.edges, "differs from exhaustive search"))
        coords = {tuple(int(i == j) for i in range(g.n + 1)) for j in range(g.n)}
        if not coords <= normals:
            misses.append((g.edges, "coordinate facet missing"))
        ells = set(fs.ells)
        if not is_bipartite(g) and (Fraction(1, 2),) * g.n not in ells:
            misses.append((g.edges, "half-ones missing"))
        for s in maximal_stable_sets(g):
            if tuple(int(v in s) for v in g.vertices) not in ells:
                misses.append((g.edges, f"stable set {s} missing"))
    report(capsys, 3, not misses, f"{len(graphs)} graphs n<=6, {len(misses)} misses {misses[:3]}")


# -- 4 --------------------------------------------------------------------------


def degree_sumsets(gens: np.ndarray, top: int) -> list:
    """Every generator has degree 1, so the degree-b part of NB is a b-fold sumset."""
    layers = [np.zeros((1, gens.shape[1]), dtype=np.int64)]
    for _ in range(top):
        nxt = (layers[-1][:, None, :] + gens[None, :, :]).reshape(-1, gens.shape[1])
        layers.append(np.unique(nxt, axis=0))
    return [set(map(tuple, layer.tolist())) for layer in layers]


def test_semigroup_soundness(capsys):
    rng = np.random.default_rng(20240611)
    rounds = 10_000
    failures = []
    graphs = corpus(6)
    calls = 0
    for g in graphs:
        gens = np.array(build_generators(g).gens, dtype=np.int64)
        coeffs = rng.poisson(0.4, size=(rounds, len(gens)))
        points = coeffs @ gens
        if not (points[:, -1] == coeffs.sum(axis=1)).all():
            failures.append((g.edges, "degree of a combination"))
        for w in {tuple(p) for p in points.tolist()}:
            calls += 1
            rep = membership(g, w)
            if rep is None:
                failures.append((g.edges, w, "not found"))
                continue
            if rep.evaluate(g) != w or rep.degree != w[-1] or sum(w[:-1]) > 2 * w[-1]:
                failures.append((g.edges, w, "bad representation"))
            if min(rep.alpha + rep.beta + (rep.lambda_,)) < 0:
                failures.append((g.edges, w, "negative coefficient"))
        # coordinates of a degree-b point are at most b, so the box holds every candidate
        layers = degree_sumsets(gens, 4)
        for b in range(5):
            for w in lattice_box(g.n, b):
                calls += 1
                if (membership(g, w) is not None) != (w in layers[b]):
                    failures.append((g.edges, w, "membership disagrees with sumset"))
    report(capsys, 4, not failures,
           f"{len(graphs)} graphs n<=6, {rounds} round trips each, {calls} membership calls, "
           f"{len(failures)} failures {failures[:3]}")


# -- 5 --------------------------------------------------------------------------


def spanning_trees(g: Graph) -> np.ndarray:
    """Rows of edge indices (0-based) forming spanning trees, via reduced incidence determinants."""
    inc = np.zeros((g.n, g.q))
    for k, (a, b) in enumerate(g.edges):
        inc[a - 1, k], inc[b - 1, k] = 1, -1
    subsets = np.array(list(combinations(range(g.q), g.n - 1)), dtype=np.int64)
    blocks = inc[1:, :][:, subsets].transpose(1, 0, 2)
    dets = np.rint(np.linalg.det(blocks)).astype(np.int64)
    return subsets[dets != 0]


def test_interior_constructions(capsys):
    graphs = corpus(7)
    failures = []
    trees_seen = covers_seen = 0
    for g in graphs:
        normals = normals_matrix(g)
        vectors = []
        for row in spanning_trees(g).tolist():
            w, rep = spanning_tree_vector(g, [k + 1 for k in row])
            trees_seen += 1
            if rep.evaluate(g) != w or min(rep.beta) < 0:
                failures.append((g.edges, "tree", row))
            vectors.append(w)
        for c in cover_report(g).minimal_covers:
            w, rep = cover_vector(g, c)
            covers_seen += 1
            if rep.evaluate(g) != w or min(rep.alpha + rep.beta) < 0:
                failures.append((g.edges, "cover", c))
            vectors.append(w)
        pts = np.array(sorted(set(vectors)), dtype=np.int64)
        if not all_interior(pts, normals):
            failures.append((g.edges, "boundary point"))
        for w in pts.tolist():
            if membership(g, tuple(w)) is None:
                failures.append((g.edges, "not found by membership", w))
    report(capsys, 5, not failures,
           f"{len(graphs)} graphs n<=7, {trees_seen} spanning trees, {covers_seen} minimal covers, "
           f"{len(failures)} failures {failures[:3]}")


# -- 6 --------------------------------------------------------------------------


def test_classification_cross_checks(capsys):
    violations = []
    checked = skipped = gorenstein = 0
    for g in corpus(7):
        normality = is_normal(g)
        if not normality.normal:
            skipped += 1
            continue
        checked += 1
        lattice = principality_check(g, normality=normality)
        if not lattice.complete:
            violations.append((g.edges, "generator check incomplete"))
            continue
        cr = cover_report(g)
        bip = is_bipartite(g)
        n = g.n
        if lattice.gorenstein:
            gorenstein += 1
            gen = lattice.generator
            b = gen[-1]
            if not (cr.unmixed and cr.tau == (n + 1) // 2):
                violations.append((g.edges, "a: cover condition"))
            if gen[:-1] != (1,) * n or b > n // 2 + 1 or (not bip and b != n // 2 + 1):
                violations.append((g.edges, "a: generator", gen))
            if find_strong_reduction(g).strong is None:
                violations.append((g.edges, "c: no strong reduction"))
        if n % 2 == 0 and lattice.gorenstein != (bip and cr.unmixed):
            violations.append((g.edges, "b: even order"))
        if lattice.verdict is not gorenstein_decide(g, normality=normality).verdict:
            violations.append((g.edges, "cascade disagrees"))
    report(capsys, 6, not violations,
           f"{checked} normal graphs n<=7 ({skipped} not normal, skipped), {gorenstein} Gorenstein, "
           f"{len(violations)} violations {violations[:3]}")


# -- 7 --------------------------------------------------------------------------

# interior points up to degree 2n+2 number about 10**6 at n = 7, so those scans stop early
POINT_BUDGET = {6: 2 * 10**5, 7: 10**4}


def graph_sufficiency(g: Graph, budget: int):
    """AllPrincipal if some reduction passes the whole scan, Counterexample if every one fails."""
    tau = cover_report(g).tau
    fs = enumerate_facets(build_generators(g))
    outcomes = []
    for r in iter_reductions(g):
        try:
            validate_reduction(g, r, tau)
        except ContractError:
            continue
        v = gorenstein_sufficiency(g, r, 2 * g.n + 2, point_cap=budget, facets=fs)
        if v.status is SufficiencyStatus.ALL_PRINCIPAL and v.complete:
            return SufficiencyStatus.ALL_PRINCIPAL
        outcomes.append(v)
    if outcomes and all(v.status is SufficiencyStatus.COUNTEREXAMPLE for v in outcomes):
        return SufficiencyStatus.COUNTEREXAMPLE
    return None


def test_sufficiency_consistency(capsys):
    disagreements = []
    completed = incomplete = 0
    for g in corpus(7):
        if find_reduction(g).reduction is None:
            continue
        normality = is_normal(g)
        if not normality.normal:
            continue
        budget = POINT_BUDGET[max(g.n, 6)]
        status = graph_sufficiency(g, budget)
        if status is None:
            incomplete += 1
            continue
        completed += 1
        decided = gorenstein_decide(g, normality=normality)
        if (status is SufficiencyStatus.ALL_PRINCIPAL) != decided.gorenstein:
            disagreements.append((g.edges, status.value, decided.verdict.value))
    report(capsys, 7, not disagreements,
           f"{completed} graphs settled at bound 2n+2, {incomplete} stopped at the point budget "
           f"{POINT_BUDGET}, {len(disagreements)} disagreements {disagreements[:3]}")


# -- 8 --------------------------------------------------------------------------


def test_conjecture_scan(capsys, tmp_path):
    start = time.perf_counter()
    records = list(scan(CorpusSpec(6), RunConfig()))
    elapsed = time.perf_counter() - start
    summary = records[-1]["summary"]
    problems = []
    if summary["graphs"] != len(corpus(6)):
        problems.append(f"scanned {summary['graphs']} graphs")
    if elapsed >= 1800:
        problems.append(f"took {elapsed:.0f} s")
    if "CapExceeded" in summary["counts"]:
        problems.append("cap exceeded")
    reverified = []
    for rec in records[:-1]:
        if rec.get("probe", {}).get("status") != ProbeStatus.CANDIDATE.value:
            continue
        graph = tmp_path / f"{rec['graph_hash']}.edges"
        graph.write_text(Graph(rec["n"], tuple(map(tuple, rec["edges"]))).to_edge_list())
        cert = tmp_path / f"{rec['graph_hash']}.json"
        cert.write_text(json.dumps(rec))
        code = main(["oracle", str(graph), "--certificate", str(cert), "--format", "json"])
        capsys.readouterr()
        if code != 0:
            problems.append(f"{rec['graph6']} certificate fails the oracle")
        reverified.append(rec["graph6"])
    report(capsys, 8, not problems,
           f"{summary['graphs']} graphs n<=6 in {elapsed:.0f} s, counts {summary['counts']}, "
           f"candidates {summary['candidates']} re-verified by the oracle command: {reverified}"
           + (f"; problems: {problems}" if problems else ""))
