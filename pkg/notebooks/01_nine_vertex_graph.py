"""
A nine-vertex graph that is unmixed but not Gorenstein
======================================================

Walks through every stage of the pipeline on one graph: two pendant edges
hanging off a pentagon, with a triangle glued at vertex 1.
Run with ``python notebooks/01_nine_vertex_graph.py``.
"""

import numpy as np

from edgecone import (
    build_generators,
    canonical_generators,
    cover_report,
    enumerate_facets,
    enumerate_odd_cycles,
    find_reduction,
    find_strong_reduction,
    gorenstein_decide,
    gorenstein_sufficiency,
    is_normal,
    is_strong,
    parse_graph,
    principal_representation,
)

g = parse_graph("9\n6 7\n8 9\n1 2\n2 3\n3 4\n4 5\n5 1\n1 9\n9 7\n1 7\n")
print(f"n={g.n}, q={g.q}")

# %% Covers: every minimal cover has five vertices
cr = cover_report(g)
print("tau", cr.tau, "unmixed", cr.unmixed, "minimal covers", len(cr.minimal_covers))

# %% The cone: 20 generators in Z^10, coordinate facets plus 17 others
gs = build_generators(g)
fs = enumerate_facets(gs)
G = np.array(gs.gens)
N = np.array([f.vector for f in fs.normals])
print("generators", G.shape, "facet normals", N.shape)
# each generator is tight on at least one facet; count how many per facet
tight = (G @ N.T == 0).sum(axis=0)
print("generators on each facet:", tight.tolist())

# the half-ones facet is there because the graph has odd cycles
half = [f for f in fs.ell_facets if len(set(f.ell)) == 1]
print("constant facets:", [f.vector for f in half])

# %% Odd cycles and the reduction
cycles = enumerate_odd_cycles(g)
print("odd cycles:", [c.vertices for c in cycles])
r = find_reduction(g).reduction
print("edge parts", [g.edge(k) for k in r.edge_parts], "cycle part", r.cycle_part.vertices)

v = is_strong(g, r)
x, c = v.witness
print(f"strong: {v.strong}; x{x} has no edge into the cycle {c.vertices}")
print("no reduction is strong:", find_strong_reduction(g).strong is None)

# %% Normality and the canonical generators
print("normal:", is_normal(g).normal)
cg = canonical_generators(g, 12)
for w in cg.generators:
    print("  generator", w)
verdict = gorenstein_decide(g)
print("verdict", verdict.verdict.value, "via", verdict.provenance.value)

# %% Principal representations fail somewhere below degree 12
suff = gorenstein_sufficiency(g, r, 12)
w = suff.counterexample
print("first point without a principal representation:", w, "after", suff.points_checked, "points")
# the failing point is itself one of the extra generators
print("it is a canonical generator:", w in cg.generators)
print("the degree-5 generator is principal:", principal_representation(g, r, cg.generators[0]) is not None)
