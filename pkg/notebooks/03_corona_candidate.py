"""
The triangle with a pendant edge at each vertex
===============================================

Six vertices, unmixed, with a perfect matching of edges that all have the
pendant property.  Such a reduction is strong with no further checks, yet
the semigroup ring is not Gorenstein, and one interior point has no
principal representation.  This is the only graph with at most six vertices
where the conjecture probe raises a flag.
"""

from edgecone import (
    Graph,
    canonical_generators,
    conjecture_probe,
    cover_report,
    find_strong_reduction,
    gorenstein_decide,
    max_alpha_representation,
    to_graph6,
)
from edgecone.census import canonical_form
from edgecone.oracles import brute_principal, representations, verify_probe_certificate

g = Graph(6, ((1, 2), (2, 3), (1, 3), (1, 4), (2, 5), (3, 6)))
print("canonical graph6", to_graph6(canonical_form(g)), "tau", cover_report(g).tau, "unmixed", cover_report(g).unmixed)

# %% A strong reduction made of edges
search = find_strong_reduction(g)
r = search.strong
print("strong reduction:", [g.edge(k) for k in r.edge_parts])

# %% ...but two canonical generators
print("generators:", canonical_generators(g).generators)
print("verdict:", gorenstein_decide(g).provenance.value)

# %% The point (2,2,2,1,1,1,5)
w = (2, 2, 2, 1, 1, 1, 5)
rep, top = max_alpha_representation(g, r, w)
print("max weight on the whiskers:", top, "with lambda =", rep.lambda_)
reps = list(representations(g, w))
best = [x for x in reps if sum(x[0][k - 1] for k in r.edge_parts) == top]
print(f"{len(reps)} representations, {len(best)} reach the maximum, none with lambda > 0:",
      all(lam == 0 for _, _, lam in best))
print("exhaustive search agrees:", brute_principal(g, r.edge_parts, None, w) is None)

# %% The probe report and its independent re-check
report = conjecture_probe(g)
print("probe:", report.status.value)
for claim, ok in verify_probe_certificate(g, report.certificates):
    print(f"  [{'ok' if ok else 'FAIL'}] {claim}")
