"""Gorenstein tests for the semigroup ring generated by a graph's vertices, edges and t."""

from .canonical import (
    CanonicalGenerators,
    GorensteinVerdict,
    Rule,
    Verdict,
    candidate_generator,
    canonical_generators,
    divides,
    facet_gorenstein_point,
    gorenstein_decide,
    principality_check,
)
from .census import canonical_hash, census, from_graph6, to_graph6
from .cone import FacetSet, build_generators, enumerate_facets, in_cone, is_interior, lattice_points, position
from .conjectures import ConjectureReport, ProbeStatus, conjecture_probe
from .errors import (
    CapExceededError,
    ContractError,
    EdgeConeError,
    GraphError,
    InternalInvariantError,
)
from .graph import (
    CoverReport,
    Graph,
    OddCycle,
    bipartition_or_odd_cycle,
    cover_report,
    enumerate_odd_cycles,
    has_property_P,
    load_graph,
    parse_graph,
    spanning_tree,
)
from .reduction import (
    PrincipalRepresentation,
    TauReduction,
    find_reduction,
    find_strong_reduction,
    gorenstein_sufficiency,
    is_strong,
    iter_reductions,
    max_alpha_representation,
    principal_representation,
)
from .semigroup import (
    NormalityReport,
    Representation,
    cover_vector,
    is_normal,
    membership,
    odd_cycle_vector,
    spanning_tree_vector,
)
from .triangulation import triangulate

__version__ = "0.1.0"
