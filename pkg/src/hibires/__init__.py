"""Resolutions and homological invariants of edge ideals of unmixed
bipartite graphs, computed from their vertex-cover lattices and verified
against a brute-force simplicial homology oracle."""

from .betti import BettiTable
from .graphs import (
    BipartiteGraph,
    VertexCover,
    cover_lattice,
    graph_from_lattice,
    is_unmixed,
    minimal_vertex_covers,
    normalize_graph,
)
from .ideals import (
    Monomial,
    MonomialIdeal,
    alexander_dual,
    edge_ideal,
    hibi_ideal,
    lcm_closure,
)
from .invariants import (
    InvariantReport,
    depth_edge_ring,
    extremal_graded_edge_ring,
    extremal_multigraded_edge_ring,
    extremal_multigraded_H,
    invariant_report,
    is_cohen_macaulay,
    last_betti_lower_bound,
    pd_and_reg_H,
    regularity_edge_ring,
)
from .lattice import (
    BooleanInterval,
    CoverLattice,
    a_set,
    b_set,
    boolean_intervals,
    f_value,
    lower_neighbors,
    meet_of,
    random_sublattice,
    validate_sublattice,
)
from .oracle import (
    SimplicialComplex,
    betti_oracle,
    betti_value_at,
    invariants_from_table,
    reduced_homology_ranks,
    upper_koszul_complex,
)
from .resolution import (
    BasisElement,
    ResolutionComplex,
    betti_table_from_basis,
    build_resolution,
    differential,
    resolution_basis,
    strand_exactness,
    verify_complex,
    verify_minimality,
)

__version__ = "0.1.0"
