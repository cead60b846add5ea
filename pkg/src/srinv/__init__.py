"""Exact Stanley-Reisner invariants of simplicial complexes and graphs."""

from .complexes import (
    SimplicialComplex,
    complex_from_json_dict,
    complex_from_text,
    from_facets,
    full_simplex,
    mask_from_vertices,
    ridge_sum,
    vertices_from_mask,
)
from .errors import DomainError, InputError, ResourceLimitError
from .graphs import (
    Graph,
    complete_multipartite,
    edge_mask,
    graph_from_edge_mask,
    graph_from_json_dict,
    graph_from_text,
    independence_complex,
    induced_matching_number,
    is_independent,
    is_vertex_cover,
    isolated_vertices,
    maximal_independent_sets,
    minimal_vertex_covers,
    o_transform,
    s_suspension,
    whisker,
)
from .harness import (
    ConstructionCertificate,
    CoverTypeReport,
    DimensionBoundRecord,
    GraphSurveyRecord,
    MultipartiteWhiskerReport,
    SweepReport,
    construct,
    survey_graph,
    sweep,
    verify_dimension_bound,
    verify_type_via_covers,
    verify_whiskered_multipartite,
)
from .homology import (
    GF2,
    GF3,
    FieldSpec,
    HomologyRanks,
    boundary_matrices,
    rank_gf2,
    rank_mod_p,
    reduced_homology_ranks,
)
from .invariants import (
    BettiTable,
    FaceSetReport,
    InvariantReport,
    a_invariant,
    betti_table,
    cm_type,
    face_sets_X_M,
    has_p_linear_resolution,
    invariant_report,
    is_cm_betti,
    is_cm_reisner,
    is_cohen_macaulay,
    is_vertex_decomposable,
    krull_dimension,
    projective_dimension,
    regularity,
    shedding_trace,
)

__version__ = "0.1.0"
