"""Burning and lazy burning of hypergraphs: exact solvers, families and bounds."""
from .bounds import (
    BoundsReport,
    CompositionReport,
    Inequality,
    MonotonicityReport,
    SubsetProbe,
    bounds_report,
    disconnected_composition_check,
    probe_open_question_1,
    subhypergraph_monotonicity_check,
)
from .burning import (
    FireState,
    Schedule,
    Verdict,
    burn_via_independent_set,
    burning_bounds,
    burning_number_exact,
    is_burning_sequence,
    max_spread,
    propagate_step,
    run_schedule,
)
from .core import (
    GuardExceeded,
    Hypergraph,
    HypergraphError,
    IndependenceUndefined,
    ParseError,
    SolveResult,
    StructuralProfile,
    VertexSet,
    component_masks,
    connected_components,
    edge_index,
    effective_edge_count,
    independence_number,
    is_connected,
    is_independent,
    max_independent_set,
    parse_hypergraph,
    read_hypergraph,
    serialize_hypergraph,
    strong_induced_sub,
    strong_sub,
    two_section,
    weak_induced_sub,
    write_hypergraph,
)
from .families import (
    FAMILIES,
    FamilySpec,
    build_family,
    gen_disjoint_edges,
    gen_graph_path,
    gen_loose_path,
    gen_loose_path_sizes,
    gen_nested_family,
    gen_single_edge,
    gen_star_family,
    gen_strwk_family,
    gen_tight_path,
    loose_path_of_order,
    path_burning_number,
    path_optimal_sequence,
    tight3_burning_number,
    tight3_max_spread,
    tight3_optimal_sequence,
)
from .lazy import (
    LazyRun,
    is_lazy_burning_set,
    lazy_burning_number_exact,
    lazy_closure,
    lazy_set_from_sequence,
)

__version__ = "0.1.0"
