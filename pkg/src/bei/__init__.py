"""Cutset combinatorics and invariant formulas for binomial edge ideals of
corona-type graph products."""

__version__ = "0.1.0"

from .graph import (
    BlockDecomposition,
    Graph,
    VertexSet,
    block_decomposition,
    cliquify,
    complete_graph,
    components,
    cone,
    cycle_graph,
    delete,
    diameter,
    disjoint_union,
    distances_from,
    internal_vertex_count,
    is_block_graph,
    is_cm_closed,
    is_complete,
    is_connected,
    is_isomorphic_small,
    is_simplicial,
    iter_members,
    join,
    members,
    ncomponents,
    path_graph,
    simplicial_vertices,
    vset,
)
from .io import (
    format_edge_list,
    from_graph6,
    graph_from_json,
    graph_from_name,
    graph_to_json,
    parse_edge_list,
    to_dot,
    to_graph6,
)
from .cutsets import (
    DEFAULT_BOUND,
    CutsetReport,
    EnumerationBoundError,
    accessibility_witness_chain,
    dimension_oracle,
    enumerate_cutsets,
    enumeration_bound,
    is_accessible,
    is_accessible_system,
    is_cutset,
    is_unmixed,
    iter_cutsets,
    unmixedness_violation,
)
from .corona import (
    CoronaDecomposition,
    CoronaSpec,
    check_cutset_structure,
    corona,
    corona_spec_from_json,
    corona_spec_to_json,
    decompose_cutset,
    gadget_d2,
    gadget_d3,
    l_corona,
)
from .invariants import (
    BaseInvariants,
    InvariantReport,
    Verdict,
    base_invariants_block_graph,
    base_invariants_complete,
    classify,
    cmdef_report,
    depth_reg_corona_cm_closed,
    depth_reg_corona_complete,
    depth_reg_corona_path,
    dim_l_corona,
    extremal_betti_position,
)
from .bms import (
    DiameterClass,
    ReductionCheck,
    ScanRecord,
    bms_scan,
    diameter_class,
    verify_reduction_d2,
    verify_reduction_d3,
)
from .cas import CasScript, emit_cas_script
