"""Degree-list factors and distinguishing edge weightings for small graphs."""

from .coloring import ColorClasses, proper_coloring_exact, proper_colorings
from .degree_lists import (
    DegreeListSpec,
    SpecValidation,
    bipartite_two_value_spec,
    generic_spec,
    pair_single_c_spec,
    pair_spec,
    triple_spec,
    validate_spec,
)
from .factor_search import (
    FactorSolution,
    FactorState,
    ReachabilitySets,
    apply_move,
    compute_deficiency,
    reachability_sets,
    solve_list_factor,
)
from .graph import (
    Bipartition,
    Graph,
    bipartition,
    component_count,
    connected_components,
    encode_graph6,
    find_odd_closed_walk,
    induced_subgraph,
    is_nice,
    isolated_vertices,
    parse_edge_list,
    parse_graph6,
)
from .group_weighting import (
    GroupTargetProblem,
    parity_normalize_coloring,
    realize_targets,
    residue_sums,
    vertex_coloring_weighting_zr,
)
from .interval_factor import (
    HeinrichResult,
    HeinrichWitness,
    IntervalSpec,
    gf_factor_flow,
    heinrich_check,
)
from .oracle import OracleBudget, enumerate_l_factors, enumerate_weightings
from .avd import advd2_bipartite_delta6, advd2_degree_gap, degree_gap_vertices, vc2_bipartite
from .weighting import (
    EdgeWeighting,
    induced_coloring,
    is_adjacent_vd,
    is_vertex_coloring,
    multiset_signatures,
)

__all__ = [name for name in dir() if not name.startswith("_")]
