"""Exact analysis of well-hued graphs on at most 64 vertices."""

__version__ = "0.1.0"

from .graph import (
    Graph,
    Graph6Error,
    Graph6LengthError,
    Graph6OrderError,
    Graph6TrailingBitsError,
    bits,
    canonical_form,
    complement,
    complete_graph,
    complete_multipartite,
    corona,
    cycle_graph,
    empty_graph,
    enumerate_connected_nonisomorphic,
    enumerate_nonisomorphic,
    from_edge_list,
    from_edges,
    from_graph6,
    induced,
    is_connected,
    join,
    path_graph,
    permute,
    to_edge_list,
    to_graph6,
    union,
)
from .chroma import (
    HueProfile,
    LemmaAuditReport,
    audit_tool_lemmas,
    chromatic_number,
    hue_profile,
    is_k_colorable,
    is_realizable_sequence,
    is_well_equi_hued,
    maximal_independent_sets,
    maximal_k_colorable_sets,
    realize_sequence,
)
from .families import (
    AlternatingReachability,
    Matching,
    alternating_reachable,
    conjecture_alpha_predicate,
    first_perfect_matching,
    greedy_independent_alt_dominating,
    is_alternating_dominating,
    is_corona_of_complete,
    matching_invariance_check,
    perfect_matchings,
    thm222_predicate,
    thm_2k1_predicate,
    thm_2k1_witness,
    thm_3k_predicate,
    thm_3k_witness,
)
from .cotree import (
    Cotree,
    NotACographError,
    build_cotree,
    cotree_complement,
    cotree_from_sexpr,
    cotree_to_graph,
    cotree_to_sexpr,
    homogeneous_children,
    is_cograph,
    is_well_equi_hued_cograph,
    procedure_values,
    uniform_assignment_property,
)
from .atlas import (
    SearchReport,
    SearchRow,
    VerificationReport,
    clique_partition_min2,
    compute_row,
    report_to_jsonl,
    report_to_tsv,
    search,
    spanning_subgraphs,
    verify_theorem,
)
