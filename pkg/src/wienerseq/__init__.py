"""Distance sequences of small connected graphs.

The package computes nondecreasing all-pairs distance sequences, compares
them in the coordinatewise dominance order, evaluates Wiener-type distance
indices over them, constructs the extremal families that maximize the
sequence within several graph classes, and verifies those maximality
statements exhaustively at small orders.
"""

from wienerseq.enumeration import (
    brute_force_isomorphic,
    canonical_form,
    canonical_graph,
    canonical_order,
    enumerate_apollonian,
    enumerate_class,
    enumerate_connected,
    enumerate_k_connected,
    enumerate_k_trees,
    enumerate_maximal_k_degenerate,
    enumerate_maximal_planar,
    enumerate_odd_trees,
    parse_class_spec,
)
from wienerseq.families import (
    complete,
    cycle,
    cycle_power,
    end_vertex_sequence_path_power,
    odd_caterpillar,
    odd_caterpillar_increment,
    parse_family_spec,
    path,
    path_complete,
    path_power,
    star,
)
from wienerseq.graphs import (
    DisconnectedGraphError,
    DistanceMatrix,
    Graph,
    GraphFormatError,
    degeneracy_check,
    delete_vertex,
    distance_matrix,
    graph_power,
    induced_subgraph,
    is_connected,
    is_cut_vertex,
    is_k_connected,
    is_odd_tree,
    parse_edge_list,
    parse_graph6,
    relabel,
    vertex_connectivity,
    write_graph6,
)
from wienerseq.indices import (
    IndexDefinition,
    diameter_index,
    evaluate,
    evaluate_exact,
    gen_hyper_wiener,
    harary,
    hyper_wiener,
    log_mult_wiener,
    monotone_consistency,
    mult_wiener,
    order_size_lower_bound,
    order_size_lower_bound_exact,
    parse_index_spec,
    tsz,
    variable_wiener,
    wiener,
)
from wienerseq.sequences import (
    DeletionBoundResult,
    DistanceSequence,
    Dominance,
    DominanceRelation,
    compare,
    deletion_bound_check,
    distance_sequence,
    merge,
    vertex_distance_sequence,
)
from wienerseq.verifier import (
    SUITES,
    VerificationReport,
    csv_summary,
    search_maximal_planar,
    verify_connectivity,
    verify_deletion_bound,
    verify_k_degenerate,
    verify_odd_trees,
    verify_order_size,
)

__version__ = "0.1.0"

__all__ = [
    "DeletionBoundResult",
    "DisconnectedGraphError",
    "DistanceMatrix",
    "DistanceSequence",
    "Dominance",
    "DominanceRelation",
    "Graph",
    "GraphFormatError",
    "IndexDefinition",
    "SUITES",
    "VerificationReport",
    "__version__",
    "brute_force_isomorphic",
    "canonical_form",
    "canonical_graph",
    "canonical_order",
    "compare",
    "complete",
    "csv_summary",
    "cycle",
    "cycle_power",
    "degeneracy_check",
    "delete_vertex",
    "deletion_bound_check",
    "diameter_index",
    "distance_matrix",
    "distance_sequence",
    "end_vertex_sequence_path_power",
    "enumerate_apollonian",
    "enumerate_class",
    "enumerate_connected",
    "enumerate_k_connected",
    "enumerate_k_trees",
    "enumerate_maximal_k_degenerate",
    "enumerate_maximal_planar",
    "enumerate_odd_trees",
    "evaluate",
    "evaluate_exact",
    "gen_hyper_wiener",
    "graph_power",
    "harary",
    "hyper_wiener",
    "induced_subgraph",
    "is_connected",
    "is_cut_vertex",
    "is_k_connected",
    "is_odd_tree",
    "log_mult_wiener",
    "merge",
    "monotone_consistency",
    "mult_wiener",
    "odd_caterpillar",
    "odd_caterpillar_increment",
    "order_size_lower_bound",
    "order_size_lower_bound_exact",
    "parse_class_spec",
    "parse_edge_list",
    "parse_family_spec",
    "parse_graph6",
    "parse_index_spec",
    "path",
    "path_complete",
    "path_power",
    "relabel",
    "search_maximal_planar",
    "star",
    "tsz",
    "variable_wiener",
    "verify_connectivity",
    "verify_deletion_bound",
    "verify_k_degenerate",
    "verify_odd_trees",
    "verify_order_size",
    "vertex_connectivity",
    "vertex_distance_sequence",
    "wiener",
    "write_graph6",
]
