"""Exact and fixed-parameter solvers for colour clustering on edge-coloured graphs."""

from .complete import CompleteInstanceSummary, solve_complete, stable_count_formula, summarize_complete
from .conflict import (
    ConflictGraph,
    build_conflict_graph,
    build_weighted_conflict_graph,
    independent_set_value_equivalence,
)
from .errors import (
    CClusterError,
    InputError,
    ParameterError,
    PreconditionError,
    ReductionInapplicableError,
    SizeLimitError,
    UnsupportedInstanceError,
)
from .fpt_stable import (
    PartitionTrial,
    StableSearchResult,
    run_trial,
    solve_stable_fpt,
    trivial_kernel_check,
)
from .fpt_unstable import (
    CondensedGraph,
    KernelVerdict,
    UnstableSolveResult,
    check_kernel,
    condense,
    min_weight_vertex_cover,
    solve_unstable_fpt,
)
from .generate import (
    ReductionOutput,
    forward_witness,
    hardness_reduction,
    proper_3_colouring,
    random_instance,
    random_subcubic_graph,
)
from .graph import (
    EdgeColouredGraph,
    StabilityReport,
    VertexColouring,
    colouring_from_stable_subgraph,
    components_edge_monochromatic,
    conflict_pairs,
    is_vertex_monochromatic,
    stability,
    used_colours,
)
from .mincut import CutSolution, FlowNetwork, build_flow_network, max_flow_min_cut, solve_bicoloured
from .oracle import (
    OracleResult,
    brute_force_clustering,
    brute_force_independent_set,
    brute_force_weighted_cover,
    brute_force_weighted_unstable,
)

__version__ = "0.1.0"

__all__ = [
    "CClusterError",
    "CompleteInstanceSummary",
    "CondensedGraph",
    "ConflictGraph",
    "CutSolution",
    "EdgeColouredGraph",
    "FlowNetwork",
    "InputError",
    "KernelVerdict",
    "OracleResult",
    "ParameterError",
    "PartitionTrial",
    "PreconditionError",
    "ReductionInapplicableError",
    "ReductionOutput",
    "SizeLimitError",
    "StabilityReport",
    "StableSearchResult",
    "UnstableSolveResult",
    "UnsupportedInstanceError",
    "VertexColouring",
    "brute_force_clustering",
    "brute_force_independent_set",
    "brute_force_weighted_cover",
    "brute_force_weighted_unstable",
    "build_conflict_graph",
    "build_flow_network",
    "build_weighted_conflict_graph",
    "check_kernel",
    "colouring_from_stable_subgraph",
    "components_edge_monochromatic",
    "condense",
    "conflict_pairs",
    "forward_witness",
    "hardness_reduction",
    "independent_set_value_equivalence",
    "is_vertex_monochromatic",
    "max_flow_min_cut",
    "min_weight_vertex_cover",
    "proper_3_colouring",
    "random_instance",
    "random_subcubic_graph",
    "run_trial",
    "solve_bicoloured",
    "solve_complete",
    "solve_stable_fpt",
    "solve_unstable_fpt",
    "stability",
    "stable_count_formula",
    "summarize_complete",
    "trivial_kernel_check",
    "used_colours",
]
