"""Exact search for longest cycles and their chords, circumference threshold
predicates, extremal family generators, and cographic bond machinery."""

from .bounds import (
    BoundsError,
    Threshold,
    check_contraction_gap,
    check_sqrt_bound,
    deficiency_bound_holds,
    meets_threshold,
    threshold_increasing,
)
from .census import all_graph_classes, canonical_code, enumerate_graphs
from .cographic import (
    Bond,
    BondError,
    bond_from_partition,
    chords_of_bond,
    cographic_rank,
    describe_bond,
    graphic_rank,
    max_bond,
    tree_sides,
)
from .families import Family, FamilyOutput, figure1, gen_family, petersen, two_cycle_bipartite, wheel, wheel_k4
from .formats import Graph6Error, emit_graph6, export_dot, iter_graph6, parse_edge_list, parse_graph6
from .graphs import (
    Cycle,
    Graph,
    GraphError,
    GraphStats,
    InvalidCycleError,
    InvalidForestError,
    LinearForest,
    SelfLoopError,
    analyze,
    build_graph,
    complete_graph,
    components,
    cycle_graph,
    is_k_connected,
)
from .harness import (
    HarnessError,
    Probe2Result,
    ProbeResult,
    Theorem,
    VerificationReport,
    probe_question1,
    probe_question2,
    report_json,
    run_corpus,
    summarize,
    verify,
)
from .harness import TOOL_VERSION as __version__
from .proofops import Augmentation, AugmentationError, augment_cycle, contract_off_cycle, find_augmentation
from .search import SearchBudgetExceeded, chords_of_cycle, circumference, longest_cycle, longest_cycles_all

__all__ = [
    "Augmentation",
    "AugmentationError",
    "Bond",
    "BondError",
    "BoundsError",
    "Cycle",
    "Family",
    "FamilyOutput",
    "Graph",
    "Graph6Error",
    "GraphError",
    "GraphStats",
    "HarnessError",
    "InvalidCycleError",
    "InvalidForestError",
    "LinearForest",
    "Probe2Result",
    "ProbeResult",
    "SearchBudgetExceeded",
    "SelfLoopError",
    "Theorem",
    "Threshold",
    "VerificationReport",
    "all_graph_classes",
    "analyze",
    "augment_cycle",
    "bond_from_partition",
    "build_graph",
    "canonical_code",
    "check_contraction_gap",
    "check_sqrt_bound",
    "chords_of_bond",
    "chords_of_cycle",
    "circumference",
    "cographic_rank",
    "complete_graph",
    "components",
    "contract_off_cycle",
    "cycle_graph",
    "deficiency_bound_holds",
    "describe_bond",
    "emit_graph6",
    "enumerate_graphs",
    "export_dot",
    "figure1",
    "find_augmentation",
    "gen_family",
    "graphic_rank",
    "is_k_connected",
    "iter_graph6",
    "longest_cycle",
    "longest_cycles_all",
    "max_bond",
    "meets_threshold",
    "parse_edge_list",
    "parse_graph6",
    "petersen",
    "probe_question1",
    "probe_question2",
    "report_json",
    "run_corpus",
    "summarize",
    "threshold_increasing",
    "tree_sides",
    "two_cycle_bipartite",
    "verify",
    "wheel",
    "wheel_k4",
]
