"""Chip-firing games on multigraphs: halting, recurrence, winnability, exact
divisor rank and distance solvers, minimum target set selection, and
cross-verified gadget reductions between the two worlds."""

from .chipfire import (
    Divisor,
    GameTrace,
    HaltVerdict,
    HALTING,
    NON_HALTING,
    classify_halting,
    deg,
    fire,
    fire_sequence,
    is_active,
    is_effective,
    is_recurrent,
    is_winnable,
    winnability_complement,
)
from .distance import DistanceResult, dist_nonhalt, dist_rec, effective_divisors, rank, upper_bound_to_recurrent
from .errors import (
    ChipFiringError,
    DisconnectedGraphError,
    FormatError,
    GraphStructureError,
    IllegalFiringError,
    InvalidVertexError,
    SizeGuardError,
    WitnessError,
)
from .multigraph import Multigraph, graph_from_json, graph_to_json, graph_to_text, parse_graph
from .oracles import (
    OracleReport,
    rank_definitional,
    recurrent_permutation,
    ts_subset_enumeration,
    verify_reduction_chain,
    winnable_exhaustive,
    winnable_within_bound,
)
from .reductions import (
    RecToNonhaltInstance,
    TssToRecInstance,
    default_apex_multiplicity,
    extract_target_set,
    lift_target_set,
    reduce_rec_to_nonhalt,
    reduce_tss_to_nonhalt,
    reduce_tss_to_rec,
    subdivide_to_simple,
    subdivision_roles,
)
from .tss import (
    TargetSet,
    Thresholds,
    activation_closure,
    greedy_target_set,
    is_target_set,
    min_target_set,
)

__all__ = [
    "ChipFiringError",
    "DisconnectedGraphError",
    "DistanceResult",
    "Divisor",
    "FormatError",
    "GameTrace",
    "GraphStructureError",
    "HALTING",
    "HaltVerdict",
    "IllegalFiringError",
    "InvalidVertexError",
    "Multigraph",
    "NON_HALTING",
    "OracleReport",
    "RecToNonhaltInstance",
    "SizeGuardError",
    "TargetSet",
    "Thresholds",
    "TssToRecInstance",
    "WitnessError",
    "activation_closure",
    "classify_halting",
    "default_apex_multiplicity",
    "deg",
    "dist_nonhalt",
    "dist_rec",
    "effective_divisors",
    "extract_target_set",
    "fire",
    "fire_sequence",
    "graph_from_json",
    "graph_to_json",
    "graph_to_text",
    "greedy_target_set",
    "is_active",
    "is_effective",
    "is_recurrent",
    "is_target_set",
    "is_winnable",
    "lift_target_set",
    "min_target_set",
    "parse_graph",
    "rank",
    "rank_definitional",
    "recurrent_permutation",
    "reduce_rec_to_nonhalt",
    "reduce_tss_to_nonhalt",
    "reduce_tss_to_rec",
    "subdivide_to_simple",
    "subdivision_roles",
    "ts_subset_enumeration",
    "upper_bound_to_recurrent",
    "verify_reduction_chain",
    "winnability_complement",
    "winnable_exhaustive",
    "winnable_within_bound",
]

__version__ = "0.1.0"
