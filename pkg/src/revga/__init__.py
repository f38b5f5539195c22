"""Genome rearrangement toolkit: exact signed reversal distance via
breakpoint graphs, plus a genetic sign-search estimator for the unsigned
problem, with brute-force oracles and baselines."""

from .perms import (
    InvalidReversal,
    ParseError,
    Reversal,
    Rng,
    Strip,
    apply_reversal_signed,
    apply_reversal_unsigned,
    derive_seed,
    find_strips,
    format_permutation,
    identity,
    is_identity,
    parse_permutation,
    random_permutation,
)
from .bpgraph import BreakpointGraph, breakpoint_count, build_graph, cycle_count
from .hp import (
    DistanceBreakdown,
    NoImprovingReversal,
    distance_lower_bound,
    extract_optimal_sequence,
    signed_distance,
)
from .ga import (
    GaConfig,
    GaResult,
    ReplayFailure,
    deduce_unsigned_sequence,
    run_ga,
)
from .oracles import (
    SizeTooLarge,
    bfs_signed_distances,
    bfs_unsigned_distance,
    bfs_unsigned_distances,
    exhaustive_embedding_min,
    greedy_breakpoint_sort,
    trivial_sort,
)

__version__ = "0.1.0"
