"""Exhaustive verification of longest-path intersection separators in small graphs."""

from .generate import (
    CONNECTED_COUNTS,
    GenerationShard,
    count_connected,
    enumerate_connected,
    external_source,
)
from .graph6 import Graph6FormatError, decode_graph6, encode_graph6, iter_graph6
from .graphs import (
    EmptySetError,
    InvalidEdgeError,
    SmallGraph,
    VertexSet,
    canonical_form,
    format_edge_list,
    parse_edge_list,
)
from .lemmas import (
    CaseConfig,
    NotAClaimError,
    build_config,
    replay_forbidden_pair,
    replay_lollipop,
    replay_min_distance,
    run_catalog,
)
from .longest_path import (
    LongestPathProfile,
    NoPathError,
    NotOnPathError,
    PathSeq,
    hamiltonian_path_exists,
    longest_path_profile,
    path_distance,
    reconstruct_path,
)
from .separators import (
    EllStatistics,
    ViolationRecord,
    find_violating_pair,
    is_separator,
    iter_violating_pairs,
    min_ell_statistics,
)
from .verify import (
    CheckpointError,
    PreconditionError,
    ReductionAssertionError,
    SweepReport,
    WitnessFailure,
    build_witness,
    check_witness,
    reduce_to_tight_case,
    verify_n,
)

__all__ = [name for name in dir() if not name.startswith("_")]
