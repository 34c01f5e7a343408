"""Longest common subsequence via ordered threshold sets.

Three interchangeable backends (van Emde Boas tree, AVL tree, sorted
vector) drive the same successor-replacement update; reconstruction
records a per-match predecessor trace in O(R) space.
"""

from .bench import BenchCase, emit_report, gen_pair, gen_sequence, run_bench
from .core import (
    DpCapError,
    LcsResult,
    ReconstructionCapError,
    TraceTable,
    dp_oracle,
    dp_traceback,
    extract_lcs,
    lcs_length,
    lcs_reconstruct,
    lcs_vector_scan,
    validate_common_subsequence,
)
from .matching import (
    MatchStats,
    PositionLists,
    Sequence,
    SymbolTable,
    build_position_lists,
    count_matches,
    tokenize,
)
from .shadow import InvariantViolation, ShadowState, ShadowTracker, shadow_run
from .threshold import (
    ArrayBackend,
    OpCounters,
    ThresholdSet,
    TreeBackend,
    VebBackend,
    make_threshold_set,
)
from .veb import VebTree

__version__ = "0.1.0"
