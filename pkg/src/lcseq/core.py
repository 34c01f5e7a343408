"""LCS drivers over the threshold set, reconstruction, and the DP oracle.

The length driver walks the first sequence row by row, feeding each
row's match columns (in strictly decreasing order) to a threshold set;
the set's final size is the LCS length.  The reconstruction driver
additionally numbers every match and records, per match, its
predecessor match and its column, from which one LCS is read back in
O(L).  A dense Wagner-Fischer table serves as the independent oracle.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .matching import MatchStats, PositionLists, Sequence, build_position_lists, count_matches
from .threshold import ArrayBackend, OpCounters, RowCost, VebBackend, make_threshold_set

__all__ = [
    "TraceTable",
    "LcsResult",
    "ReconstructionCapError",
    "DpCapError",
    "lcs_length",
    "lcs_reconstruct",
    "lcs_vector_scan",
    "extract_lcs",
    "dp_oracle",
    "dp_traceback",
    "is_subsequence",
    "validate_common_subsequence",
    "DEFAULT_TRACE_CAP",
    "DEFAULT_DP_CAP",
]

DEFAULT_TRACE_CAP = 1 << 26  # max match records for reconstruction
DEFAULT_DP_CAP = 1 << 26  # max cells in the dense oracle table


class ReconstructionCapError(MemoryError):
    """R exceeds the trace memory cap; caller may fall back to length-only."""

    def __init__(self, r: int, cap: int):
        super().__init__(f"reconstruction needs {r} trace entries, cap is {cap}")
        self.r = r
        self.cap = cap


class DpCapError(MemoryError):
    def __init__(self, cells: int, cap: int):
        super().__init__(f"dense table needs {cells} cells, cap is {cap}")
        self.cells = cells
        self.cap = cap


@dataclass
class TraceTable:
    """Per-match reconstruction records (1-indexed by match number).

    predecessor[k] is the match number of the chain predecessor (0 =
    none); column[k] is the matched column; occupant[j] is the match
    number currently holding column j in the threshold set (index 0 is
    the zero sentinel); row[k] is the match's row, kept for chain
    diagnostics.
    """

    predecessor: list[int]
    column: list[int]
    occupant: list[int]
    row: list[int]
    count: int = 0


@dataclass
class LcsResult:
    length: int
    subsequence: tuple[int, ...] | None
    stats: MatchStats
    counters: OpCounters
    backend: str
    row_costs: list[RowCost] | None = None
    trace: TraceTable | None = None
    wall_ns: int = 0


def _empty_result(x: Sequence, pl: PositionLists, backend: str, r: int) -> LcsResult:
    return LcsResult(
        length=0,
        subsequence=None,
        stats=MatchStats(r=r, n=pl.length, m=len(x), l=0),
        counters=OpCounters(),
        backend=backend,
    )


def lcs_length(
    x: Sequence,
    y: Sequence,
    backend: str = "veb",
    position_lists: PositionLists | None = None,
    literal_guard: bool = False,
) -> LcsResult:
    """LCS length of x and y via the chosen threshold-set backend."""
    pl = position_lists if position_lists is not None else build_position_lists(y)
    stats = count_matches(x, pl)
    if stats.r == 0:
        return _empty_result(x, pl, backend, 0)
    t0 = time.perf_counter_ns()
    ts = make_threshold_set(pl.length, backend, literal_guard=literal_guard)
    lists = pl.lists
    for sym in x.symbols:
        positions = lists.get(sym)
        if not positions:
            continue
        ts.begin_row()
        for j in positions:
            ts.update(j)
    length = ts.size()
    wall = time.perf_counter_ns() - t0
    if not literal_guard:
        assert ts.counters.structure_total() <= 4 * stats.r
    stats.l = length
    return LcsResult(
        length=length,
        subsequence=None,
        stats=stats,
        counters=ts.counters,
        backend=backend,
        row_costs=ts.row_costs() if isinstance(ts, ArrayBackend) else None,
        wall_ns=wall,
    )


def lcs_vector_scan(
    x: Sequence, y: Sequence, position_lists: PositionLists | None = None
) -> LcsResult:
    """Length-only driver on the ordered-vector backend."""
    return lcs_length(x, y, backend="array", position_lists=position_lists)


def lcs_reconstruct(
    x: Sequence,
    y: Sequence,
    position_lists: PositionLists | None = None,
    memory_cap: int = DEFAULT_TRACE_CAP,
) -> LcsResult:
    """LCS length plus one actual subsequence, via the vEB backend."""
    pl = position_lists if position_lists is not None else build_position_lists(y)
    stats = count_matches(x, pl)
    if stats.r == 0:
        result = _empty_result(x, pl, "veb", 0)
        result.subsequence = ()
        return result
    if stats.r > memory_cap:
        raise ReconstructionCapError(stats.r, memory_cap)
    t0 = time.perf_counter_ns()
    n = pl.length
    ts = VebBackend(n)
    trace = TraceTable(
        predecessor=[0] * (stats.r + 1),
        column=[0] * (stats.r + 1),
        occupant=[0] * (n + 1),
        row=[0] * (stats.r + 1),
    )
    pred_k = trace.predecessor
    col_k = trace.column
    occ = trace.occupant
    row_k = trace.row
    lists = pl.lists
    m = 0
    row = 0
    for sym in x.symbols:
        row += 1
        positions = lists.get(sym)
        if not positions:
            continue
        for j in positions:
            ts.update(j)
            p = ts.pred(j)
            m += 1
            pred_k[m] = occ[p]
            col_k[m] = j
            occ[j] = m
            row_k[m] = row
    trace.count = m
    length = ts.tree.population
    top = ts.tree.max
    subseq = extract_lcs(trace, occ[top] if top else 0, y)
    wall = time.perf_counter_ns() - t0
    assert ts.counters.structure_total() <= 4 * stats.r
    assert len(subseq) == length
    stats.l = length
    return LcsResult(
        length=length,
        subsequence=subseq,
        stats=stats,
        counters=ts.counters,
        backend="veb",
        trace=trace,
        wall_ns=wall,
    )


def extract_lcs(trace: TraceTable, k: int, y: Sequence) -> tuple[int, ...]:
    """Read the subsequence off a match chain, predecessors first."""
    cols: list[int] = []
    while k > 0:
        cols.append(trace.column[k])
        k = trace.predecessor[k]
    cols.reverse()
    return tuple(y.symbols[j - 1] for j in cols)


def dp_oracle(
    x: Sequence, y: Sequence, cap: int = DEFAULT_DP_CAP
) -> np.ndarray:
    """Dense (m+1) x (n+1) Wagner-Fischer length table."""
    m, n = len(x.symbols), len(y.symbols)
    if (m + 1) * (n + 1) > cap:
        raise DpCapError((m + 1) * (n + 1), cap)
    ys = np.asarray(y.symbols, dtype=np.int64) if n else np.empty(0, dtype=np.int64)
    table = np.zeros((m + 1, n + 1), dtype=np.int32)
    for i in range(1, m + 1):
        prev = table[i - 1]
        cand = np.maximum(prev[1:], prev[:-1] + (ys == x.symbols[i - 1]))
        np.maximum.accumulate(cand, out=cand)
        table[i, 1:] = cand
    return table


def dp_traceback(table: np.ndarray, x: Sequence, y: Sequence) -> tuple[int, ...]:
    """One LCS read off the dense table."""
    i, j = len(x.symbols), len(y.symbols)
    out: list[int] = []
    while i > 0 and j > 0:
        if x.symbols[i - 1] == y.symbols[j - 1] and table[i][j] == table[i - 1][j - 1] + 1:
            out.append(x.symbols[i - 1])
            i -= 1
            j -= 1
        elif table[i - 1][j] >= table[i][j - 1]:
            i -= 1
        else:
            j -= 1
    out.reverse()
    return tuple(out)


def is_subsequence(candidate: tuple[int, ...], seq: Sequence) -> bool:
    it = iter(seq.symbols)
    return all(any(s == c for s in it) for c in candidate)


def validate_common_subsequence(
    candidate: tuple[int, ...], x: Sequence, y: Sequence, expected_length: int
) -> bool:
    """Structural check: common subsequence of both inputs, right length."""
    return (
        len(candidate) == expected_length
        and is_subsequence(candidate, x)
        and is_subsequence(candidate, y)
    )
