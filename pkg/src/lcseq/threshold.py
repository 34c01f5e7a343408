"""Ordered positive-integer threshold set with the successor-replacement update.

The set holds strictly increasing integers in 1..capacity.  `update(x)`
replaces the successor of x-1 (the smallest member >= x) with x when one
exists, and appends x otherwise; the set therefore never shrinks and
grows by at most one per update.  Three interchangeable backends realize
the same contract with different cost profiles:

* ``VebBackend``  - van Emde Boas tree, O(log log n) per operation.
* ``TreeBackend`` - AVL tree, O(log size) per operation.
* ``ArrayBackend``- sorted vector with a per-row downward scan cursor,
  O(size) per row when updates within a row arrive in strictly
  decreasing order.

Queries use 0 as the "no such element" sentinel, matching the
positive-integer key space.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field

from .bst import AvlTree
from .veb import VebTree

__all__ = [
    "OpCounters",
    "RowCost",
    "ThresholdSet",
    "VebBackend",
    "TreeBackend",
    "ArrayBackend",
    "make_threshold_set",
    "BACKEND_NAMES",
]

BACKEND_NAMES = ("veb", "tree", "array")


@dataclass
class OpCounters:
    size: int = 0
    succ: int = 0
    pred: int = 0
    insert: int = 0
    delete: int = 0
    update: int = 0

    def structure_total(self) -> int:
        """Succ + Pred + Insert + Delete, the per-match accounting total."""
        return self.succ + self.pred + self.insert + self.delete


@dataclass(frozen=True)
class RowCost:
    """Array-backend cost record for one row of updates."""

    alpha_start: int
    updates: int
    comparisons: int


class ThresholdSet:
    """Abstract base; subclasses supply the raw ordered-set primitives."""

    def __init__(self, capacity: int):
        if capacity < 1:
            raise ValueError(f"capacity must be positive, got {capacity}")
        self.capacity = capacity
        self.counters = OpCounters()

    # -- raw primitives (uncounted) -------------------------------------
    def _succ(self, x: int) -> int:
        raise NotImplementedError

    def _pred(self, x: int) -> int:
        raise NotImplementedError

    def _insert(self, x: int) -> None:
        raise NotImplementedError

    def _delete(self, x: int) -> None:
        raise NotImplementedError

    def _max(self) -> int:
        """Largest member, or 0 when empty."""
        raise NotImplementedError

    # -- public operations ----------------------------------------------
    def size(self) -> int:
        raise NotImplementedError

    def succ(self, x: int) -> int:
        """Smallest member > x, or 0."""
        if not 0 <= x <= self.capacity:
            raise ValueError(f"succ argument {x} outside 0..{self.capacity}")
        self.counters.succ += 1
        return self._succ(x)

    def pred(self, x: int) -> int:
        """Largest member < x, or 0."""
        if not 1 <= x <= self.capacity:
            raise ValueError(f"pred argument {x} outside 1..{self.capacity}")
        self.counters.pred += 1
        return self._pred(x)

    def update(self, x: int) -> int | None:
        """Apply the successor-replacement rule.

        Returns the replaced member, or None when x was appended.
        """
        if not 1 <= x <= self.capacity:
            raise ValueError(f"update argument {x} outside 1..{self.capacity}")
        self.counters.update += 1
        self.counters.succ += 1
        y = self._succ(x - 1)
        if y:
            self.counters.delete += 1
            self._delete(y)
            self.counters.insert += 1
            self._insert(x)
            return y
        self.counters.insert += 1
        self._insert(x)
        return None

    def contents(self) -> list[int]:
        """Ascending list of members."""
        raise NotImplementedError

    def begin_row(self) -> None:
        """Row boundary hint; only the array backend cares."""


class VebBackend(ThresholdSet):
    """Threshold set on a van Emde Boas tree over universe capacity+1.

    ``literal_guard=True`` reproduces a published-pseudocode variant that
    skips the delete when the successor equals the current maximum; it is
    deliberately faulty (it can over-grow the set) and exists only so the
    verification tooling can demonstrate the discrepancy.
    """

    def __init__(self, capacity: int, literal_guard: bool = False):
        super().__init__(capacity)
        self.tree = VebTree(capacity + 1)
        self.literal_guard = literal_guard

    def size(self) -> int:
        self.counters.size += 1
        return self.tree.population

    def _succ(self, x: int) -> int:
        return self.tree.successor(x) or 0

    def _pred(self, x: int) -> int:
        return self.tree.predecessor(x) or 0

    def _insert(self, x: int) -> None:
        self.tree.insert(x)

    def _delete(self, x: int) -> None:
        self.tree.delete(x)

    def _max(self) -> int:
        return self.tree.max or 0

    def update(self, x: int) -> int | None:
        if not self.literal_guard:
            return super().update(x)
        if not 1 <= x <= self.capacity:
            raise ValueError(f"update argument {x} outside 1..{self.capacity}")
        self.counters.update += 1
        self.counters.succ += 1
        k = self._succ(x - 1)
        replaced = None
        if k and k < self._max():
            self.counters.delete += 1
            self._delete(k)
            replaced = k
        self.counters.insert += 1
        self._insert(x)
        return replaced

    def contents(self) -> list[int]:
        return list(self.tree)


class TreeBackend(ThresholdSet):
    """Threshold set on an AVL tree."""

    def __init__(self, capacity: int):
        super().__init__(capacity)
        self.tree = AvlTree()
        self.max_height_seen = 0

    def _note_height(self) -> None:
        if self.tree.height > self.max_height_seen:
            self.max_height_seen = self.tree.height

    def size(self) -> int:
        self.counters.size += 1
        return len(self.tree)

    def _succ(self, x: int) -> int:
        self._note_height()
        return self.tree.successor(x) or 0

    def _pred(self, x: int) -> int:
        self._note_height()
        return self.tree.predecessor(x) or 0

    def _insert(self, x: int) -> None:
        self.tree.insert(x)
        self._note_height()

    def _delete(self, x: int) -> None:
        self.tree.delete(x)

    def _max(self) -> int:
        return self.tree.max() or 0

    def contents(self) -> list[int]:
        return list(self.tree)


class ArrayBackend(ThresholdSet):
    """Threshold set on a sorted dense vector with a row-scan cursor.

    Within one row the update arguments arrive in strictly decreasing
    order, so the successor scan can resume downward from where the
    previous update stopped; total element comparisons per row are then
    at most alpha + row_updates + 1.  Out-of-order calls (allowed for
    generic use) restart the scan from the top of the vector.
    """

    def __init__(self, capacity: int):
        super().__init__(capacity)
        self._s: list[int] = []
        self._alpha = 0
        self._cursor = -1
        self._last_x: int | None = None
        self._row_costs: list[RowCost] = []
        self._row_alpha_start = 0
        self._row_updates = 0
        self._row_comparisons = 0
        self._row_open = False

    def size(self) -> int:
        self.counters.size += 1
        return self._alpha

    def _succ(self, x: int) -> int:
        i = bisect_right(self._s, x, 0, self._alpha)
        return self._s[i] if i < self._alpha else 0

    def _pred(self, x: int) -> int:
        i = bisect_left(self._s, x, 0, self._alpha)
        return self._s[i - 1] if i > 0 else 0

    def _max(self) -> int:
        return self._s[self._alpha - 1] if self._alpha else 0

    def begin_row(self) -> None:
        self._flush_row()
        self._cursor = self._alpha - 1
        self._last_x = None
        self._row_alpha_start = self._alpha
        self._row_open = True

    def _flush_row(self) -> None:
        if self._row_open:
            self._row_costs.append(
                RowCost(self._row_alpha_start, self._row_updates, self._row_comparisons)
            )
        self._row_updates = 0
        self._row_comparisons = 0

    def row_costs(self) -> list[RowCost]:
        """Per-row cost records, including the still-open row."""
        out = list(self._row_costs)
        if self._row_open:
            out.append(
                RowCost(self._row_alpha_start, self._row_updates, self._row_comparisons)
            )
        return out

    def update(self, x: int) -> int | None:
        if not 1 <= x <= self.capacity:
            raise ValueError(f"update argument {x} outside 1..{self.capacity}")
        self.counters.update += 1
        self.counters.succ += 1
        if not self._row_open or (self._last_x is not None and x >= self._last_x):
            # no row discipline to exploit; restart the scan from the top
            self._cursor = self._alpha - 1
            if not self._row_open:
                self._row_alpha_start = self._alpha
                self._row_open = True
        s = self._s
        k = self._cursor
        while k >= 0:
            self._row_comparisons += 1
            if s[k] < x:
                break
            k -= 1
        slot = k + 1
        if slot == self._alpha:
            s.append(x)
            self._alpha += 1
            replaced = None
        else:
            replaced = s[slot]
            self.counters.delete += 1
            s[slot] = x
        self.counters.insert += 1
        self._cursor = k
        self._last_x = x
        self._row_updates += 1
        return replaced

    def contents(self) -> list[int]:
        return self._s[: self._alpha]


def make_threshold_set(
    capacity: int, backend: str, literal_guard: bool = False
) -> ThresholdSet:
    if backend == "veb":
        return VebBackend(capacity, literal_guard=literal_guard)
    if literal_guard:
        raise ValueError("literal_guard is only supported by the veb backend")
    if backend == "tree":
        return TreeBackend(capacity)
    if backend == "array":
        return ArrayBackend(capacity)
    raise ValueError(f"unknown backend {backend!r}; expected one of {BACKEND_NAMES}")
