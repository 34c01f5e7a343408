"""Shared independent oracles for the test suite."""

from __future__ import annotations

import itertools
from bisect import bisect_right, insort

from lcseq.matching import Sequence


def brute_force_lcs_length(x: Sequence, y: Sequence) -> int:
    """Exhaustive enumeration of subsequences of the shorter input."""
    a, b = (x.symbols, y.symbols) if len(x) <= len(y) else (y.symbols, x.symbols)
    for length in range(len(a), 0, -1):
        for cand in itertools.combinations(a, length):
            it = iter(b)
            if all(any(s == c for s in it) for c in cand):
                return length
    return 0


def brute_force_matches(x: Sequence, y: Sequence) -> list[tuple[int, int]]:
    return [
        (i, j)
        for i in range(1, len(x) + 1)
        for j in range(1, len(y) + 1)
        if x.symbols[i - 1] == y.symbols[j - 1]
    ]


class SortedSetOracle:
    """Reference for the vEB tree: plain sorted list."""

    def __init__(self):
        self.items: list[int] = []

    def insert(self, x: int) -> bool:
        if x in self.items:
            return False
        insort(self.items, x)
        return True

    def delete(self, x: int) -> bool:
        if x in self.items:
            self.items.remove(x)
            return True
        return False

    def member(self, x: int) -> bool:
        return x in self.items

    def min(self) -> int | None:
        return self.items[0] if self.items else None

    def max(self) -> int | None:
        return self.items[-1] if self.items else None

    def successor(self, x: int) -> int | None:
        i = bisect_right(self.items, x)
        return self.items[i] if i < len(self.items) else None

    def predecessor(self, x: int) -> int | None:
        from bisect import bisect_left

        i = bisect_left(self.items, x)
        return self.items[i - 1] if i > 0 else None


def reference_update(contents: list[int], x: int) -> int | None:
    """Literal successor-replacement rule on a sorted list (in place).

    Returns the replaced element or None when appended.
    """
    succ = next((v for v in contents if v > x - 1), 0)
    if succ:
        contents.remove(succ)
        insort(contents, x)
        return succ
    insort(contents, x)
    return None
