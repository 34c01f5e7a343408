"""van Emde Boas tree over an integer universe {0, ..., u-1}.

Universe sizes are rounded up to a power of two.  Each node splits its
key space into 2**ceil(b/2) clusters of 2**floor(b/2) keys (b = bit
width), with a summary structure over the occupied clusters, giving
O(log log u) insert/delete/member/successor/predecessor and O(1)
min/max.

The minimum of a node is kept only in the node's cache, never stored
recursively, so insert and delete make at most one non-trivial
recursive call.  Clusters are allocated lazily on first insert and
freed when emptied, keeping memory proportional to the occupied keys.
"""

from __future__ import annotations

__all__ = ["VebTree"]


class VebTree:
    """Dynamic set of integers in [0, universe_bound)."""

    __slots__ = (
        "universe_bound",
        "_bits",
        "_lower_bits",
        "_lower_mask",
        "min",
        "max",
        "summary",
        "clusters",
        "population",
    )

    def __init__(self, universe_request: int):
        if universe_request < 1:
            raise ValueError(f"universe must be positive, got {universe_request}")
        bits = max(universe_request - 1, 1).bit_length()
        self.universe_bound = 1 << bits
        self._bits = bits
        self._lower_bits = bits >> 1
        self._lower_mask = (1 << self._lower_bits) - 1
        self.min: int | None = None
        self.max: int | None = None
        self.summary: VebTree | None = None
        self.clusters: dict[int, VebTree] = {}
        self.population = 0
        assert _depth_of(self.universe_bound) <= _depth_bound(self.universe_bound)

    def _check(self, x: int) -> None:
        if not 0 <= x < self.universe_bound:
            raise ValueError(
                f"key {x} outside universe [0, {self.universe_bound})"
            )

    def __len__(self) -> int:
        return self.population

    def __contains__(self, x: int) -> bool:
        self._check(x)
        node = self
        while True:
            if x == node.min or x == node.max:
                return True
            if node._bits == 1:
                return False
            cluster = node.clusters.get(x >> node._lower_bits)
            if cluster is None:
                return False
            x &= node._lower_mask
            node = cluster

    def insert(self, x: int) -> bool:
        """Insert x; returns True if x was absent (idempotent otherwise)."""
        self._check(x)
        return self._insert(x)

    def _insert(self, x: int) -> bool:
        if self.min is None:
            self.min = self.max = x
            self.population = 1
            return True
        if x == self.min or x == self.max:
            return False
        if x < self.min:
            self.min, x = x, self.min
        new = True
        if self._bits > 1:
            h = x >> self._lower_bits
            l = x & self._lower_mask
            cluster = self.clusters.get(h)
            if cluster is None:
                cluster = VebTree(1 << self._lower_bits)
                self.clusters[h] = cluster
            if cluster.min is None:
                if self.summary is None:
                    self.summary = VebTree(1 << (self._bits - self._lower_bits))
                self.summary._insert(h)
                cluster.min = cluster.max = l
                cluster.population = 1
            else:
                new = cluster._insert(l)
        # bits == 1: x differs from both cached keys, so it is the other
        # key of {0, 1} and lands in the max slot below.
        if new and x > self.max:
            self.max = x
        if new:
            self.population += 1
        return new

    def delete(self, x: int) -> bool:
        """Delete x; returns True if present (no-op on absent keys)."""
        self._check(x)
        return self._delete(x)

    def _delete(self, x: int) -> bool:
        if self.min is None:
            return False
        if x == self.min:
            if self.min == self.max:
                self.min = self.max = None
                self.population = 0
                return True
            if self._bits == 1:
                self.min = self.max
                self.population = 1
                return True
            # pull the new minimum out of the first occupied cluster
            c = self.summary.min
            cluster = self.clusters[c]
            self.min = (c << self._lower_bits) | cluster.min
            x = self.min
        elif self._bits == 1:
            if x == self.max and self.max != self.min:
                self.max = self.min
                self.population -= 1
                return True
            return False
        h = x >> self._lower_bits
        l = x & self._lower_mask
        cluster = self.clusters.get(h)
        if cluster is None:
            return False
        if not cluster._delete(l):
            return False
        if cluster.min is None:
            self.summary._delete(h)
            del self.clusters[h]
            if x == self.max:
                s_max = self.summary.max
                if s_max is None:
                    self.max = self.min
                else:
                    self.max = (s_max << self._lower_bits) | self.clusters[s_max].max
        elif x == self.max:
            self.max = (h << self._lower_bits) | cluster.max
        self.population -= 1
        return True

    def successor(self, x: int) -> int | None:
        """Smallest stored key strictly greater than x, or None."""
        self._check(x)
        return self._succ(x)

    def _succ(self, x: int) -> int | None:
        if self._bits == 1:
            if x == 0 and self.max == 1:
                return 1
            return None
        if self.min is not None and x < self.min:
            return self.min
        h = x >> self._lower_bits
        l = x & self._lower_mask
        cluster = self.clusters.get(h)
        if cluster is not None and cluster.max is not None and l < cluster.max:
            return (h << self._lower_bits) | cluster._succ(l)
        sc = self.summary._succ(h) if self.summary is not None else None
        if sc is None:
            return None
        return (sc << self._lower_bits) | self.clusters[sc].min

    def predecessor(self, x: int) -> int | None:
        """Largest stored key strictly less than x, or None."""
        self._check(x)
        return self._pred(x)

    def _pred(self, x: int) -> int | None:
        if self._bits == 1:
            if x == 1 and self.min == 0:
                return 0
            return None
        if self.max is not None and x > self.max:
            return self.max
        h = x >> self._lower_bits
        l = x & self._lower_mask
        cluster = self.clusters.get(h)
        if cluster is not None and cluster.min is not None and l > cluster.min:
            return (h << self._lower_bits) | cluster._pred(l)
        pc = self.summary._pred(h) if self.summary is not None else None
        if pc is None:
            if self.min is not None and x > self.min:
                return self.min
            return None
        return (pc << self._lower_bits) | self.clusters[pc].max

    def __iter__(self):
        x = self.min
        while x is not None:
            yield x
            if x + 1 >= self.universe_bound:
                return
            x = self._succ(x)


def _depth_of(universe_bound: int) -> int:
    depth = 0
    bits = universe_bound.bit_length() - 1
    while bits > 1:
        bits -= bits >> 1  # upper half goes to the summary side
        depth += 1
    return depth


def _depth_bound(universe_bound: int) -> int:
    bits = universe_bound.bit_length() - 1
    loglog = max(bits, 1).bit_length()
    return loglog + 2
