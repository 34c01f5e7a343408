"""Dense debug-mode state run in lock-step with the threshold set.

The tracker maintains, literally by definition, the per-column running
maxima H, their prefix maxima Q, and the break-point vector P, while the
compact threshold set processes the same matches.  After every row it
cross-checks the two representations; any disagreement is reported with
the offending row, column, and both values.  Desk-scale only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matching import PositionLists, Sequence, build_position_lists
from .threshold import ThresholdSet, make_threshold_set

__all__ = [
    "InvariantViolation",
    "ShadowState",
    "ShadowTracker",
    "shadow_run",
    "DEFAULT_SHADOW_LIMIT",
]

DEFAULT_SHADOW_LIMIT = 256


class InvariantViolation(Exception):
    def __init__(self, what: str, row: int, column: int, expected, actual):
        super().__init__(
            f"{what} at row {row}, column {column}: expected {expected}, got {actual}"
        )
        self.what = what
        self.row = row
        self.column = column
        self.expected = expected
        self.actual = actual


@dataclass
class ShadowState:
    """Snapshot after one row (all vectors 1-indexed, slot 0 unused)."""

    row: int
    h: tuple[int, ...]
    q: tuple[int, ...]
    p: tuple[int, ...]
    contents: tuple[int, ...]
    t_values: dict[tuple[int, int], int]


class ShadowTracker:
    """Dense H/Q/P bookkeeping plus a threshold set, checked row by row."""

    def __init__(
        self,
        n: int,
        backend: str = "veb",
        seed_q: tuple[int, ...] | None = None,
        seed_contents: tuple[int, ...] | None = None,
    ):
        self.n = n
        self.h = [0] * (n + 1)
        self.q = [0] * (n + 1)
        self.ts: ThresholdSet = make_threshold_set(max(n, 1), backend)
        self.t_values: dict[tuple[int, int], int] = {}
        if seed_q is not None:
            if len(seed_q) != n:
                raise ValueError(f"seed Q must have length {n}")
            self.q[1:] = list(seed_q)
            self.h[1:] = list(seed_q)
        if seed_contents is not None:
            # strictly increasing contents seed cleanly as a run of appends
            for v in seed_contents:
                self.ts.update(v)

    def apply_match(self, i: int, j: int) -> int:
        """Process match (i, j); returns its chain-length value T(i, j)."""
        if not 1 <= j <= self.n:
            raise ValueError(f"column {j} outside 1..{self.n}")
        t = 1 + self.q[j - 1]
        self.t_values[(i, j)] = t
        if t > self.h[j]:
            self.h[j] = t
            running = self.q[j - 1]
            for col in range(j, self.n + 1):
                running = max(running, self.h[col])
                if self.q[col] == running:
                    break
                self.q[col] = running
        self.ts.update(j)
        return t

    def q_from_contents(self) -> list[int]:
        """Q reconstructed from the compact set (piecewise-constant form)."""
        s = self.ts.contents()
        q = [0] * (self.n + 1)
        alpha = len(s)
        for k in range(alpha):
            upper = s[k + 1] if k + 1 < alpha else self.n + 1
            for j in range(s[k], upper):
                q[j] = k + 1
        return q

    def break_points(self) -> list[int]:
        """P: first column reaching each value, sentinel n+1 beyond max Q."""
        p = [self.n + 1] * (self.n + 1)
        for j in range(1, self.n + 1):
            t = self.q[j]
            if t >= 1 and p[t] == self.n + 1:
                p[t] = j
        return p

    def check_row(self, row: int, prev_h: list[int] | None) -> None:
        n = self.n
        # (a) Q is the prefix maximum of H
        running = 0
        for j in range(1, n + 1):
            running = max(running, self.h[j])
            if self.q[j] != running:
                raise InvariantViolation("Q != prefix-max(H)", row, j, running, self.q[j])
        # (e) Q nondecreasing with unit steps
        for j in range(1, n):
            step = self.q[j + 1] - self.q[j]
            if step not in (0, 1):
                raise InvariantViolation(
                    "Q step outside {0,1}", row, j + 1, "step in {0,1}", step
                )
        # (b) Q reconstructed from the compact set matches dense Q
        q_s = self.q_from_contents()
        for j in range(1, n + 1):
            if q_s[j] != self.q[j]:
                raise InvariantViolation(
                    "set-derived Q != dense Q", row, j, self.q[j], q_s[j]
                )
        # (c) break points equal the set contents padded with the sentinel
        contents = self.ts.contents()
        expected_p = contents + [n + 1] * (n - len(contents))
        p = self.break_points()[1:]
        if p != expected_p:
            raise InvariantViolation(
                "break points != set contents", row, 0, expected_p, p
            )
        # (d) H never decreases row over row
        if prev_h is not None:
            for j in range(1, n + 1):
                if self.h[j] < prev_h[j]:
                    raise InvariantViolation(
                        "H decreased across rows", row, j, prev_h[j], self.h[j]
                    )

    def snapshot(self, row: int) -> ShadowState:
        return ShadowState(
            row=row,
            h=tuple(self.h[1:]),
            q=tuple(self.q[1:]),
            p=tuple(self.break_points()[1:]),
            contents=tuple(self.ts.contents()),
            t_values=dict(self.t_values),
        )


def shadow_run(
    x: Sequence,
    y: Sequence,
    position_lists: PositionLists | None = None,
    limit: int = DEFAULT_SHADOW_LIMIT,
) -> list[ShadowState]:
    """Run the threshold driver with dense cross-checks after every row."""
    if len(x) > limit or len(y) > limit:
        raise ValueError(
            f"shadow mode is capped at {limit}x{limit}; got {len(x)}x{len(y)}"
        )
    pl = position_lists if position_lists is not None else build_position_lists(y)
    tracker = ShadowTracker(len(y))
    snapshots: list[ShadowState] = []
    prev_h: list[int] | None = None
    for i, sym in enumerate(x.symbols, start=1):
        for j in pl.positions(sym):
            tracker.apply_match(i, j)
        tracker.check_row(i, prev_h)
        prev_h = list(tracker.h)
        snapshots.append(tracker.snapshot(i))
    return snapshots
