"""Interval systems on the open unit line, their overlap graphs and segments.

Positions are exact rationals (:class:`fractions.Fraction`).  A normalized
system of ``n`` intervals puts its endpoints on ``r / (2n + 1)`` for
``r = 1 .. 2n``, which leaves room for pillars strictly between them.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

Position = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class IntervalSystemError(ValueError):
    pass


class DuplicateEndpoint(IntervalSystemError):
    pass


class DegenerateInterval(IntervalSystemError):
    pass


def position(num: int, den: int = 1) -> Fraction:
    """Return ``num/den`` as a Position, checking that it lies in (0, 1)."""
    p = Fraction(num, den)
    if not 0 < p < 1:
        raise ValueError(f"position {p} is not inside (0, 1)")
    return p


def midpoint(a: Fraction, b: Fraction) -> Fraction:
    return (a + b) / 2


@dataclass(frozen=True)
class Interval:
    left: Fraction
    right: Fraction

    def __post_init__(self) -> None:
        if not self.left < self.right:
            raise DegenerateInterval(f"({self.left}, {self.right}) has left >= right")

    def contains_point(self, x: Fraction) -> bool:
        return self.left < x < self.right

    def contains(self, other: "Interval") -> bool:
        return self.left < other.left and other.right < self.right

    def __str__(self) -> str:
        return f"({self.left}, {self.right})"


def overlaps(a: Interval, b: Interval) -> bool:
    """True iff the two intervals cross: they meet and neither contains the other."""
    return a.left < b.left < a.right < b.right or b.left < a.left < b.right < a.right


@dataclass(frozen=True)
class IntervalSystem:
    intervals: tuple[Interval, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "intervals", tuple(self.intervals))
        seen: set[Fraction] = set()
        for iv in self.intervals:
            for x in (iv.left, iv.right):
                if not 0 < x < 1:
                    raise IntervalSystemError(f"endpoint {x} is not inside (0, 1)")
                if x in seen:
                    raise DuplicateEndpoint(f"endpoint {x} is shared")
                seen.add(x)

    @property
    def n(self) -> int:
        return len(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def __getitem__(self, i: int) -> Interval:
        return self.intervals[i]

    @cached_property
    def endpoints(self) -> list[tuple[Fraction, int]]:
        """All endpoints sorted, as ``(position, interval index)``."""
        pts = [(iv.left, i) for i, iv in enumerate(self.intervals)]
        pts += [(iv.right, i) for i, iv in enumerate(self.intervals)]
        pts.sort()
        return pts

    @cached_property
    def endpoint_positions(self) -> list[Fraction]:
        return [x for x, _ in self.endpoints]

    @cached_property
    def endpoint_set(self) -> frozenset[Fraction]:
        return frozenset(self.endpoint_positions)

    def is_endpoint(self, x: Fraction) -> bool:
        return x in self.endpoint_set

    def next_endpoint_after(self, x: Fraction) -> Fraction:
        """Smallest endpoint strictly greater than ``x``, or 1 if there is none."""
        pos = self.endpoint_positions
        k = bisect_left(pos, x)
        if k < len(pos) and pos[k] == x:
            k += 1
        return pos[k] if k < len(pos) else ONE

    def ranks(self) -> list[tuple[int, int]]:
        """Integer ranks ``(l, r)`` of each interval among all 2n endpoints (1-based)."""
        rank = {x: r for r, x in enumerate(self.endpoint_positions, start=1)}
        return [(rank[iv.left], rank[iv.right]) for iv in self.intervals]

    @cached_property
    def edges(self) -> list[tuple[int, int]]:
        ivs = self.intervals
        return [
            (i, j)
            for i in range(len(ivs))
            for j in range(i + 1, len(ivs))
            if overlaps(ivs[i], ivs[j])
        ]

    @cached_property
    def neighbors(self) -> list[list[int]]:
        nbrs: list[list[int]] = [[] for _ in self.intervals]
        for i, j in self.edges:
            nbrs[i].append(j)
            nbrs[j].append(i)
        return nbrs


def normalize(raw: Iterable[Sequence[int]]) -> IntervalSystem:
    """Map integer endpoint pairs onto ranks ``r / (2n + 1)``.

    Only the relative order of endpoints matters for overlaps, so any distinct
    integers are accepted.
    """
    pairs = [tuple(p) for p in raw]
    for p in pairs:
        if len(p) != 2:
            raise IntervalSystemError(f"interval {p!r} must have two endpoints")
        if p[0] >= p[1]:
            raise DegenerateInterval(f"interval {list(p)} has left >= right")
    values = [x for p in pairs for x in p]
    if len(set(values)) != len(values):
        dup = sorted(x for x in set(values) if values.count(x) > 1)
        raise DuplicateEndpoint(f"endpoints {dup} appear more than once")
    den = 2 * len(pairs) + 1
    rank = {x: r for r, x in enumerate(sorted(values), start=1)}
    return IntervalSystem(
        tuple(Interval(Fraction(rank[l], den), Fraction(rank[r], den)) for l, r in pairs)
    )


@dataclass(frozen=True)
class OverlapGraph:
    n: int
    adjacency: tuple[frozenset[int], ...]
    component_id: tuple[int, ...]

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.adjacency[i]

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in sorted(self.adjacency[i]) if i < j]

    @property
    def num_components(self) -> int:
        return len(set(self.component_id))


def connected_components(n: int, adjacency: Sequence[Iterable[int]]) -> list[int]:
    """Label vertices ``0..n-1`` by component, labels in order of first appearance."""
    label = [-1] * n
    current = 0
    for start in range(n):
        if label[start] >= 0:
            continue
        label[start] = current
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adjacency[v]:
                if label[w] < 0:
                    label[w] = current
                    stack.append(w)
        current += 1
    return label


def overlap_graph(system: IntervalSystem) -> OverlapGraph:
    adj = tuple(frozenset(nb) for nb in system.neighbors)
    return OverlapGraph(system.n, adj, tuple(connected_components(system.n, adj)))


@dataclass(frozen=True, order=True)
class Segment:
    """Open interval ``(lo, hi)``; ``lo`` may be 0 and ``hi`` may be 1."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if not self.lo < self.hi:
            raise ValueError(f"segment ({self.lo}, {self.hi}) is empty")

    def contains_point(self, x: Fraction) -> bool:
        return self.lo < x < self.hi

    def contains_interval(self, iv: Interval) -> bool:
        return self.lo < iv.left and iv.right < self.hi

    def __str__(self) -> str:
        return f"({self.lo}, {self.hi})"


def segments_of(points: Iterable[Fraction]) -> list[Segment]:
    """Split (0, 1) minus ``points`` into its ``len(points) + 1`` segments, left to right."""
    pts = sorted(points)
    if len(set(pts)) != len(pts):
        raise ValueError("points must be pairwise distinct")
    if pts and not (0 < pts[0] and pts[-1] < 1):
        raise ValueError("points must lie inside (0, 1)")
    bounds = [ZERO, *pts, ONE]
    return [Segment(bounds[i], bounds[i + 1]) for i in range(len(bounds) - 1)]


def segment_index(sorted_points: Sequence[Fraction], x: Fraction) -> int:
    """Index (into ``segments_of(sorted_points)``) of the segment holding ``x``.

    ``x`` must not be one of the points.
    """
    return bisect_left(sorted_points, x)
