"""Pillar assignments: ordered, coloured pillar sets and the degrees they induce."""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .intervals import ONE, ZERO, IntervalSystem, Segment, segment_index, segments_of


class IllegalPair(ValueError):
    pass


class IllegalWindow(ValueError):
    pass


class InvalidPillar(ValueError):
    pass


@dataclass(frozen=True)
class Pillar:
    pos: Fraction
    color: int
    order_key: int


@dataclass(frozen=True)
class Violation:
    """Two overlapping intervals sent to distinct pillars of one colour."""

    i: int
    j: int
    p1: int
    p2: int


@dataclass(frozen=True)
class PillarAssignmentState:
    """A pillar set with its order and colouring, plus the induced assignment.

    ``assignment[i]`` is the index (into ``pillars``) of the pillar interval
    ``i`` is assigned to, or ``None`` when the interval contains no pillar.
    Build states with :func:`make_state` so the assignment is consistent.
    """

    system: IntervalSystem
    pillars: tuple[Pillar, ...]
    assignment: tuple[Optional[int], ...]

    @cached_property
    def by_position(self) -> list[int]:
        return sorted(range(len(self.pillars)), key=lambda k: self.pillars[k].pos)

    @cached_property
    def sorted_positions(self) -> list[Fraction]:
        return [self.pillars[k].pos for k in self.by_position]

    @cached_property
    def segments(self) -> list[Segment]:
        return segments_of(self.sorted_positions)

    @property
    def covered(self) -> int:
        return sum(a is not None for a in self.assignment)

    @property
    def is_complete(self) -> bool:
        return all(a is not None for a in self.assignment)

    @property
    def colors(self) -> set[int]:
        return {p.color for p in self.pillars}

    def segment_of(self, x: Fraction) -> int:
        return segment_index(self.sorted_positions, x)


def validate_pillars(system: IntervalSystem, pillars: Sequence[Pillar]) -> None:
    positions = [p.pos for p in pillars]
    if len(set(positions)) != len(positions):
        raise InvalidPillar("pillar positions must be distinct")
    keys = [p.order_key for p in pillars]
    if len(set(keys)) != len(keys):
        raise InvalidPillar("order keys must be distinct")
    for p in pillars:
        if not 0 < p.pos < 1:
            raise InvalidPillar(f"pillar {p.pos} is not inside (0, 1)")
        if system.is_endpoint(p.pos):
            raise InvalidPillar(f"pillar {p.pos} is an interval endpoint")
        if p.color < 1:
            raise InvalidPillar(f"pillar colour {p.color} is not a positive integer")


def _assign_all(system: IntervalSystem, pillars: Sequence[Pillar]) -> list[Optional[int]]:
    order = sorted(range(len(pillars)), key=lambda k: pillars[k].pos)
    pos = [pillars[k].pos for k in order]
    out: list[Optional[int]] = []
    for iv in system.intervals:
        lo = bisect_right(pos, iv.left)
        hi = bisect_left(pos, iv.right)
        if lo >= hi:
            out.append(None)
        else:
            out.append(min((order[t] for t in range(lo, hi)), key=lambda k: pillars[k].order_key))
    return out


def make_state(system: IntervalSystem, pillars: Iterable[Pillar], validate: bool = True) -> PillarAssignmentState:
    pillars = tuple(pillars)
    if validate:
        validate_pillars(system, pillars)
    return PillarAssignmentState(system, pillars, tuple(_assign_all(system, pillars)))


def assign_interval(i: int, state: PillarAssignmentState) -> Optional[int]:
    """Index of the earliest (by order key) pillar inside interval ``i``, or None."""
    iv = state.system.intervals[i]
    best = None
    for k, p in enumerate(state.pillars):
        if iv.left < p.pos < iv.right and (best is None or p.order_key < state.pillars[best].order_key):
            best = k
    return best


def recompute_assignment(state: PillarAssignmentState) -> PillarAssignmentState:
    return PillarAssignmentState(
        state.system, state.pillars, tuple(_assign_all(state.system, state.pillars))
    )


def check_condition1(state: PillarAssignmentState, edges: Optional[Iterable[tuple[int, int]]] = None) -> list[Violation]:
    """Overlapping pairs assigned to distinct pillars that share a colour.

    ``edges`` restricts the check to the given overlapping pairs; by default
    every edge of the overlap graph is examined.
    """
    if edges is None:
        edges = state.system.edges
    pillars, assignment = state.pillars, state.assignment
    out = []
    for i, j in edges:
        a, b = assignment[i], assignment[j]
        if a is None or b is None or a == b:
            continue
        if pillars[a].color == pillars[b].color:
            out.append(Violation(i, j, a, b))
    return out


def check_pair(system: IntervalSystem, points: Sequence[Fraction], p1: Fraction, p2: Fraction) -> None:
    """Raise IllegalPair unless ``(p1, p2)`` is a legal argument for a P-degree.

    Either both ends are in ``points`` or the open window holds no point of it.
    The line ends 0 and 1 are accepted as window ends.
    """
    if not ZERO <= p1 < p2 <= ONE:
        raise IllegalPair(f"need 0 <= p1 < p2 <= 1, got ({p1}, {p2})")
    for x in (p1, p2):
        if system.is_endpoint(x):
            raise IllegalPair(f"{x} is an interval endpoint")
    pts = set(points)
    if p1 in pts and p2 in pts:
        return
    if any(p1 < x < p2 for x in pts):
        raise IllegalPair(f"({p1}, {p2}) crosses a pillar but its ends are not both pillars")


def p_degree(system: IntervalSystem, points: Iterable[Fraction], p1: Fraction, p2: Fraction) -> int:
    """Number of segment pairs {outside segment of P, inside segment of P + {p1, p2}}
    joined by at least one interval."""
    P = sorted(set(points))
    check_pair(system, P, p1, p2)
    inner = sorted((set(P) | {p1, p2}) - {ZERO, ONE})
    segs = segments_of(P)
    outside = [s.hi <= p1 or s.lo >= p2 for s in segs]
    pairs = set()
    for iv in system.intervals:
        for a, b in ((iv.left, iv.right), (iv.right, iv.left)):
            if p1 < a < p2:
                sb = segment_index(P, b)
                if outside[sb]:
                    pairs.add((sb, segment_index(inner, a)))
    return len(pairs)


def _window(window) -> tuple[Fraction, Fraction]:
    if isinstance(window, Segment):
        return window.lo, window.hi
    lo, hi = window
    return Fraction(lo), Fraction(hi)


def ordered_degree(state: PillarAssignmentState, window) -> int:
    """Number of distinct pillars that receive an interval with an end in ``window``.

    ``window`` is a :class:`Segment` or ``(lo, hi)`` pair lying inside one segment
    of the state's pillars.
    """
    lo, hi = _window(window)
    if not lo < hi:
        raise IllegalWindow(f"empty window ({lo}, {hi})")
    pos = state.sorted_positions
    if bisect_right(pos, lo) < bisect_left(pos, hi):
        raise IllegalWindow(f"window ({lo}, {hi}) contains a pillar")
    hit = set()
    for i, iv in enumerate(state.system.intervals):
        a = state.assignment[i]
        if a is not None and (lo < iv.left < hi or lo < iv.right < hi):
            hit.add(a)
    return len(hit)


def segment_degrees(state: PillarAssignmentState) -> list[set[int]]:
    """For each segment of the pillar set, the pillars fed by intervals ending there."""
    out: list[set[int]] = [set() for _ in range(len(state.pillars) + 1)]
    pos = state.sorted_positions
    for i, iv in enumerate(state.system.intervals):
        a = state.assignment[i]
        if a is not None:
            out[segment_index(pos, iv.left)].add(a)
            out[segment_index(pos, iv.right)].add(a)
    return out


def max_degree(state: PillarAssignmentState) -> int:
    return max(len(s) for s in segment_degrees(state))
