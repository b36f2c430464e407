"""Optimal colouring of pillar fibers and composition into a final colouring.

All intervals assigned to one pillar contain it, so two of them cross exactly
when the one with the smaller left end also has the smaller right end.  The
fiber is therefore a permutation graph: cliques are increasing runs of right
ends and proper colourings are covers by decreasing subsequences, which
patience sorting finds with the minimum number of piles.
"""

from __future__ import annotations

from bisect import bisect_right
from collections import defaultdict
from dataclasses import dataclass
from typing import Optional

from .intervals import IntervalSystem
from .pillars import PillarAssignmentState


class IntervalMissesPillar(ValueError):
    pass


class IncompleteAssignment(ValueError):
    pass


@dataclass(frozen=True)
class Fiber:
    pillar: int
    intervals: tuple[int, ...]


@dataclass(frozen=True)
class ClassColoring:
    pillar: tuple[Optional[int], ...]
    class_color: tuple[int, ...]
    fiber_color: tuple[int, ...]
    final_color: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.final_color)

    @property
    def num_classes(self) -> int:
        return len(set(self.class_color))

    @property
    def num_final_colors(self) -> int:
        return len(set(self.final_color))


def fibers(state: PillarAssignmentState) -> list[Fiber]:
    """Group assigned intervals by pillar, in pillar-index order."""
    groups: dict[int, list[int]] = defaultdict(list)
    for i, a in enumerate(state.assignment):
        if a is not None:
            groups[a].append(i)
    return [Fiber(p, tuple(groups[p])) for p in sorted(groups)]


def _by_left(f: Fiber, system: IntervalSystem) -> list[int]:
    return sorted(f.intervals, key=lambda i: system.intervals[i].left)


def fiber_permutation(f: Fiber, system: IntervalSystem, pillar_pos=None) -> list[int]:
    """Right-end ranks (1-based) of the fiber's intervals listed by left end.

    With ``pillar_pos`` given, every interval is checked to contain it.
    """
    if pillar_pos is not None:
        for i in f.intervals:
            if not system.intervals[i].contains_point(pillar_pos):
                raise IntervalMissesPillar(f"interval {i} does not contain pillar {pillar_pos}")
    order = _by_left(f, system)
    rights = sorted(system.intervals[i].right for i in order)
    rank = {x: r for r, x in enumerate(rights, start=1)}
    return [rank[system.intervals[i].right] for i in order]


def patience_piles(perm: list[int]) -> list[int]:
    """Pile (1-based) of each element: leftmost pile whose top exceeds it, else a new pile.

    Pile tops stay increasing from left to right, so the leftmost eligible
    pile is found by bisection.
    """
    tops: list[int] = []
    out = []
    for x in perm:
        k = bisect_right(tops, x)
        if k == len(tops):
            tops.append(x)
        else:
            tops[k] = x
        out.append(k + 1)
    return out


def patience_color(f: Fiber, system: IntervalSystem) -> dict[int, int]:
    """Fiber colour of each interval in ``f`` (interval index -> colour)."""
    order = _by_left(f, system)
    return dict(zip(order, patience_piles(fiber_permutation(f, system))))


def compose(state: PillarAssignmentState, fiber_list: Optional[list[Fiber]] = None) -> ClassColoring:
    if not state.is_complete:
        missing = [i for i, a in enumerate(state.assignment) if a is None]
        raise IncompleteAssignment(f"intervals {missing[:10]} are not assigned")
    if fiber_list is None:
        fiber_list = fibers(state)
    system = state.system
    fiber_color = [0] * system.n
    for f in fiber_list:
        pos = state.pillars[f.pillar].pos
        for i in f.intervals:
            if not system.intervals[i].contains_point(pos):
                raise IntervalMissesPillar(f"interval {i} does not contain pillar {pos}")
        for i, c in patience_color(f, system).items():
            fiber_color[i] = c
    class_color = [state.pillars[a].color for a in state.assignment]
    pairs = sorted(set(zip(class_color, fiber_color)))
    flat = {pair: k for k, pair in enumerate(pairs, start=1)}
    return ClassColoring(
        pillar=tuple(state.assignment),
        class_color=tuple(class_color),
        fiber_color=tuple(fiber_color),
        final_color=tuple(flat[pair] for pair in zip(class_color, fiber_color)),
    )
