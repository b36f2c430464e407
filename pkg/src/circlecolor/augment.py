"""Grow a pillar assignment until every interval is covered.

Each step takes the first uncovered interval ``I`` and the segment ``S`` of
the current pillar set that holds it.  Inside ``S`` we drop "quota" pillars so
that every stretch between them reaches at most ``Q`` segments of the pillars
``P1`` fed from ``S``, add one pillar inside ``I``, and order and colour the
new pillars with :func:`build_balanced` using colours absent from ``P1``.  New
pillars come after all old ones, so every earlier assignment survives.
"""

from __future__ import annotations

import logging
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .balanced import BalancedOrderResult, build_balanced, colors_needed
from .intervals import IntervalSystem, Segment, midpoint, segment_index
from .pillars import (
    Pillar,
    PillarAssignmentState,
    check_condition1,
    make_state,
    max_degree,
    recompute_assignment,
    segment_degrees,
)

log = logging.getLogger(__name__)

PROFILES = ("default", "omega2", "custom")


class AugmentError(RuntimeError):
    pass


class PaletteExhausted(AugmentError):
    pass


class BudgetViolated(AugmentError):
    pass


class BoundViolated(AugmentError):
    pass


def ceil_log2(x: int) -> int:
    if x < 1:
        raise ValueError("ceil_log2 needs a positive integer")
    return (x - 1).bit_length()


def default_constants(omega: int) -> tuple[int, int, int]:
    """``(quota, budget, palette_size)`` of the default profile."""
    slack = ceil_log2(omega * omega) if omega >= 1 else 0
    return omega + 8, omega + slack + 8, omega + 2 * slack + 8


def max_quota_pillars(omega: int, quota: int, budget: int) -> Optional[int]:
    """Largest count ``t`` of quota pillars with ``(quota - omega) * t < omega * budget``.

    None when ``quota <= omega`` (the count is then unbounded).
    """
    if quota <= omega:
        return None
    return max(0, (omega * budget - 1) // (quota - omega))


def max_fresh_colors(omega: int, quota: int, budget: int) -> Optional[int]:
    t = max_quota_pillars(omega, quota, budget)
    return None if t is None else colors_needed(t + 1)


@dataclass(frozen=True)
class AugmentConfig:
    omega: int
    quota: int
    budget: int
    palette_size: int
    profile: str = "default"

    @classmethod
    def for_omega(
        cls,
        omega: int,
        profile: str = "default",
        quota: Optional[int] = None,
        budget: Optional[int] = None,
        palette: Optional[int] = None,
    ) -> "AugmentConfig":
        if profile == "default":
            q, b, p = default_constants(omega)
        elif profile == "omega2":
            if omega != 2:
                raise ValueError(f"the omega2 profile needs omega == 2, got {omega}")
            q, b, p = 10, 12, 14
        elif profile == "custom":
            if None in (quota, budget, palette):
                raise ValueError("the custom profile needs quota, budget and palette")
            q, b, p = quota, budget, palette
        else:
            raise ValueError(f"unknown profile {profile!r}")
        if profile != "custom" and any(v is not None for v in (quota, budget, palette)):
            raise ValueError("quota/budget/palette overrides need profile='custom'")
        return cls(omega, q, b, p, profile)

    def closure_problems(self) -> list[str]:
        """Reasons the constants may not support a full run; empty when they do."""
        out = []
        k_max = max_fresh_colors(self.omega, self.quota, self.budget)
        if k_max is None:
            return [f"quota {self.quota} must exceed omega {self.omega}"]
        if self.budget < self.quota + k_max:
            out.append(f"budget {self.budget} < quota {self.quota} + k_max {k_max}")
        if self.palette_size < self.budget + k_max:
            out.append(f"palette {self.palette_size} < budget {self.budget} + k_max {k_max}")
        if self.omega >= 2 and self.palette_size > 7 * self.omega:
            out.append(f"palette {self.palette_size} > 7 * omega = {7 * self.omega}")
        return out


@dataclass(frozen=True)
class AugmentContext:
    S: Segment
    I: int
    P1: frozenset[int]
    p1_colors: frozenset[int]
    quota_pillars: tuple[Fraction, ...]
    star: Fraction
    balanced: BalancedOrderResult
    fresh_colors: tuple[int, ...]
    covered_before: int
    covered_after: int = 0
    max_degree_after: int = 0

    @property
    def pstar_size(self) -> int:
        return len(self.quota_pillars) + 1

    def to_record(self, config: Optional[AugmentConfig] = None) -> dict:
        rec = {
            "S": [str(self.S.lo), str(self.S.hi)],
            "I": self.I,
            "P1": len(self.P1),
            "P1_colors": sorted(self.p1_colors),
            "quota_pillars": len(self.quota_pillars),
            "Pstar": self.pstar_size,
            "k": self.balanced.k_used,
            "fresh_colors": list(self.fresh_colors),
            "covered_before": self.covered_before,
            "covered_after": self.covered_after,
            "max_degree": self.max_degree_after,
        }
        if config is not None:
            rec.update(omega=config.omega, quota=config.quota, budget=config.budget)
        return rec


def find_uncovered(state: PillarAssignmentState) -> Optional[tuple[int, Segment]]:
    """First unassigned interval and the segment of the pillars holding it; None when done."""
    for i, a in enumerate(state.assignment):
        if a is None:
            iv = state.system.intervals[i]
            return i, state.segments[state.segment_of(iv.left)]
    return None


def _endpoints_in(system: IntervalSystem, S: Segment) -> list[tuple[Fraction, int]]:
    pos = system.endpoint_positions
    return system.endpoints[bisect_right(pos, S.lo) : bisect_left(pos, S.hi)]


def compute_P1(state: PillarAssignmentState, S: Segment) -> frozenset[int]:
    """Pillars receiving some interval with an end in ``S``."""
    return frozenset(
        state.assignment[i]
        for _, i in _endpoints_in(state.system, S)
        if state.assignment[i] is not None
    )


def greedy_quota_pillars(
    system: IntervalSystem, p1_positions: Sequence[Fraction], S: Segment, quota: int
) -> list[Fraction]:
    """Cut ``S`` left to right into stretches that each reach ``quota`` segments of P1.

    A stretch "reaches" a segment of ``p1_positions`` other than the one
    containing ``S`` when some interval has one end in the stretch and the
    other end in that segment.  A pillar goes into the endpoint gap right after
    the endpoint that brings the running count to ``quota``.  If the stretch
    after the last cut would reach nothing, that cut is dropped, so the final
    stretch always reaches at least one segment whenever any cut is made.
    """
    if quota < 1:
        raise ValueError("quota must be positive")
    P1 = sorted(p1_positions)
    home = segment_index(P1, midpoint(S.lo, S.hi))
    cuts: list[Fraction] = []
    reached: set[int] = set()
    for x, i in _endpoints_in(system, S):
        iv = system.intervals[i]
        other = iv.right if x == iv.left else iv.left
        seg = segment_index(P1, other)
        if seg == home:
            continue
        reached.add(seg)
        if len(reached) == quota:
            cuts.append(midpoint(x, min(system.next_endpoint_after(x), S.hi)))
            reached = set()
    if cuts and not reached:
        cuts.pop()
    return cuts


def place_star(system: IntervalSystem, interval: int, S: Segment, avoid: Sequence[Fraction] = ()) -> Fraction:
    """A pillar inside ``interval`` on the endpoint gap covered by most intervals lying in ``S``.

    Ties go to the leftmost gap.  The pillar sits at the gap midpoint, or
    halfway to the first ``avoid`` point when one lies in the gap.
    """
    target = system.intervals[interval]
    pts = _endpoints_in(system, S)
    depth = 0
    best, best_depth = None, -1
    for t, (x, i) in enumerate(pts):
        if x >= target.right:
            break
        iv = system.intervals[i]
        if S.lo < iv.left and iv.right < S.hi:
            depth += 1 if x == iv.left else -1
        if x >= target.left and depth > best_depth:
            best, best_depth = (x, pts[t + 1][0] if t + 1 < len(pts) else S.hi), depth
    lo, hi = best
    for q in avoid:
        if lo < q < hi:
            hi = q
    return midpoint(lo, hi)


def augment_step(
    state: PillarAssignmentState,
    config: AugmentConfig,
    trace: Optional[list] = None,
    paranoid: bool = False,
) -> PillarAssignmentState:
    """Cover at least one more interval while keeping condition (1) and the budget.

    ``trace`` collects one :class:`AugmentContext` per step.  ``paranoid``
    re-derives the whole assignment from scratch and checks every overlap pair;
    otherwise only the newly assigned intervals are examined.
    """
    found = find_uncovered(state)
    if found is None:
        raise ValueError("every interval is already covered")
    I, S = found
    system = state.system
    pillars = state.pillars

    P1 = compute_P1(state, S)
    p1_colors = frozenset(pillars[k].color for k in P1)
    quota = greedy_quota_pillars(system, [pillars[k].pos for k in P1], S, config.quota)
    star = place_star(system, I, S, quota)
    pstar = sorted([*quota, star])
    k = colors_needed(len(pstar))
    fresh = [c for c in range(1, config.palette_size + 1) if c not in p1_colors][:k]
    if len(fresh) < k:
        raise PaletteExhausted(
            f"need {k} colours outside the {len(p1_colors)} used by P1, palette has {config.palette_size}"
        )
    balanced = build_balanced(pstar, fresh)

    offset = max((p.order_key for p in pillars), default=-1) + 1
    new = [Pillar(p.pos, p.color, p.order_key + offset) for p in balanced.ordered_pillars]
    merged = pillars + tuple(new)

    # An uncovered interval holds no old pillar, so only the new ones can claim it.
    new_pos = [p.pos for p in new]
    assignment = list(state.assignment)
    fresh_assigned = []
    for i, a in enumerate(assignment):
        if a is not None:
            continue
        iv = system.intervals[i]
        if not (S.lo < iv.left and iv.right < S.hi):
            continue
        inside = [t for t, x in enumerate(new_pos) if iv.left < x < iv.right]
        if inside:
            assignment[i] = len(pillars) + min(inside, key=lambda t: new[t].order_key)
            fresh_assigned.append(i)
    after = PillarAssignmentState(system, merged, tuple(assignment))

    if paranoid:
        ref = recompute_assignment(make_state(system, merged))
        if ref.assignment != after.assignment:
            raise AugmentError("incremental assignment disagrees with full recomputation")
        violations = check_condition1(after)
    else:
        nbrs = system.neighbors
        violations = check_condition1(after, ((i, j) for i in fresh_assigned for j in nbrs[i]))
    if violations:
        raise AugmentError(f"condition (1) broken after augmenting: {violations[0]}")
    if assignment[I] is None:
        raise AugmentError(f"interval {I} still uncovered after augmenting")

    deg = max_degree(after)
    ctx = AugmentContext(
        S=S,
        I=I,
        P1=P1,
        p1_colors=p1_colors,
        quota_pillars=tuple(quota),
        star=star,
        balanced=balanced,
        fresh_colors=tuple(fresh),
        covered_before=state.covered,
        covered_after=after.covered,
        max_degree_after=deg,
    )
    if trace is not None:
        trace.append(ctx)
    if deg > config.budget:
        raise BudgetViolated(f"max degree {deg} exceeds budget {config.budget} after step on {S}")
    return after


def cover_edgeless(system: IntervalSystem) -> PillarAssignmentState:
    """Complete assignment with every pillar coloured 1, for systems without overlaps."""
    state = make_state(system, ())
    while (found := find_uncovered(state)) is not None:
        I, S = found
        pillar = Pillar(place_star(system, I, S), 1, len(state.pillars))
        state = make_state(system, state.pillars + (pillar,), validate=False)
    return state


def complete_assignment(
    system: IntervalSystem,
    config: AugmentConfig,
    trace: Optional[list] = None,
    paranoid: bool = False,
) -> PillarAssignmentState:
    """Run augmentation steps from the empty pillar set until the assignment is complete."""
    state = make_state(system, ())
    steps = 0
    while not state.is_complete:
        state = augment_step(state, config, trace, paranoid)
        steps += 1
    log.debug("covered %d intervals with %d pillars in %d steps", system.n, len(state.pillars), steps)
    return state


def check_final_state(state: PillarAssignmentState, config: AugmentConfig) -> None:
    if not state.is_complete:
        raise AugmentError("assignment is not complete")
    violations = check_condition1(state)
    if violations:
        raise AugmentError(f"condition (1) broken: {violations[0]}")
    deg = max(len(s) for s in segment_degrees(state))
    if deg > config.budget:
        raise BudgetViolated(f"max degree {deg} exceeds budget {config.budget}")
    ncol = len(state.colors)
    if ncol > config.palette_size:
        raise BoundViolated(f"{ncol} pillar colours exceed palette size {config.palette_size}")
    if config.profile != "custom" and config.omega >= 2 and ncol > 7 * config.omega:
        raise BoundViolated(f"{ncol} pillar colours exceed 7 * omega = {7 * config.omega}")


def color_system(
    system: IntervalSystem,
    config: Optional[AugmentConfig] = None,
    trace: Optional[list] = None,
    omega: Optional[int] = None,
    paranoid: bool = False,
):
    """Complete pillar assignment plus final colouring of ``system``.

    Returns ``(state, coloring)``.  The clique number comes from ``config``,
    then ``omega``, then the exact clique oracle.  Systems without overlaps
    get a single colour class and one final colour.
    """
    from .oracles import clique_number_exact
    from .perm_coloring import compose

    if config is not None:
        omega = config.omega
    elif omega is None:
        omega = clique_number_exact(system)
    if omega <= 1:
        if system.edges:
            raise ValueError("omega <= 1 but the system has overlapping intervals")
        state = cover_edgeless(system)
        return state, compose(state)
    if config is None:
        config = AugmentConfig.for_omega(omega)
    state = complete_assignment(system, config, trace, paranoid)
    check_final_state(state, config)
    coloring = compose(state)
    if coloring.num_final_colors > 7 * omega * omega:
        raise BoundViolated(f"{coloring.num_final_colors} final colours exceed 7 * omega^2")
    return state, coloring
