"""Brute-force references and verifiers.

Nothing here relies on the circle structure: cliques and colourings are
searched on the plain overlap graph, and the P-degree is recounted straight
from its definition.  These are the independent sides of the differential
tests and the checks run by ``circlecolor verify``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence

from .intervals import IntervalSystem, Segment, connected_components, segments_of
from .pillars import PillarAssignmentState, check_pair

CLIQUE_CAP = 500
CHROMATIC_CAP = 16


class TooLarge(ValueError):
    pass


@dataclass(frozen=True)
class Check:
    name: str
    status: bool
    witness: Any = None


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status for c in self.checks)

    def add(self, name: str, status: bool, witness: Any = None) -> None:
        self.checks.append(Check(name, status, witness))

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.status]

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [{"name": c.name, "status": "pass" if c.status else "fail", "witness": c.witness} for c in self.checks],
        }


def _bit_adjacency(system: IntervalSystem) -> list[int]:
    adj = [0] * system.n
    for i, j in system.edges:
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return adj


def _greedy_color_bound(P: int, adj: list[int]) -> list[tuple[int, int]]:
    """Vertices of ``P`` with greedy colour numbers, ascending by colour."""
    out = []
    uncolored = P
    color = 0
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~adj[v] & ~low
            uncolored &= ~low
            out.append((v, color))
    return out


def clique_number_exact(system: IntervalSystem, cap: int = CLIQUE_CAP) -> int:
    """Maximum clique size of the overlap graph by branch and bound with colour bounds."""
    if system.n > cap:
        raise TooLarge(f"{system.n} intervals exceed the clique oracle cap of {cap}")
    if system.n == 0:
        return 0
    adj = _bit_adjacency(system)
    best = 0

    def expand(size: int, P: int) -> None:
        nonlocal best
        for v, bound in reversed(_greedy_color_bound(P, adj)):
            if size + bound <= best:
                return
            nxt = P & adj[v]
            if nxt:
                expand(size + 1, nxt)
            elif size + 1 > best:
                best = size + 1
            P &= ~(1 << v)

    expand(0, (1 << system.n) - 1)
    return best


def _k_colorable(n: int, adj: list[int], k: int) -> Optional[list[int]]:
    color = [0] * n

    def pick() -> int:
        best, best_key = -1, None
        for v in range(n):
            if color[v]:
                continue
            seen = {color[w] for w in range(n) if adj[v] >> w & 1 and color[w]}
            key = (len(seen), bin(adj[v]).count("1"))
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def go(done: int, used: int) -> bool:
        if done == n:
            return True
        v = pick()
        taken = {color[w] for w in range(n) if adj[v] >> w & 1}
        for c in range(1, min(used + 1, k) + 1):
            if c not in taken:
                color[v] = c
                if go(done + 1, max(used, c)):
                    return True
                color[v] = 0
        return False

    return color if go(0, 0) else None


def chromatic_number_exact(system: IntervalSystem, cap: int = CHROMATIC_CAP) -> int:
    """Exact chromatic number of the overlap graph, searching upward from the clique number."""
    if system.n > cap:
        raise TooLarge(f"{system.n} intervals exceed the chromatic oracle cap of {cap}")
    if system.n == 0:
        return 0
    adj = _bit_adjacency(system)
    k = max(1, clique_number_exact(system))
    while _k_colorable(system.n, adj, k) is None:
        k += 1
    return k


def verify_proper(system: IntervalSystem, colors: Sequence[int]) -> VerificationReport:
    report = VerificationReport()
    if len(colors) != system.n:
        report.add("proper", False, {"reason": f"{len(colors)} colours for {system.n} intervals"})
        return report
    bad = next(((i, j) for i, j in system.edges if colors[i] == colors[j]), None)
    report.add("proper", bad is None, None if bad is None else list(bad))
    return report


def verify_permutation_certificate(
    system: IntervalSystem, state: PillarAssignmentState, pillar_of: Sequence[Optional[int]], class_color: Sequence[int]
) -> VerificationReport:
    """Every component of every colour class sits on one pillar contained in all its intervals."""
    report = VerificationReport()
    if any(a is None for a in state.assignment):
        report.add("complete", False, [i for i, a in enumerate(state.assignment) if a is None][:10])
        return report
    mismatch = [i for i in range(system.n) if pillar_of[i] != state.assignment[i]]
    report.add("assignment_matches", not mismatch, mismatch[:10] or None)
    nbrs = system.neighbors
    witness = None
    for c in sorted(set(class_color)):
        members = [i for i in range(system.n) if class_color[i] == c]
        local = {v: t for t, v in enumerate(members)}
        sub = [[local[w] for w in nbrs[v] if w in local] for v in members]
        labels = connected_components(len(members), sub)
        comps: dict[int, list[int]] = {}
        for t, lab in enumerate(labels):
            comps.setdefault(lab, []).append(members[t])
        for comp in comps.values():
            ps = {state.assignment[i] for i in comp}
            if len(ps) != 1:
                witness = {"class": c, "component": comp, "pillars": sorted(ps)}
                break
            pos = state.pillars[ps.pop()].pos
            outside = [i for i in comp if not system.intervals[i].contains_point(pos)]
            if outside:
                witness = {"class": c, "component": comp, "pillar": str(pos), "misses": outside}
                break
        if witness:
            break
    report.add("permutation_certificate", witness is None, witness)
    return report


def p_degree_oracle(system: IntervalSystem, points: Iterable[Fraction], p1: Fraction, p2: Fraction) -> int:
    """P-degree by listing every candidate segment pair and searching for a witness."""
    P = sorted(set(points))
    check_pair(system, P, p1, p2)
    outer = [s for s in segments_of(P) if s.hi <= p1 or s.lo >= p2]
    cuts = sorted({*P, p1, p2} - {Fraction(0), Fraction(1)})
    inner = [s for s in segments_of(cuts) if p1 <= s.lo and s.hi <= p2]
    count = 0
    for s1 in outer:
        for s2 in inner:
            if any(_joins(iv.left, iv.right, s1, s2) or _joins(iv.right, iv.left, s1, s2) for iv in system.intervals):
                count += 1
    return count


def _joins(a: Fraction, b: Fraction, s1: Segment, s2: Segment) -> bool:
    return s1.lo < a < s1.hi and s2.lo < b < s2.hi


def verify_bounds(num_classes: int, num_final_colors: int, omega: int) -> VerificationReport:
    report = VerificationReport()
    if omega >= 2:
        report.add("classes_le_7omega", num_classes <= 7 * omega, {"classes": num_classes, "limit": 7 * omega})
        report.add(
            "colors_le_7omega2",
            num_final_colors <= 7 * omega * omega,
            {"colors": num_final_colors, "limit": 7 * omega * omega},
        )
    else:
        report.add("colors_le_1", num_final_colors <= 1, {"colors": num_final_colors})
    return report


def verify_run(system: IntervalSystem, state: PillarAssignmentState, coloring, omega: Optional[int] = None) -> VerificationReport:
    """Everything ``circlecolor verify`` checks on a finished colouring."""
    from .pillars import check_condition1

    report = verify_proper(system, coloring.final_color)
    report.extend(verify_permutation_certificate(system, state, coloring.pillar, coloring.class_color))
    if not report.passed:
        return report
    wrong_class = [i for i in range(system.n) if coloring.class_color[i] != state.pillars[state.assignment[i]].color]
    report.add("class_is_pillar_color", not wrong_class, wrong_class[:10] or None)
    violations = check_condition1(state)
    report.add("condition1", not violations, [vars(v) for v in violations[:5]] or None)
    if omega is None:
        omega = clique_number_exact(system)
    report.extend(verify_bounds(coloring.num_classes, coloring.num_final_colors, omega))
    return report
