"""JSON formats: ``interval-system/v1``, ``pillar-assignment/v1`` and ``coloring/v1``."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional

from .intervals import IntervalSystem, normalize
from .perm_coloring import ClassColoring
from .pillars import Pillar, PillarAssignmentState, make_state

SYSTEM_FORMAT = "interval-system/v1"
ASSIGNMENT_FORMAT = "pillar-assignment/v1"
COLORING_FORMAT = "coloring/v1"


class FormatError(ValueError):
    pass


def _int(x: Any, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise FormatError(f"{what} must be an integer, got {x!r}")
    return x


def _expect_format(obj: Any, fmt: str) -> None:
    if not isinstance(obj, dict) or obj.get("format") != fmt:
        got = obj.get("format") if isinstance(obj, dict) else type(obj).__name__
        raise FormatError(f"expected format {fmt!r}, got {got!r}")


def system_to_json(system: IntervalSystem) -> dict:
    return {"format": SYSTEM_FORMAT, "intervals": [list(p) for p in system.ranks()]}


def system_from_json(obj: Any) -> IntervalSystem:
    _expect_format(obj, SYSTEM_FORMAT)
    raw = obj.get("intervals")
    if not isinstance(raw, list):
        raise FormatError("'intervals' must be a list of [l, r] pairs")
    pairs = []
    for k, p in enumerate(raw):
        if not isinstance(p, list) or len(p) != 2:
            raise FormatError(f"interval {k} must be a pair [l, r]")
        pairs.append((_int(p[0], f"interval {k} left"), _int(p[1], f"interval {k} right")))
    return normalize(pairs)


def _pos_to_json(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


def _pos_from_json(obj: Any) -> Fraction:
    if not isinstance(obj, dict):
        raise FormatError(f"position must be {{num, den}}, got {obj!r}")
    den = _int(obj.get("den"), "den")
    if den <= 0:
        raise FormatError("den must be positive")
    return Fraction(_int(obj.get("num"), "num"), den)


def assignment_to_json(state: PillarAssignmentState) -> dict:
    return {
        "format": ASSIGNMENT_FORMAT,
        "pillars": [
            {"pos": _pos_to_json(p.pos), "color": p.color, "order_key": p.order_key}
            for p in state.pillars
        ],
        "assignment": list(state.assignment),
    }


def assignment_from_json(system: IntervalSystem, obj: Any) -> tuple[PillarAssignmentState, list]:
    """State rebuilt from the stored pillars, plus the assignment as recorded in the file.

    The two assignments differ only if the file was edited by hand.
    """
    _expect_format(obj, ASSIGNMENT_FORMAT)
    pillars = []
    for k, p in enumerate(obj.get("pillars", [])):
        if not isinstance(p, dict):
            raise FormatError(f"pillar {k} must be an object")
        pillars.append(Pillar(_pos_from_json(p.get("pos")), _int(p.get("color"), "color"), _int(p.get("order_key"), "order_key")))
    recorded = obj.get("assignment")
    if not isinstance(recorded, list) or len(recorded) != system.n:
        raise FormatError("'assignment' must list one pillar index (or null) per interval")
    try:
        state = make_state(system, pillars)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    return state, recorded


def coloring_to_json(
    system: IntervalSystem,
    state: PillarAssignmentState,
    coloring: ClassColoring,
    summary: Optional[dict] = None,
) -> dict:
    stats = {
        "n": system.n,
        "num_pillars": len(state.pillars),
        "num_classes": coloring.num_classes,
        "num_final_colors": coloring.num_final_colors,
    }
    stats.update(summary or {})
    return {
        "format": COLORING_FORMAT,
        "intervals": [
            {
                "index": i,
                "pillar": coloring.pillar[i],
                "class_color": coloring.class_color[i],
                "fiber_color": coloring.fiber_color[i],
                "final_color": coloring.final_color[i],
            }
            for i in range(coloring.n)
        ],
        "pillar_assignment": assignment_to_json(state),
        "summary": stats,
    }


def coloring_from_json(system: IntervalSystem, obj: Any) -> tuple[ClassColoring, PillarAssignmentState, list]:
    _expect_format(obj, COLORING_FORMAT)
    rows = obj.get("intervals")
    if not isinstance(rows, list) or len(rows) != system.n:
        raise FormatError(f"coloring lists {len(rows) if isinstance(rows, list) else 'no'} intervals, system has {system.n}")
    rows = sorted(rows, key=lambda r: _int(r.get("index"), "index"))
    if [r["index"] for r in rows] != list(range(system.n)):
        raise FormatError("interval indices must be 0..n-1 exactly once")
    coloring = ClassColoring(
        pillar=tuple(None if r.get("pillar") is None else _int(r["pillar"], "pillar") for r in rows),
        class_color=tuple(_int(r.get("class_color"), "class_color") for r in rows),
        fiber_color=tuple(_int(r.get("fiber_color"), "fiber_color") for r in rows),
        final_color=tuple(_int(r.get("final_color"), "final_color") for r in rows),
    )
    state, recorded = assignment_from_json(system, obj.get("pillar_assignment"))
    return coloring, state, recorded


def read_json(path: str | Path) -> Any:
    with open(path) as fh:
        return json.load(fh)


def write_json(obj: Any, path: Optional[str | Path]) -> None:
    text = json.dumps(obj, indent=None, separators=(",", ":")) + "\n"
    if path is None or str(path) == "-":
        import sys

        sys.stdout.write(text)
    else:
        Path(path).write_text(text)
