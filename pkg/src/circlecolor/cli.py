"""``circlecolor`` command line.

Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import formats
from .augment import PROFILES, AugmentConfig, AugmentError, color_system
from .corpus import run_corpus
from .generator import MODELS, generate
from .intervals import overlap_graph
from .oracles import chromatic_number_exact, clique_number_exact, verify_run
from .pillars import p_degree
from .svg import chord_diagram

log = logging.getLogger("circlecolor")


class UsageError(Exception):
    pass


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a fraction: {text!r}") from exc


def _fraction_list(text: str) -> list[Fraction]:
    return [_fraction(t) for t in text.split(",") if t.strip()]


def _load_system(path: str):
    return formats.system_from_json(formats.read_json(path))


def _dump(obj, path: Optional[str]) -> None:
    formats.write_json(obj, path)


def cmd_gen(args) -> int:
    system = generate(args.model, args.n, args.seed)
    _dump(formats.system_to_json(system), args.output)
    return 0


def cmd_color(args) -> int:
    system = _load_system(args.input)
    omega = clique_number_exact(system, cap=args.clique_cap)
    config = None
    if omega >= 2:
        config = AugmentConfig.for_omega(
            omega, args.profile, quota=args.quota, budget=args.budget, palette=args.palette
        )
        for problem in config.closure_problems():
            log.warning("profile %s: %s", config.profile, problem)
    trace: list = []
    state, coloring = color_system(system, config=config, trace=trace, omega=omega)
    report = verify_run(system, state, coloring, omega)
    if args.trace is not None:
        lines = "".join(json.dumps(ctx.to_record(config)) + "\n" for ctx in trace)
        if args.trace == "-":
            sys.stderr.write(lines)
        else:
            Path(args.trace).write_text(lines)
    if not report.passed:
        print(json.dumps(report.to_dict()), file=sys.stderr)
        return 1
    summary = {"omega": omega, "steps": len(trace), "pillar_colors": len(state.colors)}
    if config is not None:
        summary.update(profile=config.profile, quota=config.quota, budget=config.budget, palette=config.palette_size)
    _dump(formats.coloring_to_json(system, state, coloring, summary), args.output)
    return 0


def cmd_verify(args) -> int:
    system = _load_system(args.input)
    coloring, state, recorded = formats.coloring_from_json(system, formats.read_json(args.coloring))
    omega = clique_number_exact(system, cap=args.clique_cap)
    report = verify_run(system, state, coloring, omega)
    stale = [i for i in range(system.n) if recorded[i] != state.assignment[i]]
    report.add("recorded_assignment", not stale, stale[:10] or None)
    print(json.dumps(report.to_dict(), indent=2 if args.pretty else None))
    return 0 if report.passed else 1


def cmd_oracle(args) -> int:
    system = _load_system(args.input)
    if args.which == "clique":
        out = {"omega": clique_number_exact(system, cap=args.cap or 500)}
    elif args.which == "chromatic":
        out = {"chi": chromatic_number_exact(system, cap=args.cap or 16)}
    else:
        if args.p1 is None or args.p2 is None:
            raise UsageError("pdegree needs --p1 and --p2")
        out = {"p_degree": p_degree(system, args.pillars, args.p1, args.p2)}
    print(json.dumps(out))
    return 0


def cmd_stats(args) -> int:
    system = _load_system(args.input)
    graph = overlap_graph(system)
    print(
        json.dumps(
            {
                "n": system.n,
                "omega": clique_number_exact(system, cap=args.clique_cap),
                "edges": len(system.edges),
                "components": graph.num_components,
            }
        )
    )
    return 0


def cmd_export(args) -> int:
    if not args.svg:
        raise UsageError("export currently supports --svg only")
    system = _load_system(args.input)
    colors = None
    pillars: Sequence[Fraction] = ()
    if args.coloring:
        coloring, state, _ = formats.coloring_from_json(system, formats.read_json(args.coloring))
        colors = coloring.final_color
        pillars = state.sorted_positions
    Path(args.output).write_text(chord_diagram(system, colors, pillars, title=args.title or ""))
    return 0


def cmd_corpus(args) -> int:
    result = run_corpus(
        args.count,
        args.nmax,
        args.seed,
        nmin=args.nmin,
        workers=args.workers,
        keep_trace=args.trace,
        min_omega=args.min_omega,
    )
    _dump(result if args.full else result["summary"], args.output)
    s = result["summary"]
    return 0 if s["all_verified"] and not s["trace_violations"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="circlecolor", description="Colour circle graphs given as interval systems.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate an interval-system/v1 instance")
    p.add_argument("--model", choices=MODELS, default="uniform_matching")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("color", help="colour an instance, writing coloring/v1")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--profile", choices=PROFILES, default="default")
    p.add_argument("--quota", type=int)
    p.add_argument("--budget", type=int)
    p.add_argument("--palette", type=int)
    p.add_argument("--trace", nargs="?", const="-", help="write one JSON line per step (default: stderr)")
    p.add_argument("--clique-cap", type=int, default=500)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a coloring/v1 file against its instance")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-c", "--coloring", required=True)
    p.add_argument("--clique-cap", type=int, default=500)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exact clique number, chromatic number or P-degree")
    p.add_argument("which", choices=("clique", "chromatic", "pdegree"))
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--cap", type=int)
    p.add_argument("--pillars", type=_fraction_list, default=[], help="comma-separated fractions, e.g. 3/14,9/14")
    p.add_argument("--p1", type=_fraction)
    p.add_argument("--p2", type=_fraction)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("stats", help="size, clique number, edges and components")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--clique-cap", type=int, default=500)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("export", help="draw a chord diagram")
    p.add_argument("--svg", action="store_true")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-c", "--coloring")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--title")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("corpus", help="generate, colour and verify a batch of random instances")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--nmin", type=int, default=5)
    p.add_argument("--nmax", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--min-omega", type=int, default=0)
    p.add_argument("--workers", type=int)
    p.add_argument("--trace", action="store_true", help="keep per-step trace records")
    p.add_argument("--full", action="store_true", help="include per-instance results")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (OSError, ValueError, UsageError) as exc:
        print(f"circlecolor: error: {exc}", file=sys.stderr)
        return 2
    except AugmentError as exc:
        print(f"circlecolor: construction failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
