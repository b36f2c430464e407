"""Batch runs: generate, colour, verify and summarise many random instances."""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from .augment import AugmentConfig, color_system
from .generator import SplitMix64, derive_seed, gen_uniform_matching
from .oracles import clique_number_exact, verify_run


def trace_violations(records: list[dict]) -> list[str]:
    """Broken step invariants in a list of trace records (see ``AugmentContext.to_record``)."""
    out = []
    for t, r in enumerate(records):
        if r["max_degree"] > r["budget"]:
            out.append(f"step {t}: max degree {r['max_degree']} > budget {r['budget']}")
        if set(r["fresh_colors"]) & set(r["P1_colors"]):
            out.append(f"step {t}: fresh colours {r['fresh_colors']} reuse P1 colours {r['P1_colors']}")
        if r["covered_after"] <= r["covered_before"]:
            out.append(f"step {t}: covered count {r['covered_before']} -> {r['covered_after']}")
        if (r["quota"] - r["omega"]) * r["quota_pillars"] >= r["omega"] * r["budget"]:
            out.append(f"step {t}: {r['quota_pillars']} quota pillars break the counting bound")
        if t and r["covered_before"] != records[t - 1]["covered_after"]:
            out.append(f"step {t}: covered count does not continue from step {t - 1}")
    return out


def run_instance(n: int, seed: int, keep_trace: bool = False) -> dict:
    start = time.perf_counter()
    system = gen_uniform_matching(n, seed)
    omega = clique_number_exact(system)
    trace: list = []
    config = AugmentConfig.for_omega(omega) if omega >= 2 else None
    state, coloring = color_system(system, config=config, trace=trace, omega=omega)
    report = verify_run(system, state, coloring, omega)
    records = [ctx.to_record(config) for ctx in trace]
    out = {
        "n": n,
        "seed": seed,
        "omega": omega,
        "pillars": len(state.pillars),
        "pillar_colors": len(state.colors),
        "classes": coloring.num_classes,
        "final_colors": coloring.num_final_colors,
        "steps": len(trace),
        "verified": report.passed,
        "failures": [c.name for c in report.failures()],
        "trace_violations": trace_violations(records),
        "seconds": round(time.perf_counter() - start, 4),
    }
    if keep_trace:
        out["trace"] = records
    return out


def _run(args: tuple) -> dict:
    return run_instance(*args)


def corpus_specs(count: int, nmin: int, nmax: int, seed: int, min_omega: int = 0) -> list[tuple[int, int]]:
    """``(n, seed)`` for ``count`` uniform-matching instances whose clique number is at least ``min_omega``."""
    if nmin > nmax:
        raise ValueError("nmin must not exceed nmax")
    out = []
    index = 0
    while len(out) < count:
        s = derive_seed(seed, index)
        n = nmin + SplitMix64(s).below(nmax - nmin + 1)
        index += 1
        if min_omega and clique_number_exact(gen_uniform_matching(n, s)) < min_omega:
            continue
        out.append((n, s))
    return out


def run_corpus(
    count: int,
    nmax: int,
    seed: int,
    nmin: int = 5,
    workers: Optional[int] = None,
    keep_trace: bool = False,
    min_omega: int = 0,
) -> dict:
    start = time.perf_counter()
    specs = corpus_specs(count, nmin, nmax, seed, min_omega)
    jobs = [(n, s, keep_trace) for n, s in specs]
    if workers is None:
        workers = min(8, os.cpu_count() or 1)
    if workers <= 1 or len(jobs) < 2:
        results = [_run(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    multi = [r for r in results if r["omega"] >= 2]
    summary = {
        "count": len(results),
        "seed": seed,
        "nmin": nmin,
        "nmax": nmax,
        "all_verified": all(r["verified"] for r in results),
        "trace_violations": sum(len(r["trace_violations"]) for r in results),
        "max_classes_over_7omega": max((r["classes"] / (7 * r["omega"]) for r in multi), default=0.0),
        "max_colors_over_7omega2": max((r["final_colors"] / (7 * r["omega"] ** 2) for r in multi), default=0.0),
        "total_steps": sum(r["steps"] for r in results),
        "seconds": round(time.perf_counter() - start, 3),
    }
    return {"summary": summary, "instances": results}
