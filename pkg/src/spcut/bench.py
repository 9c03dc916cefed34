"""Runtime of the reduction core on large random series-parallel instances."""

from __future__ import annotations

import statistics
import time

from .solver import Objective, guard, phase1, phase2
from .spgraph import build_from_script, random_sp_script

CSV_FIELDS = ("backend", "ops", "n", "m", "core_median_s", "guarded_median_s")


def make_instance(ops: int, seed: int = 0):
    return build_from_script(random_sp_script(seed + ops, ops, (1, 100)))


def time_core(g, labeling, backend: str, reps: int, guarded: bool = False) -> float:
    """Median wall time of Phase I plus the Phase II scan (guard optional)."""
    samples = []
    for _ in range(reps):
        t0 = time.perf_counter()
        log = phase1(g, labeling, Objective.MAX, backend=backend)
        if guarded:
            guard(log, backend=backend)
        phase2(log, guarded=guarded, backend=backend)
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def run_bench(sizes, reps: int = 5, backends=("cython", "python"), seed: int = 0) -> list[dict]:
    rows = []
    for ops in sizes:
        g, labeling = make_instance(ops, seed)
        for backend in backends:
            rows.append(
                {
                    "backend": backend,
                    "ops": ops,
                    "n": g.n,
                    "m": g.m,
                    "core_median_s": time_core(g, labeling, backend, reps),
                    "guarded_median_s": time_core(g, labeling, backend, reps, guarded=True),
                }
            )
    return rows


def doubling_ratios(times: list[float]) -> list[float]:
    return [b / a for a, b in zip(times, times[1:])]
