"""Timing of the two construction phases."""

from __future__ import annotations

import gc
import statistics
import time
from typing import NamedTuple

from .generate import generate_points
from .partition import equitable_partition
from .tour import build_tour, validate_tour_input


class Timing(NamedTuple):
    n: int
    t_partition: float
    t_construct: float


def _timed(fn, *args):
    # Like timeit: collect first, then keep the collector out of the measurement.
    gc.collect()
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        t0 = time.perf_counter()
        out = fn(*args)
        return out, time.perf_counter() - t0
    finally:
        if was_enabled:
            gc.enable()


def time_once(points) -> Timing:
    pts = validate_tour_input(points)
    part, t_partition = _timed(equitable_partition, pts)
    _, t_construct = _timed(build_tour, part)
    return Timing(len(pts), t_partition, t_construct)


def bench_size(n: int, repeats: int = 5, distribution: str = "uniform", seed: int = 0) -> Timing:
    """Median partition and construction times over ``repeats`` instances."""
    runs = [time_once(generate_points(n, distribution, seed + r)) for r in range(repeats)]
    return Timing(
        n,
        statistics.median(t.t_partition for t in runs),
        statistics.median(t.t_construct for t in runs),
    )
