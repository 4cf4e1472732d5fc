"""Timing of the batched four-point reduction with and without Horn alignment."""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .kernels import horn_align_batch_compiled, solve_p4p_batch_compiled
from .synth import ScenarioKind, gen_batch


@dataclass
class BenchResult:
    batch_size: int
    repeats: int
    reduction_us: float
    horn_us: float

    @property
    def total_us(self) -> float:
        return self.reduction_us + self.horn_us

    @property
    def ratio(self) -> float:
        """(reduction + Horn) time over reduction time."""
        return self.total_us / self.reduction_us

    def summary(self) -> str:
        return (
            f"batch {self.batch_size} x {self.repeats} repeats\n"
            f"  reduction          {self.reduction_us:8.3f} us/config\n"
            f"  reduction + Horn   {self.total_us:8.3f} us/config\n"
            f"  ratio              {self.ratio:8.2f}"
        )


def warm_up() -> None:
    """Trigger (or load from cache) compilation so it stays out of the timings."""
    b = gen_batch(ScenarioKind.GENERAL, 0.0, 4, np.random.default_rng(0))
    sol = solve_p4p_batch_compiled(b.noisy, b.canvas)
    horn_align_batch_compiled(b.noisy, sol.points())


def run_bench(batch_size: int = 10000, repeats: int = 5, seed: int = 0) -> BenchResult:
    """Mean microseconds per configuration for each stage.

    The reduction covers invariant coordinates, quadratic coefficients, root
    selection and rescaling. The Horn stage aligns the given 3D points with
    the reconstructed ones.
    """
    if batch_size <= 0 or repeats <= 0:
        raise ValueError("batch_size and repeats must be positive")
    warm_up()
    b = gen_batch(ScenarioKind.GENERAL, 0.0, batch_size, np.random.default_rng(seed))
    world = np.ascontiguousarray(b.noisy)
    canvas = np.ascontiguousarray(b.canvas)
    red = horn = 0.0
    for _ in range(repeats):
        t0 = time.perf_counter()
        sol = solve_p4p_batch_compiled(world, canvas)
        t1 = time.perf_counter()
        horn_align_batch_compiled(world, sol.points())
        t2 = time.perf_counter()
        red += t1 - t0
        horn += t2 - t1
    scale = 1e6 / (batch_size * repeats)
    return BenchResult(batch_size, repeats, red * scale, horn * scale)
