"""Synthetic instance families and instrumented timing runs."""
from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .core import ProblemInstance
from .general import solve

DEFAULT_SIZES = (10**4, 10**5, 10**6)


def uniform_instance(n, w_min=50, w_max=200, seed=0) -> ProblemInstance:
    """Unit widths, values uniform in [-9, 9]."""
    rng = np.random.default_rng(seed)
    return ProblemInstance(rng.integers(-9, 10, n).tolist(), None, w_min, w_max)


def alternating_instance(n, w_min=50, w_max=200, seed=0) -> ProblemInstance:
    """Widths alternate between 1 and ``w_max``; every wide element fills a segment alone."""
    rng = np.random.default_rng(seed)
    widths = [1 if k % 2 == 0 else w_max for k in range(n)]
    return ProblemInstance(rng.integers(-9, 10, n).tolist(), widths, w_min, w_max)


FAMILIES = {"uniform": uniform_instance, "alternating": alternating_instance}


@dataclass
class BenchRow:
    family: str
    n: int
    seconds: float
    counters: dict

    @property
    def work(self) -> int:
        return self.counters["total"]

    @property
    def per_element(self) -> float:
        return self.work / self.n


def measure(family, n, w_min=50, w_max=200, seed=0) -> BenchRow:
    inst = FAMILIES[family](n, w_min, w_max, seed)
    t0 = time.perf_counter()
    sol = solve(inst)
    elapsed = time.perf_counter() - t0
    return BenchRow(family, n, elapsed, sol.counters.as_dict())


def doubling_ratios(family, sizes, w_min=50, w_max=200, seed=0) -> list:
    """``(n, W(2n) / W(n))`` for each size, ``W`` being total instrumented work."""
    out = []
    for n in sizes:
        small = measure(family, n, w_min, w_max, seed)
        large = measure(family, 2 * n, w_min, w_max, seed)
        out.append((n, large.work / small.work))
    return out
