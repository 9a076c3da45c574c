"""Maximum-density segment of a run-length encoded uniform sequence in O(m).

A sequence of ``n`` unit-width elements is given as ``m`` runs
``(value, end)`` where ``end`` is the cumulative index of the run's last
element. Collapsing each run into one weighted element finds every optimum
whose start and end sit on run boundaries; the remaining optima can be slid
onto a boundary or onto an extreme of their feasible start window, and those
positions are enumerated directly, four per run.
"""
from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from itertools import accumulate

from .core import (Density, NoFeasibleSegment, ProblemInstance, Segment,
                   Solution, WorkCounters, better)
from .general import CandidateEvent, Source, solve


@dataclass(frozen=True)
class RunLengthSequence:
    """Runs ``(value, end)`` with strictly increasing ``end``; widths are all 1.

    ``a_scale`` records the factor applied to decimal values at ingestion.
    """

    runs: tuple
    a_scale: int = 1

    def __post_init__(self):
        runs = tuple((int(v), int(e)) for v, e in self.runs)
        if not runs:
            raise ValueError("empty run-length sequence")
        prev = 0
        for k, (_, end) in enumerate(runs, 1):
            if end <= prev:
                raise ValueError(
                    f"run {k}: end index {end} does not exceed previous end {prev}")
            prev = end
        object.__setattr__(self, "runs", runs)

    @classmethod
    def from_values(cls, values, a_scale=1) -> "RunLengthSequence":
        """Compress a uniform sequence, merging equal neighbours."""
        runs = []
        for idx, v in enumerate(values, 1):
            if runs and runs[-1][0] == v:
                runs[-1][1] = idx
            else:
                runs.append([v, idx])
        return cls(tuple(map(tuple, runs)), a_scale)

    @property
    def m(self) -> int:
        return len(self.runs)

    @property
    def n(self) -> int:
        return self.runs[-1][1]

    def expand(self) -> list:
        out = []
        prev = 0
        for v, end in self.runs:
            out.extend([v] * (end - prev))
            prev = end
        return out


class RunPrefix:
    """Value prefix sums at run boundaries; ``prefix(t)`` interpolates inside a run."""

    def __init__(self, rls: RunLengthSequence):
        self.values = [v for v, _ in rls.runs]
        self.ends = [0] + [e for _, e in rls.runs]
        lengths = [self.ends[k] - self.ends[k - 1] for k in range(1, len(self.ends))]
        self.hat = list(accumulate((ln * v for ln, v in zip(lengths, self.values)),
                                   initial=0))
        self.n = self.ends[-1]

    def run_of(self, t: int) -> int:
        """Run index ``k`` (1-based) with ``ends[k-1] < t <= ends[k]``."""
        if not 1 <= t <= self.n:
            raise IndexError(f"index {t} outside [1, {self.n}]")
        return bisect_left(self.ends, t)

    def prefix(self, t: int, k=None) -> int:
        """Sum of the first ``t`` values; ``k`` is the run holding ``t`` if known."""
        if t == 0:
            return 0
        if k is None:
            k = self.run_of(t)
        return self.hat[k - 1] + (t - self.ends[k - 1]) * self.values[k - 1]


def rl_density(rp: RunPrefix, i: int, j: int, hint_i=None, hint_j=None) -> Density:
    """Density of ``S(i, j)`` on the expanded sequence.

    ``hint_i`` / ``hint_j`` are the runs holding ``i - 1`` and ``j``; without
    them the runs are found by binary search.
    """
    if not 1 <= i <= j <= rp.n:
        raise IndexError(f"segment ({i}, {j}) outside [1, {rp.n}]")
    return Density(rp.prefix(j, hint_j) - rp.prefix(i - 1, hint_i), j - i + 1)


class _Cursor:
    """Forward-only run lookup for a nondecreasing sequence of positions."""

    __slots__ = ("rp", "k", "steps")

    def __init__(self, rp):
        self.rp = rp
        self.k = 1
        self.steps = 0

    def prefix(self, t):
        if t == 0:
            return 0
        ends = self.rp.ends
        k = self.k
        while ends[k] < t:
            k += 1
        self.steps += k - self.k
        self.k = k
        return self.rp.prefix(t, k)


def solve_sparse(rls: RunLengthSequence, w_min, w_max=None, on_event=None) -> Solution:
    """Densest segment with ``w_min <= length <= w_max`` in O(m).

    Bounds may be fractional; since every width is an integer they are
    rounded inward. The returned segment uses indices of the expanded sequence.
    """
    n = rls.n
    m = rls.m
    w_min = math.ceil(w_min)
    w_max = n if w_max is None else min(math.floor(w_max), n)
    if w_min < 1:
        raise ValueError(f"w_min must be at least 1, got {w_min}")
    if w_min > n or w_max < w_min:
        raise NoFeasibleSegment(f"no segment of length in [{w_min}, {w_max}] "
                                f"in a sequence of length {n}")
    rp = RunPrefix(rls)
    ends = rp.ends
    hat = rp.hat
    counters = WorkCounters()
    best = None

    def offer(i, j, num):
        nonlocal best
        den = j - i + 1
        if on_event is not None:
            on_event(CandidateEvent(Segment(i, j), Density(num, den), Source.SPARSE))
        if better(num, den, i, j, best):
            best = (num, den, i, j)

    # boundary-aligned optima: one weighted element per run
    lengths = [ends[k] - ends[k - 1] for k in range(1, m + 1)]
    collapsed = ProblemInstance([ln * v for ln, (v, _) in zip(lengths, rls.runs)],
                                lengths, w_min, w_max)
    try:
        sol = solve(collapsed)
    except NoFeasibleSegment:
        pass
    else:
        counters = sol.counters
        offer(ends[sol.i - 1] + 1, ends[sol.j], sol.density.num)

    lo_cur = _Cursor(rp)     # ell_{n_k} - 1
    hi_cur = _Cursor(rp)     # r_{n_k} - 1
    short_cur = _Cursor(rp)  # n_{k-1} + w_min
    long_cur = _Cursor(rp)   # min(n, n_{k-1} + w_max)
    for k in range(1, m + 1):
        end = ends[k]
        if end >= w_min:
            start0 = max(0, end - w_max)
            offer(start0 + 1, end, hat[k] - lo_cur.prefix(start0))
            start1 = end - w_min
            offer(start1 + 1, end, hat[k] - hi_cur.prefix(start1))
        begin = ends[k - 1]
        if begin + w_min <= n:
            short_end = begin + w_min
            offer(begin + 1, short_end, short_cur.prefix(short_end) - hat[k - 1])
            long_end = min(n, begin + w_max)
            offer(begin + 1, long_end, long_cur.prefix(long_end) - hat[k - 1])
    counters.iterations += m
    counters.cursor_steps += (lo_cur.steps + hi_cur.steps + short_cur.steps
                              + long_cur.steps)
    num, den, i, j = best
    return Solution(Segment(i, j), Density(num, den), counters)
