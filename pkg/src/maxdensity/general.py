"""Linear-time maximum-density segment for arbitrary width bounds.

The deque solver from :mod:`maxdensity.lmain` is extended in two places. When
the smallest feasible start ``ell_j`` passes the deque head, the head is
advanced past it instead of rebuilding the deque. If that jump leaves the
previous best start behind, the starts in between are covered by a variant
scan over the window ending at the new head. Successive variant scans cover
disjoint ranges, so total work stays linear.

:func:`solve` runs on a complete instance; :class:`OnlineSolver` consumes one
element at a time and reaches the same optimum.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .bounds import compute_bounds, split_chunks
from .core import (Density, InvalidWidth, NoFeasibleSegment, ProblemInstance,
                   Segment, Solution, WorkCounters, better)
from .lmain import PhiDeque
from .variant import VariantTask, variant_solve

_COMPACT_MIN = 4096


class InternalInvariantError(AssertionError):
    """A condition guaranteed by the algorithm's correctness argument failed."""


class Source(str, enum.Enum):
    DEQUE = "deque"
    VARIANT = "variant"
    SPARSE = "sparse"


@dataclass(frozen=True)
class CandidateEvent:
    segment: Segment
    density: Density
    source: Source


def _event(i, j, A, W, base, source):
    return CandidateEvent(Segment(i, j),
                          Density(A[j - base] - A[i - 1 - base], W[j - base] - W[i - 1 - base]),
                          source)


def solve(inst: ProblemInstance, on_event=None, on_variant=None) -> Solution:
    """Densest feasible segment of ``inst`` in O(n).

    ``on_event(CandidateEvent)`` sees every candidate the algorithm emits.
    ``on_variant(r, y0, ell, y1)`` is called for each variant scan.
    Raises NoFeasibleSegment when nothing fits the width bounds.
    """
    ps = inst.prefix
    w_min = inst.w_min
    w_max = inst.w_max
    bounds = compute_bounds(ps, w_min, w_max)
    counters = WorkCounters()
    best = None
    for lo, hi in split_chunks(inst.w, w_max):
        best = _solve_chunk(ps, bounds, lo, hi, w_min, w_max, best, counters,
                            on_event, on_variant)
    if best is None:
        raise NoFeasibleSegment("no segment satisfies the width bounds")
    num, den, i, j = best
    return Solution(Segment(i, j), Density(num, den), counters)


def _solve_chunk(ps, bounds, lo, hi, w_min, w_max, best, counters,
                 on_event, on_variant):
    A = ps.A
    W = ps.W
    ell = bounds.ell
    r = bounds.r
    start = lo
    base_w = W[lo - 1]
    while start <= hi and W[start] - base_w < w_min:
        start += 1
    if start > hi:
        return best

    dq = PhiDeque()
    update = dq.update
    skip = dq.skip
    lbest = dq.lbest
    i_prev = lo
    r_prev = lo - 1
    for j in range(start, hi + 1):
        rj = r[j]
        update(r_prev + 1, rj, A, W)
        r_prev = rj
        lj = ell[j]
        skip(lj)
        if dq.p > dq.q:
            # no feasible start for j; nothing below ell_j is useful later
            i_prev = lj
            continue
        head = dq.head
        if i_prev < head:
            if W[j] - W[head - 1] < w_min:
                raise InternalInvariantError(
                    f"variant precondition failed: w({head}, {j}) < w_min")
            res = variant_solve(ps, head, j, w_min, w_max, bounds)
            counters.variant_calls += 1
            counters.init_steps += res.init_steps
            counters.vbest_steps += res.vbest_steps
            counters.variant_ends += len(res.outputs)
            if on_variant is not None:
                on_variant(head, j, res.ell, res.y1)
            for x, y in res.outputs:
                num = A[y] - A[x - 1]
                den = W[y] - W[x - 1]
                if on_event is not None:
                    on_event(_event(x, y, A, W, 0, Source.VARIANT))
                if better(num, den, x, y, best):
                    best = (num, den, x, y)
        i = lbest(j, A, W)
        num = A[j] - A[i - 1]
        den = W[j] - W[i - 1]
        if on_event is not None:
            on_event(_event(i, j, A, W, 0, Source.DEQUE))
        if better(num, den, i, j, best):
            best = (num, den, i, j)
        i_prev = i
    counters.iterations += hi - start + 1
    dq.counters_into(counters)
    return best


class OnlineSolver:
    """Streaming form of :func:`solve`.

    Feed elements with :meth:`push`; each call returns the candidates that
    became available. :meth:`finalize` returns the optimum, which equals the
    batch result. Only data from the smallest feasible start onward is
    retained, so memory follows the width window rather than the input length.
    """

    def __init__(self, w_min, w_max=None):
        if w_max is None:
            w_max = float("inf")
        if not 0 < w_min <= w_max:
            raise ValueError(f"need 0 < w_min <= w_max, got {w_min}, {w_max}")
        self.w_min = w_min
        self.w_max = w_max
        self.n = 0
        self.counters = WorkCounters()
        self.peak_span = 0
        self._A = [0]
        self._W = [0]
        self._base = 0
        self._best = None
        self._dq = PhiDeque()
        self._new_chunk(1)

    def _new_chunk(self, lo):
        self._chunk_lo = lo
        self._lo = lo          # smallest start with w(lo, j) <= w_max
        self._hi = lo - 1      # largest start with w(hi, j) >= w_min
        self._r_prev = lo - 1
        self._i_prev = lo
        self._task = None
        self._dq.reset()

    def push(self, a, w=1) -> list:
        """Ingest the next element ``(a, w)``."""
        if w <= 0:
            raise InvalidWidth(self.n + 1, w)
        j = self.n = self.n + 1
        A = self._A
        W = self._W
        A.append(A[-1] + a)
        W.append(W[-1] + w)
        if w > self.w_max:
            if self._task is not None:
                self._finish_task()
            self._new_chunk(j + 1)
            self._compact(j)
            return []

        base = self._base
        w_min = self.w_min
        w_max = self.w_max
        Wj = W[j - base]
        lo = self._lo
        while Wj - W[lo - 1 - base] > w_max:
            lo += 1
        self._lo = lo
        hi = self._hi
        while hi < j and Wj - W[hi - base] >= w_min:
            hi += 1
        self._hi = hi
        if hi < self._chunk_lo:
            return []

        c = self.counters
        c.iterations += 1
        events = []
        task = self._task
        if task is not None:
            if Wj - W[task.r - 1 - base] > w_max:
                self._finish_task()
            else:
                self._emit(task.step(j, lo, A, W, base), j, Source.VARIANT, events)

        dq = self._dq
        dq.update(self._r_prev + 1, hi, A, W, base)
        self._r_prev = hi
        dq.skip(lo)
        if dq.p > dq.q:
            self._i_prev = lo
        else:
            head = dq.head
            if self._i_prev < head:
                if self._task is not None:
                    raise InternalInvariantError(
                        f"variant scans overlap at end index {j}")
                if Wj - W[head - 1 - base] < w_min:
                    raise InternalInvariantError(
                        f"variant precondition failed: w({head}, {j}) < w_min")
                task = self._task = VariantTask(head, j, lo, A, W, base)
                c.variant_calls += 1
                self._emit(task.step(j, lo, A, W, base), j, Source.VARIANT, events)
            i = dq.lbest(j, A, W, base)
            self._emit(i, j, Source.DEQUE, events)
            self._i_prev = i
        self._compact(lo - 1)
        return events

    def _emit(self, i, j, source, events):
        base = self._base
        A = self._A
        W = self._W
        num = A[j - base] - A[i - 1 - base]
        den = W[j - base] - W[i - 1 - base]
        if source is Source.VARIANT:
            self.counters.variant_ends += 1
        if better(num, den, i, j, self._best):
            self._best = (num, den, i, j)
        events.append(CandidateEvent(Segment(i, j), Density(num, den), source))

    def _finish_task(self):
        task = self._task
        self.counters.init_steps += task.init_steps
        self.counters.vbest_steps += task.vbest_steps
        self._task = None

    def _compact(self, keep_from):
        """Drop prefix entries below index ``keep_from``."""
        span = len(self._A)
        if span > self.peak_span:
            self.peak_span = span
        dead = keep_from - self._base
        if dead >= _COMPACT_MIN and 2 * dead >= span:
            del self._A[:dead]
            del self._W[:dead]
            self._base = keep_from
        self._dq.compact()

    def feed(self, pairs) -> None:
        for a, w in pairs:
            self.push(a, w)

    def finalize(self) -> Solution:
        """Optimum over everything pushed so far."""
        if self._task is not None:
            self._finish_task()
        if self._best is None:
            raise NoFeasibleSegment("no segment satisfies the width bounds")
        c = WorkCounters(**{k: v for k, v in self.counters.__dict__.items()})
        self._dq.counters_into(c)
        num, den, i, j = self._best
        return Solution(Segment(i, j), Density(num, den), c)
