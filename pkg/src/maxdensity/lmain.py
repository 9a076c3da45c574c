"""Linear-time solver for an ineffective upper width bound.

The solver keeps a deque of start indices ``phi[p..q]`` such that every entry
after the head is one past the longest minimum-density prefix of the
segment starting at its predecessor and ending just before the newest
candidate start. Given that chain, the best start for the current end index is
found by walking the head forward, and every walk step or tail pop shrinks
``q - p``. Pushes are the only growth, one per start index, so the whole run
is O(n).
"""
from __future__ import annotations

from .bounds import compute_bounds
from .core import (Density, NoFeasibleSegment, ProblemInstance, Segment,
                   Solution, WorkCounters, better)

# Dead entries kept before a compaction of the physical arrays.
_COMPACT_MIN = 4096


class PhiDeque:
    """Start-index deque with logical cursors ``p`` (head) and ``q`` (tail).

    Logical positions start at 1 and only grow, so ``phi[t]`` keeps meaning the
    same slot for the life of the deque even after dead slots below ``p`` are
    released by :meth:`compact`. ``q - p >= -1`` always holds; ``q == p - 1``
    is the empty window.

    Prefix arrays are passed as ``(A, W, base)`` where ``A[k - base]`` is the
    prefix sum through element ``k``.
    """

    __slots__ = ("phi", "off", "p", "q", "pushes", "pops", "lbest_steps",
                 "skip_steps")

    def __init__(self):
        self.phi = []
        self.off = 1
        self.p = 1
        self.q = 0
        self.pushes = 0
        self.pops = 0
        self.lbest_steps = 0
        self.skip_steps = 0

    def __len__(self):
        return self.q - self.p + 1

    def __getitem__(self, t):
        if not self.p <= t <= self.q:
            raise IndexError(f"position {t} outside live window [{self.p}, {self.q}]")
        return self.phi[t - self.off]

    @property
    def head(self) -> int:
        return self.phi[self.p - self.off]

    def window(self) -> list:
        """Live entries ``phi[p..q]``."""
        return self.phi[self.p - self.off:self.q - self.off + 1]

    def update(self, r_lo: int, r_hi: int, A, W, base: int = 0) -> None:
        """Append candidate starts ``r_lo..r_hi``, popping the tail as needed.

        Before appending ``r`` the tail is dropped while the segment from the
        second-to-last entry to just before the last entry is no denser than
        the one from the same start to ``r - 1``.
        """
        phi = self.phi
        off = self.off
        p = self.p
        q = self.q
        pops = 0
        for r in range(r_lo, r_hi + 1):
            Ar = A[r - 1 - base]
            Wr = W[r - 1 - base]
            while p < q:
                x = phi[q - 1 - off] - 1 - base
                y = phi[q - off] - 1 - base
                Ax = A[x]
                Wx = W[x]
                if (A[y] - Ax) * (Wr - Wx) >= (Ar - Ax) * (W[y] - Wx):
                    q -= 1
                    pops += 1
                else:
                    break
            q += 1
            k = q - off
            if k == len(phi):
                phi.append(r)
            else:
                phi[k] = r
        self.pushes += max(0, r_hi - r_lo + 1)
        self.pops += pops
        self.q = q

    def skip(self, ell: int) -> None:
        """Advance the head past entries smaller than ``ell``.

        May empty the window (``p == q + 1``) when every entry is below ``ell``.
        """
        phi = self.phi
        off = self.off
        p = self.p
        q = self.q
        start = p
        while p <= q and phi[p - off] < ell:
            p += 1
        self.skip_steps += p - start
        self.p = p

    def lbest(self, j: int, A, W, base: int = 0) -> int:
        """Largest start in the chain maximizing the density of ``S(i, j)``."""
        phi = self.phi
        off = self.off
        p = self.p
        q = self.q
        start = p
        Aj = A[j - base]
        Wj = W[j - base]
        while p < q:
            x = phi[p - off] - 1 - base
            y = phi[p + 1 - off] - 1 - base
            Ax = A[x]
            Wx = W[x]
            if (A[y] - Ax) * (Wj - Wx) <= (Aj - Ax) * (W[y] - Wx):
                p += 1
            else:
                break
        self.lbest_steps += p - start
        self.p = p
        return phi[p - off]

    def reset(self) -> None:
        """Empty the deque, keeping the counters."""
        self.phi.clear()
        self.off = self.p = self.q + 1

    def compact(self) -> None:
        dead = self.p - self.off
        if dead >= _COMPACT_MIN and 2 * dead >= len(self.phi):
            del self.phi[:dead]
            self.off = self.p

    def counters_into(self, c: WorkCounters) -> None:
        c.pushes += self.pushes
        c.pops += self.pops
        c.lbest_steps += self.lbest_steps
        c.skip_steps += self.skip_steps


def update(state: PhiDeque, j: int, bounds, ps) -> None:
    """Extend the deque with the new candidate starts of end index ``j``."""
    r_prev = bounds.r[j - 1] if j > bounds.j0 else 0
    state.update(r_prev + 1, bounds.r[j], ps.A, ps.W)


def lbest(state: PhiDeque, j: int, ps) -> int:
    return state.lbest(j, ps.A, ps.W)


def solve_ineffective(inst: ProblemInstance, on_event=None, on_update=None) -> Solution:
    """Maximum-density segment when ``w_max`` is at least the total width.

    ``on_event(i, j)`` receives the start chosen for each end index;
    ``on_update(j, deque)`` is called right after the deque absorbs the
    starts for ``j`` (a test hook). Only the overall maximum is guaranteed
    optimal, not each per-``j`` start.
    """
    ps = inst.prefix
    if not inst.is_ineffective():
        raise ValueError("w_max constrains the sequence; use general.solve")
    bounds = compute_bounds(ps, inst.w_min, inst.w_max)
    A = ps.A
    W = ps.W
    r = bounds.r
    dq = PhiDeque()
    best = None
    r_prev = 0
    for j in range(bounds.j0, ps.n + 1):
        dq.update(r_prev + 1, r[j], A, W)
        r_prev = r[j]
        if on_update is not None:
            on_update(j, dq)
        i = dq.lbest(j, A, W)
        num = A[j] - A[i - 1]
        den = W[j] - W[i - 1]
        if on_event is not None:
            on_event(i, j)
        if better(num, den, i, j, best):
            best = (num, den, i, j)
    if best is None:
        raise NoFeasibleSegment("no segment satisfies the width bounds")
    counters = WorkCounters(iterations=ps.n - bounds.j0 + 1)
    dq.counters_into(counters)
    num, den, i, j = best
    return Solution(Segment(i, j), Density(num, den), counters)
