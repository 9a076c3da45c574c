"""Brute-force reference implementations.

Deliberately naive: every routine scans its whole candidate set and compares
densities with ``fractions.Fraction`` so it shares no arithmetic with the
fast solvers it checks.
"""
from __future__ import annotations

from fractions import Fraction

from .core import (Density, NoFeasibleSegment, PrefixSums, ProblemInstance,
                   Segment, Solution)


def _frac(ps: PrefixSums, i: int, j: int) -> Fraction:
    return Fraction(ps.A[j] - ps.A[i - 1], ps.W[j] - ps.W[i - 1])


def brute_force_solve(inst: ProblemInstance, max_width=None) -> Solution:
    """Enumerate every feasible segment and return a densest one.

    Ties go to the largest ``j``, then the largest ``i``. ``max_width``
    further restricts the enumeration (used to check width-limited claims).
    """
    ps = inst.prefix
    W = ps.W
    hi_width = inst.w_max if max_width is None else min(inst.w_max, max_width)
    best = None
    best_seg = None
    for j in range(1, ps.n + 1):
        for i in range(1, j + 1):
            width = W[j] - W[i - 1]
            if width < inst.w_min or width > hi_width:
                continue
            d = _frac(ps, i, j)
            if best is None or d >= best:
                best = d
                best_seg = (i, j)
    if best_seg is None:
        raise NoFeasibleSegment("no segment satisfies the width bounds")
    i, j = best_seg
    return Solution(Segment(i, j), Density(ps.A[j] - ps.A[i - 1], W[j] - W[i - 1]))


def feasible_segments(inst: ProblemInstance):
    """Yield every feasible ``(i, j)``."""
    W = inst.prefix.W
    for j in range(1, inst.n + 1):
        for i in range(1, j + 1):
            if inst.w_min <= W[j] - W[i - 1] <= inst.w_max:
                yield i, j


def brute_force_phi(ps: PrefixSums, x: int, y: int) -> int:
    """Largest ``z`` in ``[x, y]`` minimizing the density of ``S(x, z)``."""
    if x > y:
        raise ValueError(f"empty range [{x}, {y}]")
    best_z = x
    best = _frac(ps, x, x)
    for z in range(x + 1, y + 1):
        d = _frac(ps, x, z)
        if d <= best:
            best, best_z = d, z
    return best_z


def brute_force_best(ps: PrefixSums, ell: int, r: int, j: int) -> int:
    """Largest ``i`` in ``[ell, r]`` maximizing the density of ``S(i, j)``."""
    if not ell <= r <= j:
        raise ValueError(f"need ell <= r <= j, got {ell}, {r}, {j}")
    best_i = ell
    best = _frac(ps, ell, j)
    for i in range(ell + 1, r + 1):
        d = _frac(ps, i, j)
        if d >= best:
            best, best_i = d, i
    return best_i


def phi_chain(ps: PrefixSums, x: int, r: int) -> list:
    """``[x, phi(x, r-1)+1, phi(phi(x, r-1)+1, r-1)+1, ..., r]``.

    The start sequence visited by a best-start scan whose candidates end at
    ``r``; the linear solver's deque must hold exactly this list.
    """
    chain = [x]
    while chain[-1] < r:
        chain.append(brute_force_phi(ps, chain[-1], r - 1) + 1)
    return chain


def brute_force_variant(ps: PrefixSums, ell: int, r: int, y0: int, y1: int,
                        w_min, w_max):
    """Best density over starts in ``[ell, r]``, ends in ``[y0, y1]``, feasible widths.

    Returns a Fraction, or None when the restricted set is empty.
    """
    best = None
    for y in range(y0, y1 + 1):
        for x in range(ell, min(r, y) + 1):
            if w_min <= ps.W[y] - ps.W[x - 1] <= w_max:
                d = _frac(ps, x, y)
                if best is None or d > best:
                    best = d
    return best
