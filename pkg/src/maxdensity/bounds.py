"""Feasible start windows for every end index.

For an end index ``j`` the feasible starts form a contiguous range
``[ell[j], r[j]]``: ``ell[j]`` is the smallest ``i`` with ``w(i, j) <= w_max``
and ``r[j]`` the largest with ``w(i, j) >= w_min``. The window is empty when
``ell[j] > r[j]``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import NoFeasibleSegment, PrefixSums


@dataclass(frozen=True)
class FeasibleBounds:
    """Start windows for ``j0 <= j <= n``.

    ``ell`` and ``r`` are indexed by ``j`` (entries below ``j0`` are unused
    and hold 0).
    """

    j0: int
    ell: list
    r: list

    def is_empty(self, j: int) -> bool:
        return self.ell[j] > self.r[j]

    def window(self, j: int):
        """``(ell_j, r_j)`` or None if no start is feasible for ``j``."""
        if j < self.j0 or self.ell[j] > self.r[j]:
            return None
        return self.ell[j], self.r[j]


def compute_bounds(ps: PrefixSums, w_min, w_max) -> FeasibleBounds:
    """Two-pointer sweep computing ``j0`` and every ``[ell_j, r_j]``.

    Both cursors only move forward, so the sweep is O(n).
    """
    W = ps.W
    n = ps.n
    if n == 0 or W[n] < w_min:
        raise NoFeasibleSegment(
            f"total width {W[n] if n else 0} is below w_min={w_min}")
    ell = [0] * (n + 1)
    r = [0] * (n + 1)
    lo = 1
    hi = 0
    j0 = 0
    for j in range(1, n + 1):
        wj = W[j]
        # smallest i with W[j] - W[i-1] <= w_max (j + 1 if w_j itself is too wide)
        while lo <= j and wj - W[lo - 1] > w_max:
            lo += 1
        # largest i with W[j] - W[i-1] >= w_min
        while hi < j and wj - W[hi] >= w_min:
            hi += 1
        if hi == 0:
            continue
        if not j0:
            j0 = j
        ell[j] = lo
        r[j] = hi
    return FeasibleBounds(j0, ell, r)


def split_chunks(seq, w_max) -> list:
    """Maximal 1-based ranges ``(lo, hi)`` of consecutive elements with ``w <= w_max``.

    ``seq`` holds widths or ``NumberPair``-like items. Elements wider than
    ``w_max`` lie in no feasible segment and separate chunks.
    """
    chunks = []
    start = None
    idx = 0
    for idx, item in enumerate(seq, 1):
        w = getattr(item, "w", item)
        if w > w_max:
            if start is not None:
                chunks.append((start, idx - 1))
                start = None
        elif start is None:
            start = idx
    if start is not None:
        chunks.append((start, idx))
    return chunks
