"""Best segment with starts in ``[ell, r]`` and ends in ``[y0, y1]``.

The right start boundary ``r`` is fixed, so the longest minimum-density
prefix ``phi(i, r - 1)`` of every candidate start can be tabulated once in
O(r - ell + 1) (the ``psi`` table) and each end index then needs only a
forward walk over that table. The start chosen for successive ends never
decreases, which bounds the walks by ``(r - ell) + (y1 - y0 + 1)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field


class PsiTable:
    """``psi[i] = phi(i, hi)`` for ``lo <= i <= hi``; empty when ``lo > hi``."""

    __slots__ = ("lo", "hi", "table", "steps")

    def __init__(self, lo, hi, table, steps=0):
        self.lo = lo
        self.hi = hi
        self.table = table
        self.steps = steps

    def __getitem__(self, i):
        if not self.lo <= i <= self.hi:
            raise IndexError(f"index {i} outside [{self.lo}, {self.hi}]")
        return self.table[i - self.lo]

    def __len__(self):
        return len(self.table)

    def as_dict(self) -> dict:
        return {self.lo + k: v for k, v in enumerate(self.table)}


def _build_psi(A, W, base, lo, hi) -> PsiTable:
    if lo > hi:
        return PsiTable(lo, hi, [])
    table = [0] * (hi - lo + 1)
    table[-1] = hi
    steps = 0
    for s in range(hi - 1, lo - 1, -1):
        t = s
        As = A[s - 1 - base]
        Ws = W[s - 1 - base]
        while t < hi:
            u = table[t + 1 - lo]
            At = A[t - base]
            Wt = W[t - base]
            Au = A[u - base]
            Wu = W[u - base]
            # d(s, t) >= d(s, u): the longer prefix is no denser, so take it
            if (At - As) * (Wu - Ws) >= (Au - As) * (Wt - Ws):
                t = u
                steps += 1
            else:
                break
        table[s - lo] = t
    return PsiTable(lo, hi, table, steps)


def init(ps, ell: int, r: int) -> PsiTable:
    """Table of ``phi(i, r)`` for every ``i`` in ``[ell, r]``, built right to left."""
    return _build_psi(ps.A, ps.W, 0, ell, r)


def _vbest(psi: PsiTable, x: int, r: int, y: int, A, W, base=0):
    table = psi.table
    lo = psi.lo
    Ay = A[y - base]
    Wy = W[y - base]
    steps = 0
    while x < r:
        u = table[x - lo]
        Ax = A[x - 1 - base]
        Wx = W[x - 1 - base]
        # d(x, psi[x]) <= d(x, y): skip past the low-density prefix
        if (A[u - base] - Ax) * (Wy - Wx) <= (Ay - Ax) * (W[u - base] - Wx):
            x = u + 1
            steps += 1
        else:
            break
    return x, steps


def vbest(psi: PsiTable, ell: int, r: int, y: int, ps) -> int:
    """Largest start in ``[ell, r]`` maximizing the density of ``S(x, y)``.

    ``psi`` must come from ``init(ps, lo, r - 1)`` with ``lo <= ell``. With
    ``ell == r`` the answer is ``r`` and the table is not consulted.
    """
    return _vbest(psi, ell, r, y, ps.A, ps.W)[0]


class VariantTask:
    """Resumable variant scan: feed end indices ``y0, y0 + 1, ...`` in order.

    The table covers starts ``[ell, r - 1]``, all of which precede ``y0`` and
    so are available when the task is created. Only the end-index loop needs
    later data, which lets an online driver suspend it between elements.
    """

    __slots__ = ("r", "y0", "ell", "psi", "x", "y", "vbest_steps")

    def __init__(self, r, y0, ell, A, W, base=0):
        self.r = r
        self.y0 = y0
        self.ell = ell
        self.psi = _build_psi(A, W, base, ell, r - 1)
        self.x = ell
        self.y = y0
        self.vbest_steps = 0

    @property
    def init_steps(self) -> int:
        return self.psi.steps

    def step(self, y, ell_y, A, W, base=0) -> int:
        """Best start for end ``y`` (must equal the task's next end)."""
        if y != self.y:
            raise ValueError(f"expected end index {self.y}, got {y}")
        x = self.x if self.x >= ell_y else ell_y
        x, steps = _vbest(self.psi, x, self.r, y, A, W, base)
        self.vbest_steps += steps
        self.x = x
        self.y = y + 1
        return x


@dataclass
class VariantResult:
    ell: int
    y1: int
    outputs: list = field(default_factory=list)   # (x_y, y) pairs
    init_steps: int = 0
    vbest_steps: int = 0


def variant_solve(ps, r: int, y0: int, w_min, w_max, bounds) -> VariantResult:
    """Run the variant scan for right start boundary ``r`` and first end ``y0``.

    Requires ``w_min <= w(r, y0) <= w_max``. ``ell`` is the smallest feasible
    start for ``y0`` and ``y1`` the last end that keeps ``S(r, y1)`` within
    ``w_max``. The densest emitted ``(x, y)`` solves the restricted problem.
    """
    A = ps.A
    W = ps.W
    width = W[y0] - W[r - 1]
    if not w_min <= width <= w_max:
        raise ValueError(f"w({r}, {y0}) = {width} outside [{w_min}, {w_max}]")
    ell = bounds.ell[y0]
    n = ps.n
    y1 = y0
    while y1 < n and W[y1 + 1] - W[r - 1] <= w_max:
        y1 += 1
    task = VariantTask(r, y0, ell, A, W)
    ell_arr = bounds.ell
    outputs = [(task.step(y, ell_arr[y], A, W), y) for y in range(y0, y1 + 1)]
    return VariantResult(ell, y1, outputs, task.init_steps, task.vbest_steps)
