"""Sequence representation, prefix sums and exact density ordering.

All indices in the public API are 1-based and inclusive. Values and widths
are integers (decimal inputs are scaled to integers by :mod:`maxdensity.ingest`),
so every density comparison is an exact cross-multiplication.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import total_ordering
from itertools import accumulate
from typing import Iterable, Sequence

# Declared element range for scaled inputs. Keeps every prefix sum within
# 2**62 so the cross product of two density differences fits in 128 bits.
MAX_ABS_VALUE = 2**31
MAX_WIDTH = 2**31
MAX_LENGTH = 2**31
MAX_ABS_PREFIX = 2**62
_CROSS_BITS = 127


class NoFeasibleSegment(ValueError):
    """Raised when no segment satisfies the width bounds."""


class InvalidWidth(ValueError):
    def __init__(self, index: int, width):
        super().__init__(f"element {index}: width must be positive, got {width}")
        self.index = index


class DensityOverflow(ArithmeticError):
    """Cross product left the 128-bit range: inputs outside the declared range."""


@dataclass(frozen=True)
class NumberPair:
    a: int
    w: int = 1

    def __post_init__(self):
        if self.w <= 0:
            raise ValueError(f"width must be positive, got {self.w}")


@dataclass(frozen=True)
class Segment:
    i: int
    j: int

    def __post_init__(self):
        if not 1 <= self.i <= self.j:
            raise ValueError(f"invalid segment ({self.i}, {self.j})")


@total_ordering
@dataclass(frozen=True, eq=False)
class Density:
    """Unreduced ratio ``num/den`` with ``den > 0``; ordered by cross-multiplication."""

    num: int
    den: int

    def __post_init__(self):
        if self.den <= 0:
            raise ValueError(f"density denominator must be positive, got {self.den}")

    def __eq__(self, other):
        if not isinstance(other, Density):
            return NotImplemented
        return cmp_density(self, other) == 0

    def __lt__(self, other):
        if not isinstance(other, Density):
            return NotImplemented
        return cmp_density(self, other) < 0

    def __hash__(self):
        return hash(self.as_fraction())

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __float__(self):
        return self.num / self.den

    def __repr__(self):
        return f"Density({self.num}/{self.den})"


def cmp_density(x: Density, y: Density) -> int:
    """Return -1, 0 or 1 as ``x`` is less than, equal to or greater than ``y``.

    Raises DensityOverflow if either cross product does not fit in a signed
    128-bit integer.
    """
    lhs = x.num * y.den
    rhs = y.num * x.den
    if lhs.bit_length() > _CROSS_BITS or rhs.bit_length() > _CROSS_BITS:
        raise DensityOverflow(
            f"cross product of {x!r} and {y!r} exceeds 128 bits; "
            "inputs are outside the supported range")
    return (lhs > rhs) - (lhs < rhs)


@dataclass(frozen=True)
class PrefixSums:
    """``A[j] = a_1 + ... + a_j`` and ``W[j] = w_1 + ... + w_j`` with ``A[0] = W[0] = 0``."""

    A: list
    W: list

    @property
    def n(self) -> int:
        return len(self.A) - 1

    def width(self, i: int, j: int) -> int:
        return self.W[j] - self.W[i - 1]

    def total_width(self) -> int:
        return self.W[-1]


def build_prefix_sums(seq: Iterable) -> PrefixSums:
    """Prefix sums of a sequence of ``NumberPair`` or ``(a, w)`` tuples.

    Raises InvalidWidth naming the 1-based index of the first ``w <= 0``.
    """
    a_vals = []
    w_vals = []
    for idx, item in enumerate(seq, 1):
        a, w = (item.a, item.w) if isinstance(item, NumberPair) else item
        if w <= 0:
            raise InvalidWidth(idx, w)
        a_vals.append(a)
        w_vals.append(w)
    return prefix_sums_from_lists(a_vals, w_vals)


def prefix_sums_from_lists(a: Sequence[int], w: Sequence[int]) -> PrefixSums:
    A = list(accumulate(a, initial=0))
    W = list(accumulate(w, initial=0))
    if len(A) > MAX_LENGTH + 1:
        raise OverflowError(f"sequence length {len(A) - 1} exceeds {MAX_LENGTH}")
    if A and (max(A) > MAX_ABS_PREFIX or min(A) < -MAX_ABS_PREFIX):
        raise OverflowError("value prefix sums exceed 2**62; inputs out of range")
    if W[-1] > MAX_ABS_PREFIX:
        raise OverflowError("width prefix sums exceed 2**62; inputs out of range")
    return PrefixSums(A, W)


def density(ps: PrefixSums, i: int, j: int) -> Density:
    if not 1 <= i <= j <= ps.n:
        raise IndexError(f"segment ({i}, {j}) outside [1, {ps.n}]")
    return Density(ps.A[j] - ps.A[i - 1], ps.W[j] - ps.W[i - 1])


class ProblemInstance:
    """Sequence of pairs plus width bounds ``0 < w_min <= w_max``.

    ``w_max=None`` means no upper bound (it is replaced by the total width).
    Treat instances as immutable.
    """

    __slots__ = ("a", "w", "w_min", "w_max", "prefix")

    def __init__(self, a, w=None, w_min=1, w_max=None):
        a = tuple(int(v) for v in a)
        w = tuple(1 for _ in a) if w is None else tuple(int(v) for v in w)
        if len(a) != len(w):
            raise ValueError(f"length mismatch: {len(a)} values, {len(w)} widths")
        if not a:
            raise ValueError("empty sequence")
        for idx, wi in enumerate(w, 1):
            if wi <= 0:
                raise InvalidWidth(idx, wi)
        ps = prefix_sums_from_lists(a, w)
        if w_max is None:
            w_max = max(ps.W[-1], w_min)
        if not 0 < w_min <= w_max:
            raise ValueError(f"need 0 < w_min <= w_max, got {w_min}, {w_max}")
        self.a = a
        self.w = w
        self.w_min = w_min
        self.w_max = w_max
        self.prefix = ps

    def __repr__(self):
        return (f"ProblemInstance(n={len(self.a)}, w_min={self.w_min}, "
                f"w_max={self.w_max})")

    @classmethod
    def from_pairs(cls, pairs: Iterable, w_min, w_max=None) -> "ProblemInstance":
        pairs = [(p.a, p.w) if isinstance(p, NumberPair) else tuple(p) for p in pairs]
        return cls([p[0] for p in pairs], [p[1] for p in pairs], w_min, w_max)

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def pairs(self) -> list:
        return [NumberPair(a, w) for a, w in zip(self.a, self.w)]

    def is_ineffective(self) -> bool:
        """True when ``w_max`` does not constrain any segment."""
        return self.w_max >= self.prefix.W[-1]


@dataclass
class WorkCounters:
    """Instrumentation for the linear-time solvers.

    Every field counts one constant-time loop iteration.
    """

    iterations: int = 0    # end indices j processed
    pushes: int = 0        # deque appends
    pops: int = 0          # deque tail removals
    lbest_steps: int = 0
    skip_steps: int = 0    # head advances past the smallest feasible start
    variant_calls: int = 0
    init_steps: int = 0    # prefix-minimum table walk iterations
    vbest_steps: int = 0
    variant_ends: int = 0  # y values visited by variant calls
    cursor_steps: int = 0  # run cursors in the sparse solver

    @property
    def total(self) -> int:
        return (self.iterations + self.pushes + self.pops + self.lbest_steps
                + self.skip_steps + self.variant_calls + self.init_steps
                + self.vbest_steps + self.variant_ends + self.cursor_steps)

    def as_dict(self) -> dict:
        d = dict(self.__dict__)
        d["total"] = self.total
        return d


@dataclass(frozen=True)
class Solution:
    segment: Segment
    density: Density
    counters: WorkCounters = field(default_factory=WorkCounters, compare=False)

    @property
    def i(self) -> int:
        return self.segment.i

    @property
    def j(self) -> int:
        return self.segment.j


def better(num, den, i, j, best) -> bool:
    """Whether candidate ``(i, j)`` with density ``num/den`` beats ``best``.

    ``best`` is ``(num, den, i, j)`` or None. Ties go to the larger ``j``,
    then the larger ``i``.
    """
    if best is None:
        return True
    bnum, bden, bi, bj = best
    lhs = num * bden
    rhs = bnum * den
    if lhs != rhs:
        return lhs > rhs
    return (j, i) > (bj, bi)
