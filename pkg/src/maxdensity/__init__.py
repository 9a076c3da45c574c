"""Maximum-density segments of weighted sequences under width bounds.

Linear-time batch and online solvers, an O(m) solver for run-length encoded
unit-width sequences, and brute-force references for checking them.
"""
from .bounds import FeasibleBounds, compute_bounds, split_chunks
from .core import (Density, DensityOverflow, InvalidWidth, NoFeasibleSegment,
                   NumberPair, PrefixSums, ProblemInstance, Segment, Solution,
                   WorkCounters, build_prefix_sums, cmp_density, density)
from .general import CandidateEvent, OnlineSolver, Source, solve
from .lmain import PhiDeque, solve_ineffective
from .oracle import brute_force_best, brute_force_phi, brute_force_solve
from .sparse import RunLengthSequence, rl_density, solve_sparse

__all__ = [
    "CandidateEvent", "Density", "DensityOverflow", "FeasibleBounds",
    "InvalidWidth", "NoFeasibleSegment", "NumberPair", "OnlineSolver",
    "PhiDeque", "PrefixSums", "ProblemInstance", "RunLengthSequence", "Segment",
    "Solution", "Source", "WorkCounters", "brute_force_best", "brute_force_phi",
    "brute_force_solve", "build_prefix_sums", "cmp_density", "compute_bounds",
    "density", "rl_density", "solve", "solve_ineffective", "solve_sparse",
    "split_chunks",
]
