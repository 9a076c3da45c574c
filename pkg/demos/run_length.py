"""Run-length input is solved in time proportional to the number of runs.

Stretching every run by a factor of 10**4 leaves the answer's density and
the instrumented work unchanged, while the expanded sequence grows to
millions of elements.
"""
import random

from maxdensity import RunLengthSequence, solve_sparse


def runs(scale, seed=1, m=50):
    rng = random.Random(seed)
    out = []
    end = 0
    for _ in range(m):
        end += rng.randint(1, 6) * scale
        out.append((rng.randint(-5, 5), end))
    return RunLengthSequence(tuple(out))


def main():
    for scale in (1, 100, 10_000):
        rls = runs(scale)
        sol = solve_sparse(rls, 4 * scale, 30 * scale)
        print(f"n = {rls.n:>8}  m = {rls.m}  segment {sol.i}-{sol.j}  "
              f"density {sol.density.as_fraction()}  work {sol.counters.total}")


if __name__ == "__main__":
    main()
