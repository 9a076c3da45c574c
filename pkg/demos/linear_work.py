"""Instrumented work grows linearly with input size.

Each solver loop counts its iterations. Doubling n should roughly double the
total, for random unit-width input and for widths alternating between 1 and
w_max, a pattern that keeps the feasible start window jumping.
"""
from maxdensity.bench import measure


def main(sizes=(10_000, 20_000, 40_000, 80_000)):
    print(f"{'family':<12}{'n':>8}{'work':>10}{'work/n':>8}{'seconds':>9}")
    for family in ("uniform", "alternating"):
        for n in sizes:
            row = measure(family, n)
            print(f"{family:<12}{n:>8}{row.work:>10}{row.per_element:>8.2f}"
                  f"{row.seconds:>9.3f}")


if __name__ == "__main__":
    main()
