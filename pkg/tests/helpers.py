"""Random instance generators shared by the test modules."""
import random
from pathlib import Path

from hypothesis import strategies as st

from maxdensity import ProblemInstance, RunLengthSequence

FIXTURES = Path(__file__).parent / "fixtures"


def random_instance(rng: random.Random, max_n=64, max_w=4, ineffective=False,
                    uniform=False) -> ProblemInstance:
    """Random instance with at least one feasible segment."""
    n = rng.randint(1, max_n)
    a = [rng.randint(-9, 9) for _ in range(n)]
    w = [1] * n if uniform else [rng.randint(1, max_w) for _ in range(n)]
    total = sum(w)
    if ineffective:
        w_min = rng.randint(1, total)
        return ProblemInstance(a, w, w_min, total + rng.randint(0, 3))
    while True:
        w_min = rng.randint(1, min(total, 3 * max_w + 4))
        w_max = w_min + rng.randint(0, 3 * max_w + 4)
        widths = {sum(w[i:j]) for i in range(n) for j in range(i + 1, n + 1)}
        if any(w_min <= x <= w_max for x in widths):
            return ProblemInstance(a, w, w_min, w_max)


def random_runs(rng: random.Random, max_m=32, max_len=20) -> RunLengthSequence:
    m = rng.randint(1, max_m)
    runs = []
    end = 0
    for _ in range(m):
        end += rng.randint(1, max_len)
        runs.append((rng.randint(-9, 9), end))
    return RunLengthSequence(tuple(runs))


values = st.lists(st.integers(-9, 9), min_size=1, max_size=40)


@st.composite
def instances(draw, max_n=40, max_w=4, uniform=False):
    """Hypothesis instances; the bounds need not admit any segment."""
    a = draw(st.lists(st.integers(-9, 9), min_size=1, max_size=max_n))
    if uniform:
        w = [1] * len(a)
    else:
        w = draw(st.lists(st.integers(1, max_w), min_size=len(a), max_size=len(a)))
    w_min = draw(st.integers(1, sum(w)))
    w_max = w_min + draw(st.integers(0, sum(w)))
    return ProblemInstance(a, w, w_min, w_max)


@st.composite
def weighted(draw, max_n=30, max_w=4):
    """``(a, w)`` lists of equal length."""
    a = draw(st.lists(st.integers(-9, 9), min_size=1, max_size=max_n))
    w = draw(st.lists(st.integers(1, max_w), min_size=len(a), max_size=len(a)))
    return a, w
