import random

import pytest
from hypothesis import given, settings

from helpers import instances, random_instance
from maxdensity import (NoFeasibleSegment, OnlineSolver, ProblemInstance, Source,
                        brute_force_solve, compute_bounds, solve, solve_ineffective)
from maxdensity.bench import alternating_instance, uniform_instance
from maxdensity.general import InternalInvariantError


def test_example():
    sol = solve(ProblemInstance([1, 1, 0, 0], None, 2, 3))
    assert (sol.i, sol.j, sol.density.num, sol.density.den) == (1, 2, 2, 2)


def test_infeasible():
    with pytest.raises(NoFeasibleSegment):
        solve(ProblemInstance([1, 2], [5, 5], 1, 4))
    with pytest.raises(NoFeasibleSegment):
        solve(ProblemInstance([1, 2], None, 3, 4))


def test_oversized_elements_split_chunks():
    inst = ProblemInstance([1, 100, 2, 2, 9, 3], [1, 10, 1, 1, 10, 2], 2, 3)
    sol = solve(inst)
    assert (sol.i, sol.j) == (3, 4)
    assert sol.density == brute_force_solve(inst).density


def test_empty_window_inside_chunk():
    # w_max admits every element but j = 2 has no feasible start
    inst = ProblemInstance([4, 1, 7], [3, 1, 2], 2, 3)
    assert solve(inst).density == brute_force_solve(inst).density


def test_ineffective_bound_matches_lmain_stream():
    rng = random.Random(3)
    for _ in range(50):
        inst = random_instance(rng, max_n=40, ineffective=True)
        general_events = []
        lmain_events = []
        solve(inst, on_event=lambda ev: general_events.append((ev.segment.i, ev.segment.j)))
        solve_ineffective(inst, on_event=lambda i, j: lmain_events.append((i, j)))
        assert general_events == lmain_events


def test_events_are_feasible_and_contain_optimum():
    rng = random.Random(11)
    for _ in range(200):
        inst = random_instance(rng, max_n=40)
        events = []
        sol = solve(inst, on_event=events.append)
        W = inst.prefix.W
        for ev in events:
            i, j = ev.segment.i, ev.segment.j
            assert inst.w_min <= W[j] - W[i - 1] <= inst.w_max
            assert ev.source in (Source.DEQUE, Source.VARIANT)
        assert max(ev.density for ev in events) == sol.density


@settings(max_examples=300)
@given(instances())
def test_matches_brute_force(inst):
    try:
        expected = brute_force_solve(inst)
    except NoFeasibleSegment:
        with pytest.raises(NoFeasibleSegment):
            solve(inst)
        return
    sol = solve(inst)
    assert sol.density == expected.density
    c = sol.counters
    assert c.pops <= c.pushes <= inst.n
    assert c.total <= 12 * inst.n


@settings(max_examples=300)
@given(instances())
def test_variant_calls_are_disjoint(inst):
    calls = []
    try:
        solve(inst, on_variant=lambda r, y0, ell, y1: calls.append((r, y0, ell, y1)))
    except NoFeasibleSegment:
        return
    b = compute_bounds(inst.prefix, inst.w_min, inst.w_max)
    for (r1, y01, ell1, y11), (r2, y02, ell2, y12) in zip(calls, calls[1:]):
        assert ell1 < b.ell[y02]
        assert y11 < y02
    for r, y0, ell, y1 in calls:
        assert ell <= r <= y0 <= y1


@settings(max_examples=300)
@given(instances())
def test_online_matches_batch(inst):
    online = OnlineSolver(inst.w_min, inst.w_max)
    batch_events = []
    online_events = []
    try:
        batch = solve(inst, on_event=batch_events.append)
    except NoFeasibleSegment:
        online.feed(zip(inst.a, inst.w))
        with pytest.raises(NoFeasibleSegment):
            online.finalize()
        return
    for a, w in zip(inst.a, inst.w):
        online_events.extend(online.push(a, w))
    sol = online.finalize()
    assert sol.density == batch.density
    assert (sol.i, sol.j) == (batch.i, batch.j)
    key = lambda ev: (ev.segment.j, ev.segment.i, ev.source.value)
    assert sorted(online_events, key=key) == sorted(batch_events, key=key)


def test_online_rejects_bad_input():
    with pytest.raises(ValueError):
        OnlineSolver(0, 3)
    s = OnlineSolver(1, 3)
    with pytest.raises(ValueError):
        s.push(1, 0)
    with pytest.raises(NoFeasibleSegment):
        OnlineSolver(2).finalize()


def test_online_memory_follows_window():
    inst = uniform_instance(60000, 20, 50, seed=1)
    online = OnlineSolver(inst.w_min, inst.w_max)
    online.feed(zip(inst.a, inst.w))
    assert online.finalize().density == solve(inst).density
    assert online.peak_span <= 3 * 4096


def test_adversarial_family_work_is_linear():
    inst = alternating_instance(20000, 50, 200, seed=2)
    sol = solve(inst)
    assert sol.counters.total <= 12 * inst.n


def test_internal_error_type():
    assert issubclass(InternalInvariantError, AssertionError)
