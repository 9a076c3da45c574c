"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v -s`` (the summary lines are
printed even without ``-s``).
"""
import random
import time
from fractions import Fraction

import pytest

from helpers import random_instance, random_runs
from maxdensity import (Density, NoFeasibleSegment, ProblemInstance,
                        RunLengthSequence, OnlineSolver, brute_force_phi,
                        brute_force_solve, cmp_density, density, solve,
                        solve_ineffective, solve_sparse)
from maxdensity.bench import doubling_ratios, measure
from maxdensity.core import prefix_sums_from_lists
from maxdensity.oracle import phi_chain
from maxdensity.variant import init

pytestmark = pytest.mark.acceptance


@pytest.fixture
def report(capsys):
    def emit(number, name, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {name}: {detail}")
        assert ok, detail
    return emit


def test_01_general_matches_brute_force(report):
    rng = random.Random(101)
    t0 = time.perf_counter()
    cases = mismatches = 0
    while cases < 1000:
        inst = random_instance(rng, max_n=64)
        cases += 1
        if solve(inst).density != brute_force_solve(inst).density:
            mismatches += 1
    elapsed = time.perf_counter() - t0
    report(1, "general vs brute force", mismatches == 0 and elapsed < 10,
           f"{cases} instances, {mismatches} mismatches, {elapsed:.1f}s")


def test_02_ineffective_matches_brute_force(report):
    rng = random.Random(202)
    mismatches = 0
    for _ in range(1000):
        inst = random_instance(rng, max_n=64, ineffective=True)
        assert inst.w_max >= inst.prefix.W[-1]
        if solve_ineffective(inst).density != brute_force_solve(inst).density:
            mismatches += 1
    report(2, "ineffective bound vs brute force", mismatches == 0,
           f"1000 instances, {mismatches} mismatches")


def test_03_sparse_matches_general(report):
    rng = random.Random(303)
    mismatches = 0
    for _ in range(500):
        rls = random_runs(rng, max_m=32, max_len=20)
        w_min = rng.randint(1, rls.n)
        w_max = rng.randint(w_min, rls.n)
        expanded = ProblemInstance(rls.expand(), None, w_min, w_max)
        if solve_sparse(rls, w_min, w_max).density != solve(expanded).density:
            mismatches += 1
    report(3, "sparse vs general on expansion", mismatches == 0,
           f"500 instances, {mismatches} mismatches")


def test_04_psi_table(report):
    rng = random.Random(404)
    bad = 0
    for _ in range(250):
        n = rng.randint(1, 40)
        ps = prefix_sums_from_lists([rng.randint(-9, 9) for _ in range(n)],
                                    [rng.randint(1, 4) for _ in range(n)])
        ell = rng.randint(1, n)
        r = rng.randint(ell, n)
        psi = init(ps, ell, r)
        if any(psi[i] != brute_force_phi(ps, i, r) for i in range(ell, r + 1)):
            bad += 1
    report(4, "psi table vs brute-force phi", bad == 0, f"250 tables, {bad} wrong")


def test_05_condition_c(report):
    rng = random.Random(505)
    checks = violations = 0
    instances = 0
    while instances < 250:
        inst = random_instance(rng, max_n=40, ineffective=True)
        ps = inst.prefix
        instances += 1

        def on_update(j, dq):
            nonlocal checks, violations
            checks += 1
            window = dq.window()
            if dq.q - dq.p < -1 or window != phi_chain(ps, window[0], window[-1]):
                violations += 1

        solve_ineffective(inst, on_update=on_update)
    report(5, "deque equals phi chain after every update", violations == 0,
           f"{instances} instances, {checks} checks, {violations} violations")


def test_06_order_relations(report):
    rng = random.Random(606)
    triples = bad = 0
    while triples < 100_000:
        n = rng.randint(2, 30)
        a = [rng.randint(-9, 9) for _ in range(n)]
        w = [rng.randint(1, 4) for _ in range(n)]
        ps = prefix_sums_from_lists(a, w)
        for _ in range(200):
            x = rng.randint(1, n - 1)
            y = rng.randint(x, n - 1)
            z = rng.randint(y + 1, n)
            left, right, whole = density(ps, x, y), density(ps, y + 1, z), density(ps, x, z)
            c = cmp_density(left, right)
            fl, fr, fw = (Fraction(d.num, d.den) for d in (left, right, whole))
            exact = (fl > fr) - (fl < fr)
            if not (c == exact == cmp_density(left, whole) == cmp_density(whole, right)
                    and min(fl, fr) <= fw <= max(fl, fr)):
                bad += 1
            triples += 1
    report(6, "order relations on triples", bad == 0, f"{triples} triples, {bad} violations")


def test_07_linearity(report):
    sizes = (10_000, 100_000, 500_000)
    lines = []
    ok = True
    for family in ("uniform", "alternating"):
        for n, ratio in doubling_ratios(family, sizes):
            lines.append(f"{family} n={n} W(2n)/W(n)={ratio:.3f}")
            ok &= ratio <= 2.2
    row = measure("uniform", 1_000_000)
    # the ~1 s wall-clock figure is an order-of-magnitude target
    ok &= row.seconds < 10
    lines.append(f"uniform n=1e6 {row.seconds:.2f}s ({row.per_element:.2f} work/element)")
    report(7, "linear work", ok, "; ".join(lines))


def test_08_online_equals_batch(report):
    rng = random.Random(808)
    mismatches = 0
    for _ in range(250):
        inst = random_instance(rng, max_n=64)
        online = OnlineSolver(inst.w_min, inst.w_max)
        for a, w in zip(inst.a, inst.w):
            online.push(a, w)
        if online.finalize().density != solve(inst).density:
            mismatches += 1
    report(8, "online vs batch", mismatches == 0, f"250 instances, {mismatches} mismatches")


def test_09_sparse_work_independent_of_n(report):
    rng = random.Random(909)
    base = [(rng.randint(-9, 9), rng.randint(1, 8)) for _ in range(100)]
    totals = {}
    for scale in (1, 100, 10_000):
        runs = []
        end = 0
        for v, ln in base:
            end += ln * scale
            runs.append((v, end))
        rls = RunLengthSequence(tuple(runs))
        sol = solve_sparse(rls, 5 * scale, 60 * scale)
        totals[rls.n] = sol.counters.total
    report(9, "sparse work constant in n", len(set(totals.values())) == 1,
           ", ".join(f"n={n}: {t}" for n, t in totals.items()) + " (m=100)")


def test_10_short_optimum_exists(report):
    rng = random.Random(1010)
    bad = 0
    for _ in range(250):
        n = rng.randint(1, 48)
        a = [rng.randint(-9, 9) for _ in range(n)]
        w_min = rng.randint(1, n)
        inst = ProblemInstance(a, None, w_min, n + rng.randint(0, 5))
        full = brute_force_solve(inst).density
        short = brute_force_solve(inst, max_width=2 * w_min - 1).density
        if full != short:
            bad += 1
    report(10, "optimum within width 2*w_min-1", bad == 0,
           f"250 uniform instances, {bad} counterexamples")
