"""End-to-end acceptance checks; each test records a PASS/FAIL line for the run summary."""

import random
import time
from collections import Counter
from fractions import Fraction
from math import ceil

from conftest import random_bipartite, random_graph, record
from edgesum.coloring import verify_coloring
from edgesum.exact import (
    bipartite_onesided_lower_bound,
    decide_sequential,
    exact_sum,
    general_lower_bound,
    halved_degree_sum,
)
from edgesum.generators import (
    gen_bipartite_degrees,
    gen_bipartite_dominant,
    gen_complete,
    gen_petersen,
    gen_random_regular,
    gen_split,
    random_dominant_plan,
)
from edgesum.kernels import koenig_color, vizing_color
from edgesum.regular import (
    approx_sum_regular,
    kn_exact_sum,
    kn_optimal_coloring,
    regular_lower_bound,
)
from edgesum.sequential import is_sequential, sequential_sum, swap_to_sequential, u_sequential_color
from edgesum.split import split_color, split_formula_bounds

CUBIC_SIZES = (4, 6, 8, 10, 12)


def _cubic_corpus():
    return [(n, seed, gen_random_regular(n, 3, seed)) for n in CUBIC_SIZES for seed in range(40)]


def test_criterion_1_complete_graphs():
    start = time.monotonic()
    got = []
    for n in range(2, 8):
        res = exact_sum(gen_complete(n))
        colored = verify_coloring(gen_complete(n), kn_optimal_coloring(n))
        assert res.optimal
        assert colored.proper and colored.sum == kn_exact_sum(n)
        got.append(res.sum)
    elapsed = time.monotonic() - start
    ok = got == [kn_exact_sum(n) for n in range(2, 8)] == [1, 6, 12, 30, 45, 84] and elapsed < 60
    assert record(1, "exact K_n sums match the closed form, n=2..7", ok, f"{elapsed:.2f}s")


def test_criterion_2_sequential_swap():
    corpus = _cubic_corpus()
    start = time.monotonic()
    bad = 0
    for n, _, g in corpus:
        beta, R = swap_to_sequential(g, vizing_color(g))
        if not (verify_coloring(g, beta).proper and beta.max_color <= 4
                and len(R) >= ceil(n / 4) and is_sequential(g, beta, R)):
            bad += 1
    elapsed = time.monotonic() - start
    ok = len(corpus) == 200 and bad == 0 and elapsed < 10
    assert record(2, "cubic swap gives |R| >= ceil(n/4), R-sequential", ok,
                  f"{len(corpus)} graphs, {bad} failures, {elapsed:.2f}s")


def test_criterion_3_approx_bound_and_ratio():
    bound_violations = ratio_violations = checked = 0
    worst = Fraction(1)
    for n, _, g in _cubic_corpus():
        rep = approx_sum_regular(g)
        if Fraction(rep.achieved_sum) > Fraction(3 * n * 22, 16):
            bound_violations += 1
        if n <= 10:
            best = exact_sum(g)
            assert best.optimal
            ratio = Fraction(rep.achieved_sum, best.sum)
            worst = max(worst, ratio)
            checked += 1
            if ratio > Fraction(11, 8):
                ratio_violations += 1
    ok = bound_violations == 0 and ratio_violations == 0 and checked == 160
    assert record(3, "approx sum <= 3n*22/16 and ratio <= 11/8", ok,
                  f"{checked} oracle checks, worst ratio {worst}")


def test_criterion_4_petersen():
    res = exact_sum(gen_petersen(), time_budget=600)
    ok = res.optimal and res.sum == 33 and regular_lower_bound(10, 3) == 30
    assert record(4, "Petersen exact sum 33, lower bound 30", ok,
                  f"{res.nodes_expanded} nodes")


def _dominance_corpus(count=100, max_m=20):
    rng = random.Random(5)
    out = []
    seed = 0
    while len(out) < count:
        seed += 1
        du, dw = random_dominant_plan(rng.randint(1, 6), rng.randint(1, 7), rng.uniform(0.2, 0.9), seed)
        g, bp = gen_bipartite_dominant(du, dw, seed)
        if 0 < g.m <= max_m:
            out.append((g, bp))
    return out


def test_criterion_5_dominance_optimality():
    formula_bad = oracle_bad = oracle_checked = 0
    for g, bp in _dominance_corpus():
        c = u_sequential_color(g, bp)
        closed_form = sum(g.degree(u) * (g.degree(u) + 1) // 2 for u in bp.side("U"))
        if not (verify_coloring(g, c).proper and c.sum == closed_form == sequential_sum(g, bp.side("U"))):
            formula_bad += 1
        if g.m <= 14:
            oracle_checked += 1
            if exact_sum(g).sum != c.sum:
                oracle_bad += 1
    ok = formula_bad == 0 and oracle_bad == 0
    assert record(5, "U-sequential sum equals closed form and the optimum", ok,
                  f"100 instances, {oracle_checked} oracle checks")


def _delta3_corpus(count=100):
    rng = random.Random(8)
    out = []
    while len(out) < count:
        g, bp = random_bipartite(rng, rng.randint(2, 5), rng.randint(2, 5), rng.uniform(0.3, 0.9),
                                 max_degree=3)
        if g.max_degree == 3 and g.m <= 12:
            out.append((g, bp))
    return out


def _balanced_corpus(count=60):
    """Δ=3 instances where both sides share one degree sequence, so |U_i| = |W_i|."""
    rng = random.Random(9)
    out = []
    seed = 0
    while len(out) < count:
        seed += 1
        du = [3] + [rng.randint(1, 3) for _ in range(rng.randint(2, 4))]
        if sum(du) > 12:
            continue
        try:
            out.append(gen_bipartite_degrees(du, du, seed))
        except ValueError:
            continue
    return out


def test_criterion_6_decision_equivalences():
    tally8, tally9 = Counter(), Counter()
    bad = 0
    for g, bp in _delta3_corpus():
        lhs = decide_sequential(g, bp, "U")
        rhs = exact_sum(g).sum == bipartite_onesided_lower_bound(g, bp, "U")
        tally8[(lhs, rhs)] += 1
        bad += lhs != rhs
    for g, bp in _balanced_corpus():
        for i in (1, 2, 3):
            assert sum(g.degree(u) == i for u in bp.side("U")) == sum(g.degree(w) == i for w in bp.side("W"))
        lhs = decide_sequential(g, bp, "all")
        rhs = exact_sum(g).sum == halved_degree_sum(g)
        tally9[(lhs, rhs)] += 1
        bad += lhs != rhs
    both_ways = all(tally[(v, v)] for tally in (tally8, tally9) for v in (True, False))
    ok = bad == 0 and both_ways
    assert record(6, "sequential decision <=> optimum meets the degree bound", ok,
                  f"one-sided {dict(tally8)}, balanced {dict(tally9)}")


def _split_corpus(condition, count=50):
    rng = random.Random({"thm10": 10, "thm11": 11}[condition])
    out = []
    seed = 0
    while len(out) < count:
        seed += 1
        c, i = rng.randint(1, 4), rng.randint(1, 5)
        g, sd = gen_split(c, i, condition, seed, p=rng.uniform(0.3, 0.8))
        if g.m <= 14:
            out.append((g, sd))
    return out


def test_criterion_7_split_bounds():
    bad = 0
    gaps = []
    for cond in ("thm10", "thm11"):
        for g, sd in _split_corpus(cond):
            rep = split_color(sd, cond)
            high, low = split_formula_bounds(sd, cond)
            out = verify_coloring(g, rep.coloring)
            best = exact_sum(g)
            assert best.optimal
            if not (out.proper and out.sum == rep.bound == min(high, low) and best.sum <= rep.bound):
                bad += 1
            gaps.append(rep.bound - best.sum)
            assert general_lower_bound(g) <= best.sum
    ok = bad == 0 and len(gaps) == 100
    assert record(7, "split colorings proper, sum = min formula term >= optimum", ok,
                  f"100 instances, max gap {max(gaps)}")


def test_criterion_8_kernels():
    rng = random.Random(11)
    bad = vizing_runs = koenig_runs = 0
    for k in range(500):
        if k % 2:
            g, bp = random_bipartite(rng, rng.randint(1, 9), rng.randint(1, 9), rng.random())
            rep = verify_coloring(g, koenig_color(g, bp))
            koenig_runs += 1
            if not (rep.proper and rep.max_color <= g.max_degree):
                bad += 1
        else:
            g = random_graph(rng, rng.randint(1, 15), rng.random())
        rep = verify_coloring(g, vizing_color(g))
        vizing_runs += 1
        if not (rep.proper and rep.max_color <= g.max_degree + 1):
            bad += 1
    ok = bad == 0 and vizing_runs == 500
    assert record(8, "vizing <= Δ+1 and koenig <= Δ colors, all proper", ok,
                  f"{vizing_runs} vizing, {koenig_runs} koenig runs")
