"""Acceptance suite.  Each test prints one PASS/FAIL line for its criterion;
run with ``pytest -s tests/test_acceptance.py`` (or ``-v``) to see them."""

import random
import time
from fractions import Fraction as F
from itertools import combinations

import numpy as np
import pytest

from conftest import VectorClassifier, brute_minimum, oracle, random_instance, random_probes
from nnreduce.equivalence import is_equivalent_1d, is_reduced_training_set
from nnreduce.exact import all_minimum_subsets
from nnreduce.generators import collinear, degenerate_grid, random_gp
from nnreduce.geometry import bisector, general_position, same_bisector
from nnreduce.reduction import Max2SatInstance, assignment_to_subset, compile_instance
from nnreduce.reduction.compile import verify_group
from nnreduce.reduction.gadgets import DEFAULT, rotate
from nnreduce.reduction.cells import CellComplex
from nnreduce.reduction.gadgets import build_variable_gadget
from nnreduce.reduction.verify import checked_channel, clause_completion_counts
from nnreduce.relevant import (reduce_general_position, relevant_points_by_definition,
                               relevant_points_by_walls)
from nnreduce.solver1d import solve_1d


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")
        assert ok, detail
    return emit


def one_d_instances(count=500, seed=2024):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        out.append(random_instance(rng, rng.randint(1, 10), rng.randint(1, 3), d=1))
    return out


def test_criterion_1_one_dimensional_optimality(report):
    start = time.perf_counter()
    mismatches = 0
    insts = one_d_instances()
    for P in insts:
        sol = solve_1d(P)
        k, _ = brute_minimum(P)
        if sol.size != k or not is_equivalent_1d(P, sol.subset).equivalent:
            mismatches += 1
    elapsed = time.perf_counter() - start
    report(1, mismatches == 0 and elapsed < 120,
           f"{len(insts)} instances, {mismatches} mismatches, {elapsed:.1f}s")


def test_criterion_2_size_formula(report):
    checked = bad = 0
    for P in one_d_instances():
        sol = solve_1d(P)
        t = sol.decomposition.t
        if t < 2:
            continue
        chains = sol.selected
        expected = 2 * (t - 1) - sum(c.k - 2 for c in chains)
        checked += 1
        if sol.size != expected or sol.formula_size != expected:
            bad += 1
    report(2, bad == 0 and checked > 100, f"{checked} instances with t>=2, {bad} off-formula")


def test_criterion_3_relevant_points_unique_solution(report):
    bad, n_inst = [], 0
    for seed in range(200):
        rng = random.Random(seed)
        P = random_gp(rng.randint(3, 12), 2, seed=seed, box=200)
        n_inst += 1
        cert = reduce_general_position(P)
        rel = cert.relevant
        if not is_reduced_training_set(P, rel).equivalent:
            bad.append((seed, "rel fails"))
            continue
        minima, complete = all_minimum_subsets(P)
        if not complete or minima != [tuple(rel)]:
            bad.append((seed, "minimum differs"))
            continue
        for k in rel:
            if is_reduced_training_set(P, [j for j in rel if j != k]).equivalent:
                bad.append((seed, f"{k} removable"))
    report(3, not bad, f"{n_inst} general-position instances, failures {bad[:3]}")


def test_criterion_4_distinct_bisectors(report):
    collisions = 0
    for seed in range(1000):
        P = random_gp(random.Random(seed).randint(2, 15), seed=seed, box=500)
        lines = {bisector(p, q).canonical() for p, q in combinations(P.points, 2)}
        if len(lines) != P.n * (P.n - 1) // 2:
            collisions += 1
    sq = [(F(0), F(0)), (F(1), F(0)), (F(1), F(1)), (F(0), F(1))]
    shared = same_bisector((sq[0], sq[1]), (sq[3], sq[2]))
    gp = general_position(sq)
    square_ok = shared and not gp and gp.kind == "cocircular" and len(gp.witness) == 4
    report(4, collisions == 0 and square_ok,
           f"1000 sets, {collisions} with repeated bisectors; unit square shared={shared}, "
           f"general position fails with {gp.kind} witness")


def test_criterion_5_relevant_agreement(report):
    insts = []
    for seed in range(80):
        rng = random.Random(seed)
        insts.append(random_instance(rng, rng.randint(2, 9), rng.randint(1, 3)))
    for seed in range(40):
        insts.append(collinear(random.Random(seed).randint(2, 8), m=2, seed=seed))
    for seed in range(40):
        r = random.Random(seed)
        insts.append(degenerate_grid(r.randint(2, 3), r.randint(2, 4), m=r.randint(2, 3), seed=seed))
    for seed in range(40):
        insts.append(random_gp(random.Random(seed).randint(2, 10), seed=seed, box=100))
    bad = sum(relevant_points_by_walls(P).indices != relevant_points_by_definition(P).indices
              for P in insts)
    report(5, bad == 0 and len(insts) >= 200, f"{len(insts)} instances, {bad} disagreements")


def test_criterion_6_oracle_soundness(report):
    np_rng = np.random.default_rng(6)
    unsound = subsets = accepted = 0
    for seed in range(100):
        rng = random.Random(seed)
        kind = "small-int" if seed % 2 else "wide"
        P = random_instance(rng, rng.randint(2, 9), rng.randint(2, 3), kind=kind)
        nums, denom = random_probes(P, np_rng, 10_000)
        vc = VectorClassifier(P, nums, denom)
        full = vc.masks()
        for k in range(1, P.n + 1):
            for Q in combinations(range(P.n), k):
                subsets += 1
                sampled_ok = bool((vc.masks(Q) == full).all())
                exact_ok = oracle(P, Q).equivalent
                if not sampled_ok and exact_ok:
                    unsound += 1
                if exact_ok:
                    accepted += 1
    report(6, unsound == 0,
           f"100 instances, {subsets} subsets, {accepted} accepted, "
           f"{unsound} accepted subsets refuted by 10^4 probes")


def test_criterion_7_clause_counts(report):
    counts = clause_completion_counts()
    expected = {(False, False): 5, (True, False): 4, (False, True): 4, (True, True): 4}
    offsets = (DEFAULT.clause_dy, DEFAULT.clause_dx) == (F(1, 2), F(5))
    report(7, counts == expected and offsets,
           f"completions {dict(sorted(counts.items()))}, offsets (1/2, 5)={offsets}")


def test_criterion_8_gadget_contracts(report):
    rows = []
    cx = CellComplex()
    build_variable_gadget(cx, "x", 5)
    rows.append(("variable", verify_group(cx, "x", probes=128)))
    for kind in ("straight", "bend", "double-bend", "stretch", "narrow"):
        rows.append((kind, verify_group(checked_channel(kind), "x", probes=128)))
    ok = all(r["ring"] >= 100 and all(r["equivalent"].values())
             and len(set(r["sizes"].values())) == 1 for _, r in rows)
    report(8, ok, ", ".join(f"{k} {r['sizes']['T']}/{r['sizes']['F']}" for k, r in rows)
           + " all equivalent, rings of 128 blue")


@pytest.mark.slow
def test_criterion_9_end_to_end(report):
    start = time.perf_counter()
    f = Max2SatInstance.from_text("p vcmax2sat 2 1 1\n1 2 0\n")
    L = compile_instance(f)
    rows, ok = [], True
    for asg in ((False, False), (False, True), (True, False), (True, True)):
        S = assignment_to_subset(L, asg)
        sat = f.count_satisfied(asg)
        good = len(S) == L.n1 + 5 - sat and is_reduced_training_set(L.point_set, S).equivalent
        ok &= good
        rows.append(f"{''.join('TF'[not v] for v in asg)}:{len(S)}")
    elapsed = time.perf_counter() - start
    report(9, ok and elapsed < 600,
           f"n={L.point_set.n} n1={L.n1} sizes {' '.join(rows)}, {elapsed:.0f}s")


def test_criterion_10_bend_exactness(report):
    pyth = 11 ** 2 + 60 ** 2 == 61 ** 2
    c, s = DEFAULT.bend_cos, DEFAULT.bend_sin
    R = ((c, -s), (s, c))
    M = ((F(1), F(0)), (F(0), F(1)))
    for _ in range(36):
        M = tuple(tuple(sum(M[i][k] * R[k][j] for k in range(2)) for j in range(2)) for i in range(2))
    rational = all(isinstance(x, F) for row in M for x in row)
    orthogonal = (M[0][0] ** 2 + M[1][0] ** 2 == 1 and M[0][0] * M[0][1] + M[1][0] * M[1][1] == 0
                  and M[0][0] * M[1][1] - M[0][1] * M[1][0] == 1)
    # the same 36 bends applied to a vector one step at a time
    v = (F(1), F(0))
    for _ in range(36):
        v = rotate(v, c, s)
    agrees = v == (M[0][0], M[1][0])
    report(10, pyth and rational and orthogonal and agrees,
           f"11^2+60^2=61^2 {pyth}; 36-fold bend exact={rational and orthogonal}, "
           f"denominator 61^36={M[0][0].denominator == 61 ** 36}")
