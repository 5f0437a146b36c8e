import random
from fractions import Fraction as F

import pytest

from conftest import brute_minimum, oracle, pset, random_instance
from nnreduce.exact import (SearchBudget, all_minimum_subsets, decide, min_reduced,
                            wall_pair_families)
from nnreduce.generators import random_gp
from nnreduce.relevant import relevant_points_by_walls
from nnreduce.solver1d import solve_1d

A, B = 1, 2


def test_min_reduced_examples():
    r = min_reduced(pset(((0, 0), A), ((2, 0), B)))
    assert r.size == 2 and r.optimal
    r = min_reduced(pset(((0, 0), A), ((2, 0), B), ((4, 0), A)))
    assert r.size == 3 and r.optimal


def test_general_position_matches_relevant():
    for s in range(6):
        P = random_gp(8, 2, seed=s, box=80)
        r = min_reduced(P)
        assert r.optimal and set(r.subset) == set(relevant_points_by_walls(P).indices)


def test_decide_examples():
    two = pset(((0, 0), A), ((2, 0), B))
    assert decide(two, 1).answer == "no"
    d = decide(two, 2)
    assert d.answer == "yes" and oracle(two, d.certificate).equivalent
    col = pset(((0, 0), A), ((2, 0), B), ((4, 0), A))
    assert decide(col, 2).answer == "no"
    with pytest.raises(ValueError):
        decide(two, 0)


def test_budget_exhaustion_returns_valid_subset():
    P = random_instance(random.Random(2), 12, m=2)
    r = min_reduced(P, SearchBudget(node_limit=1))
    assert not r.optimal
    assert oracle(P, r.subset).equivalent
    assert decide(P, 3, SearchBudget(node_limit=1)).answer == "unknown"


def test_budget_validation():
    with pytest.raises(ValueError):
        SearchBudget(max_size=0)
    with pytest.raises(ValueError):
        SearchBudget(node_limit=0)


def test_families_are_mirror_pairs():
    from nnreduce.geometry import bisector

    P = pset(((0, 0), A), ((1, 0), B), ((1, 1), A), ((0, 1), B), ((2, 0), A), ((2, 1), B))
    for w, pairs in wall_pair_families(P):
        line = bisector(P.points[w.i], P.points[w.j])
        assert (min(w.i, w.j), max(w.i, w.j)) in {tuple(sorted(p)) for p in pairs}
        for a, b in pairs:
            assert bisector(P.points[a], P.points[b]) == line


def test_against_brute_force():
    rng = random.Random(3)
    for it in range(40):
        d = 1 if it % 4 == 3 else 2
        P = random_instance(rng, rng.randint(2, 8), m=rng.choice([2, 3]), d=d)
        k, sols = brute_minimum(P)
        r = min_reduced(P)
        assert r.optimal and r.size == k and oracle(P, r.subset).equivalent
        found, complete = all_minimum_subsets(P)
        assert complete and found == sorted(sols)
        if d == 1:
            assert solve_1d(P).size == k


def test_decide_monotone():
    rng = random.Random(8)
    for _ in range(10):
        P = random_instance(rng, rng.randint(3, 7))
        answers = [decide(P, k).answer for k in range(1, P.n + 1)]
        first = answers.index("yes")
        assert all(a == "yes" for a in answers[first:])
        assert all(a == "no" for a in answers[:first])
