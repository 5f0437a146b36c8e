import random
from fractions import Fraction as F

import pytest

from conftest import brute_minimum, pset, random_instance
from nnreduce.equivalence import is_reduced_training_set
from nnreduce.generators import collinear, degenerate_grid, random_gp
from nnreduce.model import classify
from nnreduce.relevant import (GeneralPositionError, reduce_general_position,
                               relevant_points_by_definition, relevant_points_by_walls)

A, B = 1, 2


def test_two_points_both_relevant():
    P = pset(((0, 0), A), ((2, 0), B))
    assert relevant_points_by_definition(P).indices == (0, 1)
    assert relevant_points_by_walls(P).indices == (0, 1)


def test_single_label_has_none():
    P = pset(((0, 0), A), ((1, 0), A), ((0, 3), A))
    assert relevant_points_by_definition(P).indices == ()
    assert relevant_points_by_walls(P).indices == ()


def test_1d_example():
    P = pset((0, A), (1, A), (2, B))
    assert relevant_points_by_definition(P).indices == (1, 2)
    assert relevant_points_by_walls(P).indices == (1, 2)


def test_collinear_example():
    P = pset(((0, 0), A), ((2, 0), B), ((4, 0), A))
    assert relevant_points_by_walls(P).indices == (0, 1, 2)
    assert relevant_points_by_definition(P).indices == (0, 1, 2)


def test_single_point():
    P = pset(((3, 3), A))
    assert relevant_points_by_walls(P).indices == ()
    assert relevant_points_by_definition(P).indices == ()


def test_witnesses_verify():
    P = pset(((0, 0), A), ((2, 0), B), ((1, 3), A), ((5, 1), B))
    rep = relevant_points_by_definition(P)
    for k, q in rep.witnesses.items():
        S = P.subset([j for j in range(P.n) if j != k])
        assert classify(q, P) != classify(q, S)
    for k, w in relevant_points_by_walls(P).witnesses.items():
        assert k in w.pair and w.is_decision


def test_general_position_example():
    P = pset(((0, 0), A), ((2, 0), B), ((1, 5), B))
    cert = reduce_general_position(P)
    assert cert.verdict.equivalent
    k, sols = brute_minimum(P)
    assert sols == [cert.subset]
    assert set(cert.subset) == set(relevant_points_by_definition(P).indices)


def test_general_position_single_label():
    P = pset(((0, 0), A), ((2, 0), A), ((1, 5), A))
    cert = reduce_general_position(P)
    assert cert.single_label and cert.subset == (0,) and cert.relevant == ()
    assert cert.verdict.equivalent
    assert brute_minimum(P)[0] == 1


def test_square_rejected_with_witness():
    P = pset(((0, 0), A), ((1, 0), B), ((1, 1), A), ((0, 1), B))
    with pytest.raises(GeneralPositionError) as e:
        reduce_general_position(P)
    assert e.value.report.kind == "cocircular"


def test_routes_agree_on_mixed_families():
    rng = random.Random(21)
    cases = []
    for s in range(8):
        cases.append(random_gp(rng.randint(3, 9), m=rng.choice([2, 3]), seed=s, box=60))
        cases.append(degenerate_grid(rng.randint(2, 3), rng.randint(2, 4), m=2, seed=s))
        cases.append(collinear(rng.randint(2, 7), m=2, seed=s))
        cases.append(random_instance(rng, rng.randint(2, 8), m=2))
    for P in cases:
        w = relevant_points_by_walls(P).indices
        assert w == relevant_points_by_definition(P).indices
        if w:
            assert is_reduced_training_set(P, w).equivalent
