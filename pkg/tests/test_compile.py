"""End-to-end compilation of small formulas.  Each compile runs its own
build-time checks; the assignments are then checked with the oracle."""

import itertools

import pytest

from nnreduce.equivalence import is_reduced_training_set
from nnreduce.reduction import Max2SatInstance, NotEmbeddable, assignment_to_subset, compile_instance
from nnreduce.reduction.compile import max_coordinate_bits


@pytest.fixture(scope="module")
def unit_negative():
    return compile_instance(Max2SatInstance.from_text("p vcmax2sat 1 1 1\n-1 0\n"))


def test_unit_negative_clause(unit_negative):
    L = unit_negative
    assert L.n2 == 5
    P = L.point_set
    for value, expected in ((False, L.n1 + 4), (True, L.n1 + 5)):
        S = assignment_to_subset(L, [value])
        assert len(S) == expected
        assert is_reduced_training_set(P, S).equivalent


def test_manifest(unit_negative):
    man = unit_negative.manifest()
    assert man["n2"] == 5 and man["target_for_k"] == man["n1"] + 5 - 1
    r = man["ranges"]
    assert r["x0"][0] == 0 and r["x0"][1] == r["C1"][0] and r["C1"][1] == man["n"]
    assert man["max_coordinate_bits"] <= 64
    assert unit_negative.verification["x0"]["equivalent"] == {"T": True, "F": True}


def test_n2_scales_with_clauses():
    f = Max2SatInstance.from_text("p vcmax2sat 3 3 2\n1 2 0\n-2 3 0\n1 -3 0\n")
    L = compile_instance(f, verify=False)
    assert L.n2 == 15
    assert max_coordinate_bits(L.point_set) < 64
    sizes = set()
    for asg in itertools.product([False, True], repeat=3):
        S = assignment_to_subset(L, asg)
        assert len(S) == L.target_size(f.count_satisfied(asg))
        sizes.add(len(S))
    assert min(sizes) == L.n1 + 15 - 3


def test_unembeddable_rejected():
    f = Max2SatInstance.from_text("p vcmax2sat 6 3 1\n1 4 0\n2 5 0\n3 6 0\n")
    with pytest.raises(NotEmbeddable):
        compile_instance(f)


def test_assignment_length_checked(unit_negative):
    with pytest.raises(ValueError):
        assignment_to_subset(unit_negative, [True, False])
