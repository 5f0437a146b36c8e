import json
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import pset
from nnreduce.model import (InstanceError, LabelledPointSet, classify, decision_boundary,
                            load_instance, nn_set, voronoi_cell, voronoi_walls)

A, B = 1, 2


def test_nn_set_examples():
    S = pset(((0, 0), A), ((2, 0), A))
    assert nn_set((1, 0), S) == {0, 1}
    S = pset(((0, 0), A), ((9, 9), A))
    assert nn_set((0, 0), S) == {0}
    S = pset(((0, 0), A), ((1, 0), A), ((1, 1), A), ((0, 1), A))
    assert nn_set((F(1, 2), F(1, 2)), S) == {0, 1, 2, 3}


def test_classify_examples():
    assert classify((1, 0), pset(((0, 0), A), ((2, 0), B))) == {A, B}
    assert classify((1, 0), pset(((0, 0), A), ((2, 0), A))) == {A}
    assert classify((5, 5), pset(((0, 0), A), ((2, 0), B))) == {B}


def test_voronoi_cell_examples():
    S = pset(((0, 0), A), ((2, 0), B))
    c = voronoi_cell(0, S)
    assert not c.bounded and c.vertices == ()
    assert c.contains((1, 7)) and not c.contains((F(3, 2), 0))
    S = pset(((0, 0), A), ((2, 0), B), ((1, 10), A))
    c = voronoi_cell(0, S)
    assert c.vertices == ((F(1), F(99, 20)),)


def test_three_point_cells_unbounded_and_disjoint():
    S = pset(((0, 0), A), ((4, 1), B), ((1, 5), A))
    cells = [voronoi_cell(i, S) for i in range(3)]
    assert all(not c.bounded for c in cells)
    for q in [(F(1), F(1)), (F(3), F(3)), (F(-2), F(4))]:
        assert sum(c.interior_contains(q) for c in cells) <= 1


def test_voronoi_walls_examples():
    walls = voronoi_walls(pset(((0, 0), A), ((2, 0), B)))
    assert len(walls) == 1 and walls[0].kind == "line"
    assert walls[0].start == (F(1), F(0)) and walls[0].direction == (0, 1)
    walls = voronoi_walls(pset(((0, 0), A), ((2, 0), B), ((4, 0), A)))
    assert sorted(w.pair for w in walls) == [(0, 1), (1, 2)]
    assert all(w.kind == "line" for w in walls)
    assert voronoi_walls(pset(((0, 0), A))) == []


def test_decision_boundary_examples():
    db = decision_boundary(pset(((0, 0), A), ((2, 0), B)))
    assert len(db) == 1 and db.walls[0].labels == (A, B)
    assert len(decision_boundary(pset(((0, 0), A), ((2, 0), A), ((1, 3), A)))) == 0
    db = decision_boundary(pset((0, A), (2, B), (3, B), (4, A)))
    assert db.points_1d == (F(1), F(7, 2))


def _random_set(rng, n, m=2):
    pts = list({(F(rng.randint(0, 5)), F(rng.randint(0, 5))) for _ in range(n)})
    return LabelledPointSet(pts, [rng.randint(1, m) for _ in pts], m=m)


def test_wall_witness_and_symmetry():
    rng = random.Random(7)
    for _ in range(40):
        S = _random_set(rng, rng.randint(2, 9))
        for w in S.walls:
            assert nn_set(w.witness(), S) == {w.i, w.j}
            assert w.i < w.j
        # walls are stored once per unordered pair
        assert len({w.key + (w.pair,) for w in S.walls}) == len(S.walls)


def test_cell_coverage_matches_brute_force():
    rng = random.Random(11)
    for _ in range(25):
        S = _random_set(rng, rng.randint(2, 8), m=3)
        cells = [voronoi_cell(i, S) for i in range(S.n)]
        for _ in range(30):
            q = (F(rng.randint(-20, 120), 17), F(rng.randint(-20, 120), 17))
            inside = {i for i, c in enumerate(cells) if c.contains(q)}
            assert inside == set(nn_set(q, S))
            assert classify(q, S) == {S.labels[i] for i in inside}


@settings(max_examples=40)
@given(st.lists(st.tuples(st.integers(-6, 6), st.integers(-6, 6)), min_size=1, max_size=8, unique=True))
def test_single_label_has_empty_boundary(raw):
    S = LabelledPointSet([(F(x), F(y)) for x, y in raw], [1] * len(raw), m=2)
    assert len(S.boundary) == 0


def test_instance_validation():
    with pytest.raises(InstanceError):
        LabelledPointSet([(F(0), F(0)), (F(0), F(0))], [1, 2])
    with pytest.raises(InstanceError):
        LabelledPointSet([(F(0), F(0))], [3], m=2)
    with pytest.raises(InstanceError):
        LabelledPointSet([], [])
    with pytest.raises(InstanceError):
        LabelledPointSet.from_text("2 2 2\n0 0 1\n")
    with pytest.raises(InstanceError):
        LabelledPointSet.from_text("2 2 1\n0 x 1\n")


@settings(max_examples=60)
@given(st.lists(st.tuples(st.fractions(min_value=-9, max_value=9, max_denominator=50),
                          st.fractions(min_value=-9, max_value=9, max_denominator=50),
                          st.integers(1, 3)), min_size=1, max_size=10, unique_by=lambda t: t[:2]))
def test_round_trip_text_and_json(rows):
    S = LabelledPointSet([(x, y) for x, y, _ in rows], [c for _, _, c in rows], m=3)
    t = S.to_text()
    assert LabelledPointSet.from_text(t) == S
    assert LabelledPointSet.from_text(t).to_text() == t
    j = S.to_json()
    assert LabelledPointSet.from_json(j) == S
    assert LabelledPointSet.from_json(j).to_json() == j


def test_load_instance_detects_json(tmp_path):
    S = pset(((0, 0), A), (("1/3", 2), B))
    (tmp_path / "a.json").write_text(S.to_json())
    (tmp_path / "a.txt").write_text(S.to_text())
    assert load_instance(tmp_path / "a.json") == S
    assert load_instance(tmp_path / "a.txt") == S
    assert json.loads(S.to_json())["points"][1]["coords"] == ["1/3", "2"]
