import json
from fractions import Fraction as F

import pytest

from conftest import pset
from nnreduce.cli import main
from nnreduce.model import LabelledPointSet, load_instance
from nnreduce.solve import read_subset


@pytest.fixture
def files(tmp_path):
    gp = pset(((0, 0), 1), ((2, 0), 2), ((1, 5), 2))
    grid = LabelledPointSet([(F(x), F(y)) for y in range(3) for x in range(3)],
                            [1, 2, 1, 2, 1, 2, 1, 2, 1], m=2)
    line = pset((0, 1), (2, 2), (4, 1))
    paths = {}
    for name, P in (("gp", gp), ("grid", grid), ("line", line)):
        paths[name] = tmp_path / f"{name}.txt"
        paths[name].write_text(P.to_text())
    return tmp_path, paths


def test_solve_dispatch(files, capsys):
    tmp, p = files
    out = tmp / "s.txt"
    assert main(["solve", str(p["line"]), "-o", str(out), "--explain"]) == 0
    assert read_subset(out.read_text()) == (0, 1, 2)
    assert "method: 1d" in capsys.readouterr().out
    assert main(["solve", str(p["gp"]), "-o", str(out)]) == 0
    assert "general-position" in capsys.readouterr().out
    assert main(["solve", str(p["grid"]), "-o", str(out)]) == 0
    text = capsys.readouterr().out
    assert "method: exact" in text and "NP-hard" in text


def test_solve_budget_exit_code(files):
    tmp, p = files
    assert main(["solve", str(p["grid"]), "--budget-nodes", "1", "-o", str(tmp / "s")]) == 3
    # the partial answer is still an equivalent subset
    assert main(["verify", str(p["grid"]), str(tmp / "s")]) == 0


def test_verify(files, capsys):
    tmp, p = files
    (tmp / "all").write_text("0\n1\n2\n")
    (tmp / "one").write_text("0\n")
    assert main(["verify", str(p["gp"]), str(tmp / "all")]) == 0
    assert main(["verify", str(p["gp"]), str(tmp / "one")]) == 1
    assert "differs at (" in capsys.readouterr().out
    (tmp / "bad").write_text("7\n")
    assert main(["verify", str(p["gp"]), str(tmp / "bad")]) == 2


def test_relevant(files, capsys):
    tmp, p = files
    assert main(["relevant", str(p["grid"]), "--method", "both"]) == 0
    out = capsys.readouterr().out
    lines = [l.split(":")[1] for l in out.strip().splitlines()]
    assert lines[0] == lines[1]


def test_generate_deterministic(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for kind in ("random-gp", "degenerate-grid", "collinear", "random-1d"):
        assert main(["generate", kind, "--seed", "5", "-o", str(a)]) == 0
        assert main(["generate", kind, "--seed", "5", "-o", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()
    assert main(["generate", "random-gp", "--n", "0"]) == 2
    assert main(["generate", "random-1d", "--json", "-o", str(a)]) == 0
    assert load_instance(a).d == 1


def test_render(files):
    tmp, p = files
    (tmp / "sub").write_text("0 1\n")
    svg = tmp / "x.svg"
    assert main(["render", str(p["gp"]), "--subset", str(tmp / "sub"), "--svg", str(svg)]) == 0
    assert svg.read_text().startswith("<?xml")
    assert main(["render", str(p["line"]), "--svg", str(svg)]) == 0


def test_input_errors(tmp_path):
    assert main(["solve", str(tmp_path / "missing.txt")]) == 2
    (tmp_path / "bad.txt").write_text("2 2 3\n0 0 1\n")
    assert main(["solve", str(tmp_path / "bad.txt")]) == 2
    assert main(["nonsense"]) == 2
    (tmp_path / "f.cnf").write_text("p cnf 1 1\n1 0\n")
    assert main(["reduce-sat", str(tmp_path / "f.cnf")]) == 2


def test_reduce_sat_rejects_unembeddable(tmp_path):
    (tmp_path / "f").write_text("p vcmax2sat 6 3 1\n1 4 0\n2 5 0\n3 6 0\n")
    assert main(["reduce-sat", str(tmp_path / "f"), "-o", str(tmp_path / "o")]) == 1


def test_reduce_sat_outputs(tmp_path):
    (tmp_path / "f").write_text("p vcmax2sat 2 1 1\n1 2 0\n")
    out, man, svg = tmp_path / "o.txt", tmp_path / "m.json", tmp_path / "l.svg"
    rc = main(["reduce-sat", str(tmp_path / "f"), "-o", str(out), "--manifest", str(man),
               "--svg", str(svg), "--no-verify"])
    assert rc == 0
    P = load_instance(out)
    m = json.loads(man.read_text())
    assert m["n"] == P.n and m["n2"] == 5 and m["target_for_k"] == m["n1"] + 4
    assert "<svg" in svg.read_text()
