from __future__ import annotations

import json
import subprocess
import sys

import pytest

from cycov.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def form_files(tmp_path):
    x = tmp_path / "x.txt"
    x.write_text("1 1,0\n")
    y = tmp_path / "y.txt"
    y.write_text("1 0,1\n")
    quartic = tmp_path / "quartic.txt"
    quartic.write_text("# x y (x - y)(x + y)\n1 3,1\n-1 1,3\n")
    fermat = tmp_path / "fermat.txt"
    fermat.write_text("1 6,0,0\n1 0,6,0\n1 0,0,6\n")
    return {"x": str(x), "y": str(y), "quartic": str(quartic), "fermat": str(fermat)}


def test_picard_uniform_json(capsys):
    code, out, _ = call(capsys, "picard", "uniform", "--n", "1", "--r", "2", "--d", "3", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["order"] == 10 and payload["invariant_factors"] == [10]


def test_text_outputs(capsys):
    assert call(capsys, "dim", "uniform", "--n", "2", "--r", "2", "--d", "3")[1].strip() == "19"
    assert call(capsys, "disc-degree", "--n", "2", "--m", "3")[1].strip() == "12"
    assert call(capsys, "z-bidegree", "--d1", "2", "--d2", "2")[1].strip() == "(2, 2)"
    assert call(capsys, "char", "index", "--n", "1", "--d", "3")[1].strip() == "3"
    out = call(capsys, "picard", "triple", "--d1", "2", "--d2", "2")[1]
    assert "Z/2 x Z/6" in out
    out = call(capsys, "char", "lattice", "--d1", "3", "--d2", "2", "--json")[1]
    assert json.loads(out)["v1"] == [2, 4]
    out = call(capsys, "picard", "hyperelliptic", "--g", "3", "--json")[1]
    assert json.loads(out)["order"] == 28
    out = call(capsys, "dim", "triple", "--d1", "1", "--d2", "1", "--json")[1]
    assert json.loads(out)["dimension"] == -1


def test_smooth_triple_common_zero_exits_zero(capsys, form_files):
    code, out, _ = call(capsys, "smooth", "triple", "--forms", form_files["x"], form_files["x"],
                        "--json")
    assert code == 0 and json.loads(out)["smooth"] is False
    code, out, _ = call(capsys, "smooth", "triple", "--forms", form_files["x"], form_files["y"])
    assert code == 0 and "smooth: True" in out


def test_smooth_uniform(capsys, form_files):
    code, out, _ = call(capsys, "smooth", "uniform", "--form", form_files["quartic"], "--r", "2",
                        "--json")
    assert code == 0 and json.loads(out)["strength"] == "exact"
    code, out, _ = call(capsys, "smooth", "uniform", "--form", form_files["fermat"], "--r", "2",
                        "--field", "7", "--ext-bound", "2", "--json")
    payload = json.loads(out)
    assert code == 0 and payload["smooth"] and payload["strength"] == "bounded"


def test_cover_algebras(capsys, form_files, tmp_path):
    code, out, _ = call(capsys, "cover", "algebra", "uniform", "--form", form_files["quartic"],
                        "--r", "2", "--json")
    assert code == 0 and json.loads(out)["audit"]["passed"]
    h = tmp_path / "h.txt"
    h.write_text("1 1,1\n1 0,0\n")
    code, out, _ = call(capsys, "cover", "algebra", "triple", "--forms", form_files["x"],
                        form_files["y"], "--h", str(h), "--json")
    payload = json.loads(out)
    assert code == 0 and not payload["audit"]["passed"]
    assert payload["audit"]["nonzero_associators"]


def test_gen_witness(capsys):
    code, out, _ = call(capsys, "gen", "witness", "--n", "2", "--m", "4", "--field", "101",
                        "--json")
    payload = json.loads(out)
    assert code == 0 and payload["passed"] and payload["linear_rank"] == 2


def test_domain_error_exit_one(capsys):
    code, _, err = call(capsys, "picard", "triple", "--d1", "4", "--d2", "2")
    assert code == 1
    assert "degenerates to uniform cover; use picard_uniform" in err
    code, _, err = call(capsys, "z-bidegree", "--d1", "5", "--d2", "1")
    assert code == 1 and "invalid branch degrees" in err


def test_usage_error_exit_two(capsys, tmp_path):
    assert call(capsys, "picard", "uniform", "--n", "1")[0] == 2
    assert call(capsys, "frobnicate")[0] == 2
    assert call(capsys, "smooth", "uniform", "--form", str(tmp_path / "missing"), "--r", "2")[0] == 2


def test_output_is_byte_identical():
    argv = [sys.executable, "-m", "cycov", "char", "isom", "--n", "2", "--d", "4",
            "--field", "101", "--seed", "3", "--json"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["passed"]
