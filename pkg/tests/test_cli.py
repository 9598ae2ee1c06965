import csv
import json

import numpy as np
import pytest

from ttfun.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_encode_builtin_sawtooth(tmp_path, capsys):
    out = tmp_path / "saw.json"
    code, stdout, _ = run(capsys, "encode", "sawtooth", "--depth", "5", "--degree", "1", "--out", str(out))
    assert code == 0
    assert "[2, 2, 2, 2, 2]" in stdout
    doc = json.loads(out.read_text())
    assert doc["depth"] == 5


def test_encode_polynomial_builtin(tmp_path, capsys):
    out = tmp_path / "p.json"
    code, stdout, _ = run(capsys, "encode", "poly:0,0,1", "--depth", "4", "--base", "2", "--out", str(out))
    assert code == 0
    code, stdout, _ = run(capsys, "eval", str(out), "0.5")
    assert code == 0
    assert abs(float(stdout.split()[-1]) - 0.25) < 1e-12


def test_encode_spline_json(tmp_path, capsys):
    spec = tmp_path / "spline.json"
    doc = {
        "base": 2,
        "knots": [[1, 2], [5, 3]],  # 1/4 and 5/8: three pieces
        "pieces": [[0.0, 1.0], [1.0, -1.0, 0.5], [0.25, 0.5]],
    }
    spec.write_text(json.dumps(doc))
    out = tmp_path / "train.json"
    code, stdout, _ = run(capsys, "encode", str(spec), "--out", str(out))
    assert code == 0
    # free-knot bound: ranks <= mbar + N = 2 + 3
    ranks = json.loads(stdout.splitlines()[1].split("ranks: ")[1])
    assert max(ranks) <= 5


def test_encode_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "encode", str(bad), "--out", str(tmp_path / "x.json"))
    assert code == 2
    assert err.startswith("error:")


def test_encode_non_badic_knot(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"base": 2, "knots": [1 / 3], "pieces": [[1.0], [2.0]]}))
    code, _, err = run(capsys, "encode", str(bad), "--out", str(tmp_path / "x.json"))
    assert code == 3
    assert err.startswith("error:") and "0.33" in err


def test_ranks_and_complexity_commands(tmp_path, capsys):
    out = tmp_path / "saw.json"
    run(capsys, "encode", "sawtooth", "--depth", "4", "--degree", "1", "--out", str(out))
    code, stdout, _ = run(capsys, "ranks", str(out))
    assert code == 0 and json.loads(stdout)["ranks"] == [2, 2, 2, 2]
    code, stdout, _ = run(capsys, "complexity", str(out))
    rep = json.loads(stdout)
    assert code == 0 and rep["cost_C"] <= 8 * 4 + 2 * 1 + 2


def test_audit_instance_and_unknown(tmp_path, capsys):
    code, stdout, _ = run(capsys, "audit", "--instance", "fixed_knot", "--b", "3", "--d", "3", "--m", "0")
    assert code == 0 and "0 violations" in stdout
    code, _, err = run(capsys, "audit", "--instance", "bogus")
    assert code == 4 and err.startswith("error:")


def test_study_unknown_target(capsys):
    code, _, err = run(capsys, "study", "adaptive", "--target", "nope")
    assert code == 4 and err.startswith("error:")


def test_study_csv_determinism(tmp_path, capsys):
    args = ["study", "sawtooth", "--target", "sawtooth", "--dmax", "6", "--seed", "7"]
    c1 = tmp_path / "a.csv"
    c2 = tmp_path / "b.csv"
    assert run(capsys, *args, "--csv", str(c1))[0] == 0
    assert run(capsys, *args, "--csv", str(c2))[0] == 0
    rows1 = list(csv.reader(c1.open()))
    rows2 = list(csv.reader(c2.open()))
    i = rows1[0].index("seconds")
    strip = lambda rows: [[c for k, c in enumerate(r) if k != i] for r in rows]
    assert strip(rows1) == strip(rows2)
    assert strip(rows1) != rows1  # the timing column was actually dropped


def test_study_json_output(tmp_path, capsys):
    j = tmp_path / "out.json"
    code, _, _ = run(
        capsys, "study", "sawtooth", "--target", "sawtooth", "--dmax", "3", "--json", str(j)
    )
    assert code == 0
    doc = json.loads(j.read_text())
    assert doc["config"]["b"] == 2 and doc["records"]
