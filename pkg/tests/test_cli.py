import json

import pytest

from chromwin.cli import detect_format, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_bounds_text(capsys):
    code, out, _ = run(capsys, "bounds", "--theorem", "1", "--r", "4", "--delta", "3/5")
    assert code == 0
    assert out.strip() == "8/25 (0.32), regime=upper"


def test_bounds_decimal_and_json(capsys):
    code, out, _ = run(capsys, "bounds", "--theorem", "2", "--r", "4", "--delta", "0.5", "--json")
    d = json.loads(out)
    assert code == 0 and d["value"] == "5/16" and d["regime"] == "in-range"


def test_bounds_rejects_repeating_decimal(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bounds", "--theorem", "1", "--r", "4", "--delta", "0.333..."])
    assert exc.value.code == 2


def test_sweep_csv(capsys, tmp_path):
    out_file = tmp_path / "s.csv"
    code, _, _ = run(capsys, "sweep", "--theorem", "1", "--r", "4", "--from", "1/2", "--to", "3/5",
                     "--step", "1/100", "--out", str(out_file))
    lines = out_file.read_text().splitlines()
    assert code == 0 and lines[0] == "delta,value,regime" and len(lines) == 12


def test_construct(capsys, tmp_path):
    g = tmp_path / "g.txt"
    code, out, _ = run(capsys, "construct", "eg", "--r", "4", "--delta", "1/3", "--n", "500", "--core", "c5",
                       "--out", str(g), "--json")
    rep = json.loads(out)
    assert code == 0 and rep["n"] == 500 and rep["clique_number"] <= 3
    assert g.read_text().splitlines()[0] == f"500 {rep['edges']}"


def test_construct_bad_core(capsys):
    code, _, err = run(capsys, "construct", "bh-star", "--r", "4", "--delta", "3/5", "--n", "100", "--core", "c5")
    assert code == 2 and "error" in err


def test_classify_k4(capsys, tmp_path):
    f = tmp_path / "k4.txt"
    f.write_text("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    code, out, _ = run(capsys, "classify", "--in", str(f))
    assert code == 0 and "3/5" in out


def test_classify_graph6_json(capsys, tmp_path):
    f = tmp_path / "c5.g6"
    f.write_text("Dhc\n")
    assert detect_format(f.read_text()) == "graph6"
    code, out, _ = run(capsys, "classify", "--in", str(f), "--json")
    d = json.loads(out)
    assert code == 0 and d["value"] == "0" and d["verified"]


def test_symmetrize(capsys, tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("4 2\n0 3\n1 2\n")
    code, out, err = run(capsys, "symmetrize", "--in", str(f), "--set", "0,1,3", "--json")
    d = json.loads(out)
    assert code == 0 and d["edges_after"] == 3 and d["mode"] == "current"
    code, out, _ = run(capsys, "symmetrize", "--in", str(f), "--set", "0,1,3", "--mode", "frozen", "--json")
    assert json.loads(out)["edges_after"] == 0


def test_missing_file(capsys):
    code, _, err = run(capsys, "classify", "--in", "/nonexistent/x")
    assert code == 2 and "cannot read" in err


def test_verify_pass_and_fail(capsys, tmp_path):
    code, out, err = run(capsys, "verify", "lemma-basic", "--r", "3", "--t", "2", "--n-max", "4")
    assert code == 0 and "PASS" in out and "wall time" in err
    rep = tmp_path / "z.json"
    code, out, _ = run(capsys, "verify", "zykov", "--trials", "400", "--mode", "frozen", "--seed", "0",
                       "--out", str(rep))
    assert code == 1 and "FAIL" in out
    assert json.loads(rep.read_text())["violation_count"] > 0


def test_verify_needs_r(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "aes"])
    assert exc.value.code == 2


def test_verify_hall_json(capsys):
    code, out, _ = run(capsys, "verify", "hall", "--a-max", "2", "--b-max", "3", "--json")
    d = json.loads(out)
    assert code == 0 and d["passed"] and d["corpus"]["2x3"] == 64
