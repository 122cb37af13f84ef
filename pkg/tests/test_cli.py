import json
import subprocess
import sys

import pytest

from cgoppa import analysis
from cgoppa.cli import main

F3_FLAGS = ["--field", "GF(3)", "--a", "1", "--b", "2", "--n", "2", "--s", "1", "--r", "1"]
F4_THIRD = ["--field", "GF(2^2; 1,1,1)", "--a", "1", "--b", "a", "--n", "3", "--s", "1", "--r", "1"]
F5_HALF = ["--field", "GF(5)", "--a", "2", "--b", "3", "--n", "4", "--s", "1", "--r", "2"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct(capsys):
    assert run(capsys, "construct", *F3_FLAGS)[:2] == (0, "z+1, z+2\n")
    code, out, _ = run(capsys, "construct", "--field", "GF(5)", "--a", "1", "--b", "2", "--n", "3", "--s", "2", "--r", "2")
    assert code == 0 and out.strip() == "z^2+2z+1, z^2+4z+4, z^2+3z+1"


def test_construct_rejects_r_not_below_n(capsys):
    code, _, err = run(capsys, "construct", "--field", "GF(5)", "--a", "1", "--b", "2", "--n", "3", "--s", "2", "--r", "3")
    assert code == 1 and "r < n" in err


def test_construct_prints_basic_form(tmp_path, capsys):
    spec = {
        "field": "GF(3)",
        "sections": [{"alpha": "1", "beta": "0"}, {"alpha": "2", "beta": "0"}, {"alpha": "0", "beta": "1"}],
        "s": 1,
        "r": 2,
    }
    path = tmp_path / "c.json"
    path.write_text(json.dumps(spec))
    code, out, _ = run(capsys, "construct", "--spec", str(path))
    assert code == 0 and "basic: " in out
    code, out, _ = run(capsys, "construct", "--spec", str(path), "--format", "json")
    assert "basic_generator_matrix" in json.loads(out)


def test_analyze(capsys):
    code, out, _ = run(capsys, "analyze", *F4_THIRD, "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["d_free"] == 6 and rep["is_mds"] is True
    code, out, _ = run(capsys, "analyze", *F5_HALF, "--format", "json")
    rep = json.loads(out)
    assert (rep["delta"], rep["d_free"]) == (3, 8)
    code, out, _ = run(capsys, "analyze", *F5_HALF)
    assert "free distance:    8" in out and "rate k/n:         1/2" in out


def test_analyze_bad_custom_spec(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"field": "GF(3)", "sections": [{"alpha": "1", "beta": "1"}] * 2, "s": 0, "r": 1}))
    assert run(capsys, "analyze", "--spec", str(path))[0] == 1
    assert run(capsys, "analyze", "--spec", str(tmp_path / "missing.json"))[0] == 1


def test_analyze_inconsistency_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(analysis, "free_distance_search", lambda G: 1)
    code, _, err = run(capsys, "analyze", *F3_FLAGS)
    assert code == 2 and "inconsistency" in err


def test_encode(capsys):
    assert run(capsys, "encode", *F3_FLAGS, "--message", "1")[:2] == (0, "z+1, z+2\n")
    # (z+1)(z+1) = z^2+2z+1 and (z+1)(z+2) = z^2+3z+2 = z^2+2 over GF(3)
    assert run(capsys, "encode", *F3_FLAGS, "--message", "z+1")[:2] == (0, "z^2+2z+1, z^2+2\n")
    code, out, _ = run(capsys, "encode", *F3_FLAGS, "--message", "z", "--format", "json")
    assert json.loads(out) == {"codeword": ["z^2+z", "z^2+2z"], "weight": 4}
    assert run(capsys, "encode", *F3_FLAGS, "--message", "1; z")[0] == 1


def test_verify_reference_codes(capsys):
    code, out, _ = run(capsys, "verify-paper")
    assert code == 0 and "5/5 pass" in out
    code, out, err = run(capsys, "verify-paper", "--corrupt", "1")
    assert code == 2 and "F4 rate 1/3" in err and "4/5 pass" in out
    code, out, _ = run(capsys, "verify-paper", "--format", "json")
    reports = json.loads(out)
    assert code == 0 and len(reports) == 5
    assert [(r["k"], r["n"], r["delta"], r["d_free"]) for r in reports] == [
        (1, 2, 1, 4),
        (1, 3, 1, 6),
        (1, 3, 2, 9),
        (2, 3, 1, 3),
        (2, 4, 3, 8),
    ]


def test_json_round_trip(tmp_path, capsys):
    for flags in (F3_FLAGS, F4_THIRD, F5_HALF):
        _, built, _ = run(capsys, "construct", *flags, "--format", "json")
        path = tmp_path / "spec.json"
        path.write_text(built)
        _, direct, _ = run(capsys, "analyze", *flags, "--format", "json")
        _, reread, _ = run(capsys, "analyze", "--spec", str(path), "--format", "json")
        assert json.loads(direct) == json.loads(reread)


def test_usage_errors(capsys, tmp_path):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["analyze", "--format", "xml", *F3_FLAGS])
    assert exc.value.code == 1
    assert run(capsys, "analyze", "--field", "GF(3)")[0] == 1
    assert run(capsys, "analyze", "--spec", str(tmp_path / "x.json"), *F3_FLAGS)[0] == 1
    assert run(capsys, "analyze", *F3_FLAGS[:1], "GF(6)", *F3_FLAGS[2:])[0] == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cgoppa", "construct", *F3_FLAGS], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and proc.stdout == "z+1, z+2\n"
