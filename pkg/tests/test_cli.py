import json
import subprocess
import sys

import jsonschema
import pytest

from idealkit import cli
from idealkit import examples as ex
from idealkit.report import render_text, schema

EX2 = str(ex.resources.files("idealkit").joinpath("problems/ex2.txt"))
EX1 = str(ex.resources.files("idealkit").joinpath("problems/ex1.txt"))


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    doc = json.loads(out) if out else None
    if doc is not None:
        jsonschema.validate(doc, schema())
    return code, doc, err


@pytest.fixture
def simple(tmp_path):
    p = tmp_path / "simple.txt"
    p.write_text("ring x1 | y1\nI: x1\nJ: y1\n")
    return str(p)


def test_power_decomp_ex2(capsys):
    code, doc, _ = run_json(capsys, "power-decomp", EX2, "--n", "2")
    assert code == 0 and doc["verdict"] == "PASS" and doc["regime"] == "monomial"
    comps = doc["results"]["components"]
    assert len(comps) == 4
    assert [c["label"] for c in comps if c["redundant"]] == ["P2+Q2"]
    assert len(doc["results"]["ass"]["2"]) == 3


def test_ass_simple(capsys, simple):
    code, doc, _ = run_json(capsys, "ass", simple, "--n", "1")
    assert code == 0 and doc["results"]["ass"] == {"1": ["(x1, y1)"]}


@pytest.mark.parametrize("name,n", [("ex1", 1), ("ex2", 1), ("ex2", 2), ("ex2", 3)])
def test_examples_match_golden(capsys, name, n):
    code, doc, _ = run_json(capsys, "examples", "run", name, "--n", str(n))
    assert code == 0 and doc["golden"] == "match" and doc["verdict"] == "PASS"


def test_ex1_rejects_deeper_powers(capsys):
    code, out, err = run(capsys, "examples", "run", "ex1", "--n", "2")
    assert code == 1 and out == "" and "supports" in err


def test_golden_mismatch_detected(capsys, tmp_path, monkeypatch):
    monkeypatch.setattr(ex, "GOLDEN_DIR", tmp_path)
    code, doc, _ = run_json(capsys, "examples", "run", "ex2", "--n", "1")
    assert code == 0 and doc["golden"] == "missing"
    run_json(capsys, "examples", "run", "ex2", "--n", "1", "--regenerate-golden")
    path = tmp_path / "ex2_n1.json"
    stored = json.loads(path.read_text())
    stored["results"]["components"][0]["redundant"] = True
    path.write_text(json.dumps(stored))
    code, doc, _ = run_json(capsys, "examples", "run", "ex2", "--n", "1")
    assert code == 2 and doc["golden"] == "mismatch" and doc["verdict"] == "FAIL"


def test_deterministic(capsys):
    a = run(capsys, "ass-powers", EX2, "--nmax", "3", "--json")
    b = run(capsys, "ass-powers", EX2, "--nmax", "3", "--json")
    assert a == b


def test_timings_only_on_request(capsys):
    _, doc, _ = run_json(capsys, "ass", EX2, "--n", "1")
    assert "timings" not in doc
    _, doc, _ = run_json(capsys, "ass", EX2, "--n", "1", "--timings")
    assert doc["timings"]["total"] >= 0


@pytest.mark.parametrize("argv", [
    ["gb", EX1], ["gb", EX2, "--order", "lex"], ["decompose", EX2, "--n", "2"],
    ["ass", EX1], ["ass-powers", EX2, "--nmax", "4"], ["symbolic-power", EX1, "--n", "2"],
    ["persistence", EX2, "--nmax", "3"], ["power-decomp", EX1], ["power-decomp", EX2, "--no-verify"],
    ["verify-lemmas", "--count", "2"],
])
def test_commands_emit_valid_reports(capsys, argv):
    code, doc, _ = run_json(capsys, *argv)
    assert code == 0 and doc["verdict"] == "PASS"
    assert render_text(doc).endswith("verdict: PASS\n")


def test_symbolic_power_report(capsys):
    _, doc, _ = run_json(capsys, "symbolic-power", EX1, "--n", "2")
    assert doc["results"]["strictly_contains_power"] is True


def test_symbolic_power_with_declared_prime(capsys):
    code, doc, _ = run_json(capsys, "symbolic-power", EX1, "--n", "2", "--prime", "P1", "--sat", "x3")
    assert code == 0 and doc["results"]["strictly_contains_power"] is False


def test_persistence_report(capsys):
    _, doc, _ = run_json(capsys, "persistence", EX2, "--nmax", "3")
    assert doc["results"]["steps"] == {"2": False, "3": True}
    assert doc["results"]["persistent"] is False


def test_verify_lemmas_failure_exit(capsys):
    code, doc, _ = run_json(capsys, "verify-lemmas", "--count", "2", "--inject-failure")
    assert code == 2 and doc["verdict"] == "FAIL"
    failing = doc["results"]["suites"][0]["failing_instances"]
    assert failing == ["disjoint-intersection/0/0", "disjoint-intersection/0/1"]


def test_verify_lemmas_empty(capsys):
    code, doc, _ = run_json(capsys, "verify-lemmas", "--count", "0")
    assert code == 0 and all(s["passed"] == 0 for s in doc["results"]["suites"])


@pytest.mark.parametrize("argv", [
    ["nonsense"], ["ass"], ["ass", "/nonexistent/file.txt"], ["ass", EX2, "--n", "0"],
    ["ass", EX2, "--n", "two"], ["examples", "run", "ex3"], ["decompose", EX1],
    ["symbolic-power", EX1, "--prime", "Z9"], ["symbolic-power", EX1, "--sat", "y1^3 - y2*y3"],
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == "" and err


def test_bad_problem_file(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("ring x1 | y1\nI: x1\nJ: y1 + x1\n")
    code, out, err = run(capsys, "ass", str(p))
    assert code == 1 and out == "" and "line 3, column 9" in err


def test_nonmonomial_without_table(capsys, tmp_path):
    p = tmp_path / "curve.txt"
    p.write_text("ring x1 | y1 y2\nI: x1\nJ: y1^2 - y2\n")
    code, out, err = run(capsys, "power-decomp", str(p))
    assert code == 1 and "table" in err


def test_invalid_table_is_verification_failure(capsys, tmp_path):
    p = tmp_path / "wrong.txt"
    p.write_text("ring x1 x2 | y1\nI: x1^2*x2\nJ: y1\n"
                 "prime I P1: x1\nprime I P2: x2\n"
                 "component I 1 P1: x1^2\ncomponent I 1 P2: x2^2\n")
    code, doc, _ = run_json(capsys, "power-decomp", str(p))
    assert code == 2 and doc["verdict"] == "FAIL"


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "idealkit.cli", "ass", EX2, "--n", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "verdict: PASS" in proc.stdout
