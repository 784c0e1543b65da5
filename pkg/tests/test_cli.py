import json

import pytest

from plm.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_classify_json(capsys):
    code, out = run(capsys, "classify", "xzxyty = xzyxty")
    assert code == 0
    data = json.loads(out)
    assert "M2v" in data["varieties"]


def test_classify_text(capsys):
    code, out = run(capsys, "classify", "xzxyty = xzyxty", "--format", "text")
    assert code == 0
    assert "varieties:" in out and "M2v" in out


def test_equiv(capsys):
    code, out = run(capsys, "equiv", "sylv", "2 1 1", "1 2 1")
    assert code == 0 and out.strip() == "equivalent"

    code, out = run(capsys, "equiv", "sylv", "2 1", "1 2")
    assert code == 0 and out.strip() == "not equivalent"


def test_equiv_strict_exit(capsys):
    code, _ = run(capsys, "equiv", "sylv", "2 1", "1 2", "--strict")
    assert code == 1


def test_consequence_trace(capsys):
    code, out = run(capsys, "consequence", "--basis", "L1,R2", "xxyy = yyxx")
    assert code == 0
    assert out.startswith("derivable:") and "step 1:" in out


def test_consequence_refuted(capsys):
    code, out = run(capsys, "consequence", "--basis", "R2", "L2")
    assert code == 0
    assert "not derivable (complete within content class)" in out


def test_consequence_basis_from_file(capsys, tmp_path):
    basis = tmp_path / "basis.txt"
    basis.write_text("L1\n# a comment\nxyzxty = yxzxty\n")
    code, out = run(capsys, "consequence", "--basis", str(basis), "xxyy = yyxx")
    assert code == 0 and out.startswith("derivable:")


def test_isoterm(capsys):
    code, out = run(capsys, "isoterm", "hypo", "xzxyty")
    assert code == 0 and "isoterm" in out


def test_monoid_table(capsys):
    code, out = run(capsys, "monoid", "J1", "--table")
    assert code == 0 and "4 elements" in out


def test_monoid_check(capsys):
    code, out = run(capsys, "monoid", "J1", "--check", "xyx = yxx")
    assert code == 0 and "satisfies" in out


def test_lattice_dot(capsys):
    code, out = run(capsys, "lattice", "L3", "--dot")
    assert code == 0
    assert out.startswith("digraph L3 {") and out.count("->") == 48


def test_lattice_verify(capsys):
    code, out = run(capsys, "lattice", "L1", "--verify")
    assert code == 0 and "L1: pass" in out


def test_verify_quick(capsys):
    code, out = run(capsys, "verify", "--suite", "quick")
    assert code == 0
    assert "suite quick: pass" in out
    assert out.count("[PASS]") == 12


def test_parse_error_exit_code(capsys):
    code = main(["classify", "xy ="])
    captured = capsys.readouterr()
    assert code == 2 and "error:" in captured.err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 2


def test_env_cap(monkeypatch, capsys):
    monkeypatch.setenv("PLM_CAP", "10")
    code, _ = run(capsys, "equiv", "hs", "1 2 3 4 5 6 7 8 9", "9 8 7 6 5 4 3 2 1")
    assert code == 2  # cap exceeded surfaces as an error
