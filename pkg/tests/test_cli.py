from __future__ import annotations

import json

from staircase import cli
from staircase.objects import decompose, parse_tree, rank_one
from staircase.oracle import Failure, VerificationReport

BIG_IDEAL = "x^9,x^7y^2,x^6y^4,x^4y^5,x^3y^6,y^8"
CHECKER_IDEAL = "x^7,x^6y,x^2y^3,xy^4,y^5"


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_slope_checker_table(capsys):
    code, out, _ = run(capsys, "slope", CHECKER_IDEAL)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "Z: rows 7,6,6,2,1 (degree 22)"
    assert "  mu_3 = 19/3" in lines
    assert "  mu'_1 = 4" in lines
    assert lines[-1] == "mu(Z) = 19/3 (horizontal, k=3)"


def test_slope_approx_flag(capsys):
    code, out, _ = run(capsys, "slope", CHECKER_IDEAL, "--approx")
    assert code == 0
    assert out.splitlines()[-1] == "mu(Z) = 6.33333 (horizontal, k=3)"


def test_interp_pinned_line(capsys):
    code, out, _ = run(capsys, "interp", BIG_IDEAL)
    assert code == 0
    assert out.splitlines()[-1] == "mu = 43/5, Delta = 72/25"


def test_wall_pinned_output(capsys):
    code, out, _ = run(capsys, "wall", BIG_IDEAL)
    assert code == 0
    lines = out.splitlines()
    assert "  sub = I(4,3,3)(-5)" in lines
    assert "  quotient = I(9,9,7,7,6 in 5L)" in lines
    assert "center = -101/10" in lines
    assert "radius^2 = 601/100" in lines


def test_decompose_empty_scheme_is_domain_error(capsys):
    code, out, err = run(capsys, "decompose", "rows:0")
    assert code == 3
    assert out == ""
    assert "empty scheme" in err


def test_parse_error_reports_position(capsys):
    code, _, err = run(capsys, "slope", "x^2,,y")
    assert code == 2
    assert "position" in err


def test_decompose_json_round_trips(capsys):
    code, out, _ = run(capsys, "decompose", "rows: 4,3,3", "--format", "json")
    assert code == 0
    assert parse_tree(out) == decompose(rank_one((4, 3, 3)))
    payload = json.loads(out)
    assert payload["object"]["type"] == "rank1"


def test_decompose_dot_output(capsys):
    code, out, _ = run(capsys, "decompose", "x,y", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph")
    assert 'label="sub"' in out
    assert 'label="quotient"' in out


def test_decompose_text_default(capsys):
    code, out, _ = run(capsys, "decompose", "x,y")
    assert code == 0
    assert out.splitlines()[0].startswith("I(1)")
    assert "O(-2)[1]" in out


def test_dual_pinned(capsys):
    code, out, _ = run(capsys, "dual", "rows: 7,7,7,7,6")
    assert code == 0
    assert out.splitlines() == ["F = F(7,7,7,7,6 in 5x7)", "dual = I(1)(12)[-1]"]


def test_dual_with_explicit_box(capsys):
    code, out, _ = run(capsys, "dual", "rows: 3,1", "--lines", "2", "--colines", "3")
    assert code == 0
    assert out.splitlines()[-1] == "dual = I(2)(5)[-1]"


def test_dual_box_too_small(capsys):
    code, _, err = run(capsys, "dual", "rows: 3,1", "--lines", "1")
    assert code == 3
    assert "box" in err


def test_resolution_display_and_betti(capsys):
    code, out, _ = run(capsys, "resolution", "x^5,x^4y^2,x^3y^3,y^5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "0 -> O(-7)^2 (+) O(-8) -> O(-5)^2 (+) O(-6)^2 -> I_Z -> 0"
    assert "betti:" in lines
    assert lines[-1] == " b1  0  0  2  1"


def test_resolution_matrix_flag(capsys):
    code, out, _ = run(capsys, "resolution", "x,y", "--matrix")
    assert code == 0
    assert "[  y ]" in out
    assert "[ -x ]" in out


def test_verify_single_check(capsys):
    code, out, _ = run(capsys, "verify", "--max-degree", "6", "--check", "rootwall")
    assert code == 0
    assert "check: rootwall" in out
    assert "status: pass" in out


def test_verify_writes_report_file(capsys, monkeypatch, tmp_path):
    path = tmp_path / "report.txt"
    monkeypatch.setenv(cli.REPORT_PATH_VAR, str(path))
    code, out, _ = run(capsys, "verify", "--max-degree", "5", "--check", "purity")
    assert code == 0
    assert path.read_text() == out


def test_verify_failure_exit_code(capsys, monkeypatch):
    broken = VerificationReport(
        "nesting", 6, 3, (Failure((2, 1), "made-up failure"),), 0.0
    )
    monkeypatch.setattr(cli, "run_check", lambda *a, **k: broken)
    code, out, err = run(capsys, "verify", "--check", "nesting")
    assert code == 1
    assert "made-up failure" in out
    assert "FAILED" in err


def test_usage_errors(capsys):
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, "--help")[0] == 0
