from __future__ import annotations

import pytest

from staircase.oracle import (
    CHECK_NAMES,
    FAILURE_CAP,
    Failure,
    VerificationReport,
    merge_reports,
    render_report,
    render_reports,
    run_all,
    run_check,
    verify_nesting,
    verify_root_wall,
    verify_triviality_inequalities,
)

BOUND = 12


def comparable(report):
    """Everything except the wall-clock duration."""
    return (report.check, report.degree_bound, report.instances, report.failures)


def test_all_checks_pass():
    for report in run_all(BOUND):
        assert report.passed, render_report(report)
        assert report.instances > 0
        assert report.duration >= 0


def test_ci_rectangle_count():
    report = run_check("ci", 25)
    assert report.passed
    assert report.instances == 325  # all 1 <= a <= b <= 25


def test_zero_bound_is_vacuous():
    report = verify_nesting(0)
    assert report.passed
    assert report.instances == 0


def test_named_wrappers_match_run_check():
    assert comparable(verify_root_wall(8)) == comparable(run_check("rootwall", 8))
    assert comparable(verify_triviality_inequalities(8)) == comparable(
        run_check("triviality", 8)
    )


def test_unknown_check_rejected():
    with pytest.raises(ValueError):
        run_check("nonsense")


def test_shards_merge_to_serial_report():
    serial = run_check("nesting", 10)
    left = run_check("nesting", 10, start=0, stop=7)
    right = run_check("nesting", 10, start=7)
    assert comparable(merge_reports(left, right)) == comparable(serial)
    assert left.instances + right.instances == serial.instances


def test_thread_pool_matches_serial():
    serial = run_check("chern", 10)
    parallel = run_check("chern", 10, workers=3)
    assert comparable(parallel) == comparable(serial)


def test_merge_rejects_mismatched_reports():
    a = run_check("nesting", 6)
    b = run_check("purity", 6)
    with pytest.raises(ValueError):
        merge_reports(a, b)


def test_merge_caps_failures():
    failures = tuple(Failure((1,), f"problem {i}") for i in range(80))
    a = VerificationReport("nesting", 6, 10, failures, 0.1)
    b = VerificationReport("nesting", 6, 10, failures, 0.2)
    merged = merge_reports(a, b)
    assert len(merged.failures) == FAILURE_CAP
    assert merged.instances == 20
    assert merged.duration == pytest.approx(0.3)
    assert not merged.passed


def test_report_text_is_reproducible():
    first = render_report(run_check("rootwall", BOUND))
    second = render_report(run_check("rootwall", BOUND))
    assert first == second
    assert "status: pass" in first
    assert "duration" not in first
    assert "duration" in render_report(run_check("rootwall", 4), show_duration=True)


def test_failure_rendering():
    report = VerificationReport(
        "nesting", 6, 3, (Failure((2, 1), "mu_opt 3 > 2"),), 0.0
    )
    text = render_report(report)
    assert "witness rows:2,1 -- mu_opt 3 > 2" in text
    assert "status: FAIL" in text
    assert "failures: 1" in text


def test_render_reports_joins_all_checks():
    reports = [run_check(name, 4) for name in CHECK_NAMES[:3]]
    text = render_reports(reports)
    for name in CHECK_NAMES[:3]:
        assert f"check: {name}" in text
