import pytest

from circuitlab.verify import (
    CheckResult,
    VerificationReport,
    run_suite,
    thread_count,
)


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suite("bogus")


def test_report_serialization():
    r = VerificationReport(
        "demo",
        [
            CheckResult("a", True, "1", "1"),
            CheckResult("b", False, "2", "3", note="sampled"),
        ],
    )
    assert not r.passed
    d = r.to_json_dict()
    assert d["suite"] == "demo"
    assert d["passed"] is False
    assert d["checks"][1]["note"] == "sampled"
    text = r.to_text()
    assert "[PASS] a:" in text and "[FAIL] b:" in text
    assert "suite demo: FAIL" in text


def test_thread_count_env(monkeypatch):
    monkeypatch.delenv("CIRCUITLAB_THREADS", raising=False)
    assert thread_count() == 1
    monkeypatch.setenv("CIRCUITLAB_THREADS", "4")
    assert thread_count() == 4
    monkeypatch.setenv("CIRCUITLAB_THREADS", "0")
    assert thread_count() == 1
    monkeypatch.setenv("CIRCUITLAB_THREADS", "junk")
    assert thread_count() == 1


def test_suite_errors_become_failing_checks(monkeypatch):
    import circuitlab.verify as verify

    def boom(sample=None, seed=None):
        raise RuntimeError("kaput")

    monkeypatch.setitem(verify.SUITES, "demo-boom", boom)
    report = run_suite("demo-boom")
    assert not report.passed
    assert "kaput" in report.checks[0].observed
