"""
Suite runner: selection, tolerance overrides, failure capture, determinism
"""

import math

import pytest
from pydantic import ValidationError

from src.qcore.errors import Divergent
from src.qcore.types import CheckReport
from src.verify.registry import RegisteredCheck
from src.verify.suite import SuiteConfig, SuiteRunner, all_passed, run_suite


def _constant(error):
    def runner(ctx, tol):
        return [CheckReport.build(identity_id="check_constant", observed_error=error, tolerance=tol, witness={})]
    return runner


def _random(ctx, tol):
    value = float(ctx.rng("check_random").random())
    return [CheckReport.build(identity_id="check_random", observed_error=0.0, tolerance=tol,
                              witness={"value": value})]


def _diverges(ctx, tol):
    raise Divergent("|z| < 1", "z=2")


def _crashes(ctx, tol):
    raise ZeroDivisionError("boom")


@pytest.fixture
def registry():
    return [
        RegisteredCheck(name="check_random", tolerance=0.0, runner=_random),
        RegisteredCheck(name="check_constant", tolerance=1e-3, runner=_constant(1e-4)),
        RegisteredCheck(name="check_slow", tolerance=1.0, runner=_constant(0.5), slow=True),
    ]


def test_empty_registry_gives_no_reports():
    assert run_suite(SuiteConfig(), registry=[], progress=False) == []


def test_explicit_empty_selection_runs_nothing(registry):
    assert run_suite(SuiteConfig(include=[]), registry, progress=False) == []
    assert len(run_suite(SuiteConfig(), registry, progress=False)) == 3


def test_reports_sorted_by_identity(registry):
    reports = run_suite(SuiteConfig(), registry, progress=False)
    ids = [report.identity_id for report in reports]
    assert ids == sorted(ids)
    assert all_passed(reports)


def test_same_seed_same_reports(registry):
    first = run_suite(SuiteConfig(seed=5), registry, progress=False)
    second = run_suite(SuiteConfig(seed=5), registry, progress=False)
    other = run_suite(SuiteConfig(seed=6), registry, progress=False)
    assert first == second
    assert first != other


def test_include_exclude_and_slow(registry):
    names = lambda config: [check.name for check in SuiteRunner(config, registry, False).selected()]
    assert names(SuiteConfig(include_slow=False)) == ["check_random", "check_constant"]
    assert names(SuiteConfig(include=["check_slow"], include_slow=False)) == ["check_slow"]
    assert names(SuiteConfig(exclude=["check_random"])) == ["check_constant", "check_slow"]
    assert names(SuiteConfig(include=["check_slow"], exclude=["check_slow"])) == []


def test_tolerance_override_fails_check(registry):
    reports = run_suite(SuiteConfig(include=["check_constant"], tolerances={"check_constant": 1e-5}),
                        registry, progress=False)
    assert [report.passed for report in reports] == [False]
    assert reports[0].tolerance == 1e-5


def test_library_error_becomes_failed_report():
    registry = [RegisteredCheck(name="check_diverges", tolerance=1.0, runner=_diverges)]
    (report,) = run_suite(SuiteConfig(), registry, progress=False)
    assert not report.passed
    assert math.isinf(report.observed_error)
    assert report.diagnostics["code"] == Divergent.code
    assert report.diagnostics["invariant"] == "|z| < 1"


def test_unexpected_error_becomes_failed_report():
    registry = [
        RegisteredCheck(name="check_crashes", tolerance=1.0, runner=_crashes),
        RegisteredCheck(name="check_constant", tolerance=1e-3, runner=_constant(0.0)),
    ]
    reports = run_suite(SuiteConfig(), registry, progress=False)
    assert [report.identity_id for report in reports] == ["check_constant", "check_crashes"]
    assert reports[1].diagnostics["code"] == "ZeroDivisionError"
    assert not all_passed(reports)


def test_config_validation():
    with pytest.raises(ValidationError):
        SuiteConfig(samples=-1)
    with pytest.raises(ValidationError):
        SuiteConfig(tolerances={"check_constant": math.nan})


def test_seed_from_environment(monkeypatch):
    monkeypatch.setenv("QKERNEL_SEED", "123")
    assert SuiteConfig().seed == 123


@pytest.mark.slow
def test_default_registry_passes_at_standard_set():
    reports = run_suite(SuiteConfig(seed=42), progress=False)
    failed = [(r.identity_id, r.observed_error, r.tolerance, r.diagnostics) for r in reports if not r.passed]
    assert reports
    assert not failed, failed
