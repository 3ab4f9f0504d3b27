"""
Quadrature rules, sampling and the identity checks built on them
"""

import math

import numpy as np
import pytest

from src.polys.params import ParamSet
from src.qcore.errors import ConstraintViolated, NonFiniteIntegrand
from src.qcore.pochhammer import qpoch_inf
from src.verify import checks, kernel_checks
from src.verify.quadrature import (
    AskeyWilsonWeight,
    QHermiteWeight,
    QuadratureConfig,
    integrate_angle,
    integrate_weighted,
    theta_rule,
)
from src.verify.registry import SuiteContext, default_registry
from src.verify.sampling import sample_2phi1_point, sample_6w5_point
from src.verify.standard import STANDARD_Q, standard_lambda, standard_mu


def test_rule_integrates_sine(quadrature):
    assert integrate_angle(math.sin, quadrature).real == pytest.approx(2.0, rel=1e-13)


def test_rule_nodes_are_read_only(quadrature):
    thetas, _ = theta_rule(quadrature)
    with pytest.raises(ValueError):
        thetas[0] = 0.0


def test_restricted_rule(quadrature):
    half = quadrature.on(0.0, math.pi / 2)
    assert integrate_angle(math.cos, half).real == pytest.approx(1.0, rel=1e-13)
    assert quadrature.refined().panels == 2 * quadrature.panels


def test_config_bounds():
    with pytest.raises(ValueError):
        QuadratureConfig(panels=10 ** 4, nodes_per_panel=1000)
    with pytest.raises(ValueError):
        QuadratureConfig(domain=(1.0, 0.5))


def test_non_finite_integrand_raises(quadrature):
    with pytest.raises(NonFiniteIntegrand):
        integrate_angle(lambda theta: math.inf, quadrature)


def test_plain_weight_gives_length(quadrature):
    assert integrate_weighted(lambda x: 1.0, cfg=quadrature).real == pytest.approx(2.0, rel=1e-12)


def test_qhermite_weight_total_mass(quadrature):
    total = integrate_weighted(lambda x: 1.0, QHermiteWeight(STANDARD_Q), quadrature)
    expected = 2 * math.pi / qpoch_inf(STANDARD_Q, STANDARD_Q).value.real
    assert total.real == pytest.approx(expected, rel=1e-10)


def test_weight_normalization(lam, quadrature):
    report = checks.check_weight_normalization(lam, cfg=quadrature)
    assert report.passed, report.diagnostics
    assert AskeyWilsonWeight(lam).density(0.0) == pytest.approx(0.0, abs=1e-14)


def test_orthogonality_covers_full_matrix(lam, quadrature):
    reports = checks.check_orthogonality(lam, 3, cfg=quadrature)
    assert len(reports) == 16
    assert {(r.witness["m"], r.witness["n"]) for r in reports} == {(m, n) for m in range(4) for n in range(4)}
    assert all(report.passed for report in reports)


def test_wavefunctions_orthonormal(quadrature):
    reports = checks.check_wavefunction_orthogonality(STANDARD_Q, 3, cfg=quadrature)
    assert all(report.passed for report in reports)


def test_delta_normalization(quadrature):
    report = checks.check_delta_limit(0.5, "one", 0.3, STANDARD_Q, 1e-8, quadrature,
                                      identity_id="check_delta_normalization")
    assert report.identity_id == "check_delta_normalization"
    assert report.passed, report.diagnostics


def test_delta_limit_rejects_bad_inputs(quadrature):
    with pytest.raises(ConstraintViolated):
        checks.check_delta_limit(1.0, "one", 0.3, STANDARD_Q, 1e-8, quadrature)
    with pytest.raises(ConstraintViolated):
        checks.check_delta_limit(0.5, "sine", 0.3, STANDARD_Q, 1e-8, quadrature)


def test_delta_panels_grow_near_one(quadrature):
    assert checks.delta_panels(0.5, quadrature) == quadrature.panels
    assert checks.delta_panels(0.999, quadrature) > quadrature.panels


@pytest.mark.slow
def test_multiplication_with_zero_t_prime(lam, quadrature):
    mu = ParamSet(values=standard_mu(lam=lam).values, q=lam.q)
    report = checks.check_multiplication(lam, mu, lam, 0.3, 0.0, math.cos(1.0), math.cos(1.8),
                                         1e-6, quadrature)
    assert report.passed, report.diagnostics


@pytest.mark.slow
def test_projection_lowest_degree(lam, quadrature):
    mu = ParamSet(values=standard_mu(lam=lam).values, q=lam.q)
    report = checks.check_projection(lam, mu, 0.3, 0, math.cos(1.2), 1e-7, quadrature)
    assert report.passed, report.diagnostics


def test_qhermite_limit_reports():
    for n in range(6):
        assert kernel_checks.check_qhermite_limit(n, 1.1, STANDARD_Q).passed


def test_aw_recurrence_scaled_error():
    report = kernel_checks.check_aw_recurrence(standard_lambda(), 1.1, 8)
    assert report.passed, report.diagnostics
    assert len(report.diagnostics["errors"]) == 9


@pytest.mark.parametrize("n", range(5))
def test_aw_qintegral_relative_error(n):
    report = kernel_checks.check_aw_qintegral(standard_lambda(), n, 1.1)
    assert report.tolerance == 1e-9
    assert report.passed, report.diagnostics


def test_registered_tolerances():
    tolerances = {check.name: check.tolerance for check in default_registry()}
    assert tolerances["check_2phi1_2phi2"] == 1e-9
    assert tolerances["check_aw_qintegral"] == 1e-9


def test_degenerate_forms():
    lam2 = ParamSet(values=(0.5, 0.3), q=0.4)
    assert kernel_checks.check_degenerate_forms(lam2, 0.4, range(6), 1.1).passed


def test_reality_report_flags_complex_kernel():
    report = kernel_checks.check_kernel_reality("rotated", lambda x, y: 1j * (1 + x * y), 1e-9)
    assert not report.passed


def test_sampling_reproducible():
    first = sample_6w5_point(np.random.default_rng(7))
    second = sample_6w5_point(np.random.default_rng(7))
    assert first["lam"].values == second["lam"].values
    assert first["u"] == second["u"]
    point = sample_2phi1_point(np.random.default_rng(3))
    assert abs(point["b"] * point["c"] * point["u"] * point["v"] * point["t"] / point["q"] ** 2) < 0.8


def test_context_streams_are_keyed_by_name():
    ctx = SuiteContext(seed=11)
    assert ctx.rng("a").random() == SuiteContext(seed=11).rng("a").random()
    assert ctx.rng("a").random() != ctx.rng("b").random()


def test_registry_names_are_unique():
    names = [check.name for check in default_registry()]
    assert len(names) == len(set(names))
    assert all(name.startswith("check_") for name in names)
    assert all(check.tolerance >= 0 for check in default_registry())


def test_mehler_runner_passes_at_resolvable_pairs():
    entry = next(check for check in default_registry() if check.name == "check_mehler")
    reports = entry.run(SuiteContext())
    assert len(reports) == 46
    assert all(report.passed for report in reports), [r.witness for r in reports if not r.passed]
