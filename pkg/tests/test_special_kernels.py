"""
Degenerate-family kernels against their direct sums
"""

import math

import pytest

from src.kernels import (
    asc_kernel,
    asc_kernel_norm,
    bigqh_kernel,
    bigqh_kernel_norm,
    dual_qhahn_kernel,
    j_t,
    qhermite_qbessel_kernel,
)
from src.polys.params import ParamSet
from src.qcore.errors import ConstraintViolated
from src.verify.kernel_checks import (
    NEAR_UNITY_T,
    check_asc_kernel,
    check_asc_norm_forms,
    check_asc_norm_kernel,
    check_bigqh_kernel,
    check_bigqh_norm_kernel,
    check_dual_qhahn_kernel,
    check_dual_qhahn_unity,
    check_qbessel_reduction,
    extrapolate_to_unity,
)
from src.verify.standard import (
    ASC_LAMBDA,
    ASC_MU,
    ASC_Q,
    BIGQH_A,
    BIGQH_ALPHA,
    DUAL_QHAHN_LAMBDA,
    DUAL_QHAHN_MU,
    DUAL_QHAHN_UNITY_MU,
    STANDARD_Q,
)

GRID = (0.9, 2.1)


@pytest.fixture
def dual_pair():
    return (ParamSet(values=DUAL_QHAHN_LAMBDA, q=STANDARD_Q), ParamSet(values=DUAL_QHAHN_MU, q=STANDARD_Q))


@pytest.fixture
def asc_pair():
    return ParamSet(values=ASC_LAMBDA, q=ASC_Q), ParamSet(values=ASC_MU, q=ASC_Q)


def test_every_kernel_is_one_at_zero_t(dual_pair, asc_pair):
    x, y = math.cos(0.8), math.cos(1.9)
    values = [
        dual_qhahn_kernel(x, y, *dual_pair, 0.0),
        asc_kernel(x, y, *asc_pair, 0.0),
        asc_kernel_norm(x, y, *asc_pair, 0.0),
        bigqh_kernel(x, y, BIGQH_A, BIGQH_ALPHA, 0.0, STANDARD_Q),
        bigqh_kernel_norm(x, y, BIGQH_A, BIGQH_ALPHA, 0.0, STANDARD_Q),
        qhermite_qbessel_kernel(x, y, BIGQH_ALPHA, 0.0, STANDARD_Q),
    ]
    assert values == [complex(1.0)] * len(values)


def test_dual_qhahn_matches_direct(dual_pair):
    report = check_dual_qhahn_kernel(*dual_pair, 0.3, grid=GRID)
    assert report.passed, report.diagnostics


def test_asc_matches_direct(asc_pair):
    report = check_asc_kernel(*asc_pair, 0.35, grid=GRID)
    assert report.passed, report.diagnostics


def test_asc_norm_matches_direct(asc_pair):
    report = check_asc_norm_kernel(*asc_pair, 0.35, grid=GRID)
    assert report.passed, report.diagnostics


def test_asc_norm_forms_agree(asc_pair):
    report = check_asc_norm_forms(*asc_pair, 0.35, 1.1, 0.6)
    assert report.passed, report.diagnostics


def test_asc_norm_rejects_unknown_form(asc_pair):
    with pytest.raises(ConstraintViolated):
        asc_kernel_norm(0.1, 0.2, *asc_pair, 0.3, form=3)


def test_asc_rejects_uncoupled_pair():
    lam = ParamSet(values=ASC_LAMBDA, q=ASC_Q)
    mu = ParamSet(values=(0.3, 0.4), q=ASC_Q)
    with pytest.raises(ConstraintViolated, match="αβ = ab"):
        asc_kernel(0.1, 0.2, lam, mu, 0.3)


@pytest.mark.parametrize("t", [0.3, 0.2])
def test_bigqh_matches_direct(t):
    report = check_bigqh_kernel(BIGQH_A, BIGQH_ALPHA, t, STANDARD_Q, grid=GRID)
    assert report.passed, report.diagnostics


def test_bigqh_norm_matches_direct():
    report = check_bigqh_norm_kernel(BIGQH_A, BIGQH_ALPHA, 0.3, STANDARD_Q, grid=GRID)
    assert report.passed, report.diagnostics


def test_qbessel_is_the_a_zero_limit():
    report = check_qbessel_reduction(BIGQH_ALPHA, 0.3, STANDARD_Q, grid=GRID)
    assert report.passed, report.diagnostics


def test_bigqh_rejects_zero_a():
    with pytest.raises(ConstraintViolated):
        bigqh_kernel(0.1, 0.2, 0.0, 0.3, 0.3, 0.5)


def test_kernels_reject_unit_t(asc_pair):
    with pytest.raises(ConstraintViolated):
        asc_kernel(0.1, 0.2, *asc_pair, 1.0)


def test_j_t_argument_choice():
    x, y = math.cos(0.5), math.cos(1.3)
    assert j_t(x, y, 0.3, 0.0, 0.5) == 1.0
    assert j_t(x, y, 0.3, 0.4, 0.5) != j_t(x, y, 0.3, 0.4, 0.5, argument="phi")
    with pytest.raises(ConstraintViolated):
        j_t(x, y, 0.3, 0.4, 0.5, argument="psi")


def test_extrapolation_is_exact_for_linear_kernels():
    assert extrapolate_to_unity(lambda t: 3.0 - 2.0 * t) == pytest.approx(1.0, abs=1e-12)
    residual = extrapolate_to_unity(lambda t: t * t) - 1.0
    assert residual == pytest.approx(-2.0 * (1.0 - NEAR_UNITY_T) ** 2, rel=1e-6)


@pytest.mark.slow
def test_dual_qhahn_unity_over_the_standard_grid():
    lam = ParamSet(values=DUAL_QHAHN_LAMBDA, q=STANDARD_Q)
    report = check_dual_qhahn_unity(lam, ParamSet(values=DUAL_QHAHN_UNITY_MU, q=STANDARD_Q))
    assert report.tolerance == 1e-2
    assert report.passed, report.diagnostics
    assert report.witness["extrapolated_from"] == [NEAR_UNITY_T, 2.0 * NEAR_UNITY_T - 1.0]
