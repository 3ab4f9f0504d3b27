import cmath
import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from src.qcore import (
    ConstraintViolated,
    MaxTermsExceeded,
    PoleGuardTripped,
    PoleInDenominator,
    QBase,
    TruncationPolicy,
    h_factor,
    h_multi,
    lattice_index,
    pole_guard,
    qpoch_inf,
    qpoch_multi,
    qpoch_n,
)
from src.qcore.pochhammer import h_angle, qpoch_n_ratio, qpoch_ratio

bases = st.floats(min_value=0.05, max_value=0.95)
parameters = st.floats(min_value=-0.9, max_value=0.9)


def test_qpoch_n_empty_product_is_one():
    assert qpoch_n(0.7, 0.5, 0) == 1


def test_qpoch_n_small_orders():
    assert qpoch_n(0.3, 0.5, 1) == pytest.approx(0.7)
    assert qpoch_n(0.3, 0.5, 2) == pytest.approx(0.7 * 0.85)


def test_qpoch_n_rejects_negative_order():
    with pytest.raises(ConstraintViolated):
        qpoch_n(0.3, 0.5, -1)


def test_qpoch_inf_at_zero_is_one():
    result = qpoch_inf(0, 0.5)
    assert result.value == 1
    assert result.terms_used == 0


def test_qpoch_inf_structural_zero_on_lattice():
    result = qpoch_inf(4.0, 0.5)
    assert result.value == 0
    assert result.structural_zero


@settings(max_examples=60, deadline=None)
@given(a=parameters, q=bases)
def test_qpoch_inf_matches_mpmath(a, q):
    expected = complex(mpmath.qp(a, q))
    result = qpoch_inf(a, q)
    assert abs(result.value - expected) <= 1e-11 * abs(expected)


@settings(max_examples=60, deadline=None)
@given(a=parameters, q=bases)
def test_qpoch_inf_first_factor_recurrence(a, q):
    whole = qpoch_inf(a, q).value
    shifted = qpoch_inf(a * q, q).value
    assert whole == pytest.approx((1 - a) * shifted, rel=1e-12)


@settings(max_examples=40, deadline=None)
@given(a=parameters, q=bases, n=st.integers(min_value=0, max_value=12))
def test_finite_and_infinite_products_agree(a, q, n):
    # (a;q)_inf = (a;q)_n (a q^n;q)_inf
    left = qpoch_inf(a, q).value
    right = qpoch_n(a, q, n) * qpoch_inf(a * q ** n, q).value
    assert left == pytest.approx(right, rel=1e-12, abs=1e-300)


def test_qpoch_inf_complex_argument_matches_mpmath():
    a = 0.4 * cmath.exp(0.7j)
    expected = complex(mpmath.qp(mpmath.mpc(a.real, a.imag), 0.6))
    assert qpoch_inf(a, 0.6).value == pytest.approx(expected, rel=1e-12)


def test_qpoch_multi_is_product_of_singles():
    params = [0.2, -0.3, 0.45j]
    expected = 1
    for a in params:
        expected *= qpoch_inf(a, 0.5).value
    assert qpoch_multi(params, 0.5) == pytest.approx(expected, rel=1e-14)
    assert qpoch_multi(params, 0.5, 3) == pytest.approx(
        qpoch_n(0.2, 0.5, 3) * qpoch_n(-0.3, 0.5, 3) * qpoch_n(0.45j, 0.5, 3), rel=1e-14)


def test_qpoch_multi_requires_parameters():
    with pytest.raises(ConstraintViolated):
        qpoch_multi([], 0.5)


def test_qpoch_multi_structural_zero():
    assert qpoch_multi([0.3, 2.0], 0.5) == 0


def test_truncation_budget_is_enforced():
    with pytest.raises(MaxTermsExceeded):
        qpoch_inf(0.9, 0.95, TruncationPolicy(max_terms=5))


def test_ratio_with_vanishing_denominator():
    with pytest.raises(PoleInDenominator):
        qpoch_ratio([0.3], [4.0], 0.5, TruncationPolicy())


def test_ratio_with_vanishing_numerator_is_zero():
    assert qpoch_ratio([4.0], [0.3], 0.5, TruncationPolicy()) == 0


def test_finite_ratio():
    value = qpoch_n_ratio([0.3, 0.2], [0.1], 0.5, 3)
    expected = qpoch_n(0.3, 0.5, 3) * qpoch_n(0.2, 0.5, 3) / qpoch_n(0.1, 0.5, 3)
    assert value == pytest.approx(expected, rel=1e-14)


def test_lattice_index():
    assert lattice_index(0.5 ** -3, 0.5, 1e-10) == 3
    assert lattice_index(1.0, 0.5, 1e-10) == 0
    assert lattice_index(7.0, 0.5, 1e-10) is None
    assert lattice_index(-8.0, 0.5, 1e-10) is None


def test_pole_guard_names_the_factor():
    with pytest.raises(PoleGuardTripped) as caught:
        pole_guard({"q t/ad": 8.0 * (1 + 1e-12), "bc": 0.06}, 0.5)
    assert caught.value.factor == "q t/ad"
    assert caught.value.m == 3
    assert caught.value.code == "POLE_GUARD"


def test_pole_guard_passes_generic_values():
    pole_guard({"bc": 0.06, "ad": 0.04}, 0.5)


@pytest.mark.parametrize("theta", [0.3, 1.2, 2.9])
def test_h_factor_splits_into_two_products(theta):
    a = 0.35
    x = math.cos(theta)
    split = qpoch_inf(a * cmath.exp(1j * theta), 0.5).value * qpoch_inf(a * cmath.exp(-1j * theta), 0.5).value
    assert h_factor(x, a, 0.5).value == pytest.approx(split, rel=1e-12)
    assert h_angle(theta, [a], 0.5, TruncationPolicy()) == pytest.approx(split, rel=1e-12)


def test_h_multi_is_product_of_factors():
    x = 0.3
    expected = h_factor(x, 0.2, 0.5).value * h_factor(x, -0.4, 0.5).value
    assert h_multi(x, [0.2, -0.4], 0.5) == pytest.approx(expected, rel=1e-14)


def test_h_factor_is_real_for_real_parameter():
    value = h_factor(0.1, 0.6, 0.7).value
    assert value.imag == 0


def test_h_factor_outside_interval():
    with pytest.raises(ConstraintViolated):
        h_factor(1.5, 0.3, 0.5)


@pytest.mark.parametrize("q", [0.0, 1.0, -0.2, 1.5])
def test_qbase_rejects_values_outside_unit_interval(q):
    with pytest.raises(ValidationError):
        QBase(q=q)


def test_policy_validation():
    with pytest.raises(ValidationError):
        TruncationPolicy(rel_tol=0.0)
    with pytest.raises(ValidationError):
        TruncationPolicy(max_terms=0)
    with pytest.raises(ValidationError):
        TruncationPolicy(abs_tol=-1.0)


def test_policy_reads_environment(monkeypatch):
    monkeypatch.setenv("QKERNEL_MAX_TERMS", "1234")
    assert TruncationPolicy().max_terms == 1234
