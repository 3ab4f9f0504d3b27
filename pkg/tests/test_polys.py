import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from src.polys import (
    MuParams,
    ParamSet,
    alsalam_chihara,
    alsalam_chihara_2phi1,
    alsalam_chihara_norm,
    aw_norm,
    aw_poly,
    aw_poly_qint,
    aw_poly_sequence,
    aw_weight,
    big_qhermite,
    big_qhermite_scaled,
    big_qhermite_sum,
    cont_qhermite,
    dual_qhahn,
    h0,
    hermite,
    hermite_psi,
    iter_aw_poly,
    iter_big_qhermite_scaled,
    norm_ratio,
    q_laguerre,
    qhermite_sequence,
    rho0,
)
from src.polys.params import compatibility_violation, unity_violation
from src.qcore import ConstraintViolated, EndpointSingularity
from src.qcore.pochhammer import qpoch_n

X_VALUES = [-0.8, -0.1, 0.35, 0.9]


# Parameter sets

def test_family_follows_length():
    assert ParamSet(values=(0.4, 0.3, 0.2, 0.1), q=0.5).family == "askey_wilson"
    assert ParamSet(values=(0.4, 0.3, 0.2), q=0.5).family == "dual_qhahn"
    assert ParamSet(values=(0.4, 0.3), q=0.5).family == "al_salam_chihara"
    assert ParamSet(values=(0.4,), q=0.5).family == "big_qhermite"
    assert ParamSet(values=(), q=0.5).family == "qhermite"


def test_padding_and_epsilon():
    lam = ParamSet(values=(0.4, 0.3), q=0.5)
    assert lam.padded() == (0.4, 0.3, 0.0, 0.0)
    assert lam.epsilon == 0
    assert ParamSet(values=(0.4, 0.3, 0.2, 0.1), q=0.5).epsilon == pytest.approx(math.sqrt(0.0024))


@pytest.mark.parametrize("values", [(1.0, 0.3), (0.4, -1.2), (0.1, 0.2, 0.3, 0.4, 0.5)])
def test_inadmissible_parameters(values):
    with pytest.raises(ValidationError):
        ParamSet(values=values, q=0.5)


def test_mu_coupling(lam):
    MuParams(values=(0.32, 0.2, 0.25, 0.15), q=0.5, companion=lam)
    with pytest.raises(ValidationError, match="αγ = ac"):
        MuParams(values=(0.32, 0.2, 0.3, 0.15), q=0.5, companion=lam)
    with pytest.raises(ValidationError, match="βδ = bd"):
        MuParams(values=(0.32, 0.2, 0.25, 0.2), q=0.5, companion=lam)


def test_unity_conditions(lam):
    MuParams(values=(0.32, 0.24, 0.25, 0.125), q=0.5, companion=lam, unity=True)
    with pytest.raises(ValidationError, match="βγ = bc"):
        MuParams(values=(0.32, 0.2, 0.25, 0.15), q=0.5, companion=lam, unity=True)
    # beta = b with gamma = c and delta = d
    with pytest.raises(ValidationError, match=r"\|β\| < \|b\|"):
        MuParams(values=(0.4, 0.3, 0.2, 0.1), q=0.5, companion=lam, unity=True)


def test_violation_helpers(lam):
    other = ParamSet(values=(0.4, 0.3, 0.2), q=0.5)
    assert compatibility_violation(lam, other) == "mu has the same length as lambda"
    assert compatibility_violation(lam, ParamSet(values=lam.values, q=0.4)) == "mu and lambda share q"
    assert unity_violation(ParamSet(values=(0.4,), q=0.5), ParamSet(values=(0.4,), q=0.5)) is not None
    assert unity_violation(ParamSet(values=(0.5, 0.3), q=0.5), ParamSet(values=(0.3, 0.5), q=0.5)) is None


# Askey-Wilson polynomials

@pytest.mark.parametrize("x", X_VALUES)
def test_degree_zero_and_one(lam, x):
    a, b, c, d = lam.values
    assert aw_poly(0, x, lam) == 1
    expected = 1 - (1 - a * b * c * d) * (1 - 2 * a * x + a * a) / ((1 - a * b) * (1 - a * c) * (1 - a * d))
    assert aw_poly(1, x, lam) == pytest.approx(expected, rel=1e-13)


@pytest.mark.parametrize("permutation", [(1, 0, 2, 3), (2, 1, 0, 3), (3, 1, 2, 0)])
def test_symmetric_normalisation(lam, permutation):
    n, x, q = 3, 0.35, 0.5

    def scaled(values):
        a, b, c, d = values
        return a ** -n * qpoch_n(a * b, q, n) * qpoch_n(a * c, q, n) * qpoch_n(a * d, q, n) \
            * aw_poly(n, x, ParamSet(values=values, q=q))

    permuted = tuple(lam.values[i] for i in permutation)
    assert scaled(permuted) == pytest.approx(scaled(lam.values), rel=1e-10)


@pytest.mark.parametrize("theta", [0.4, 1.1, 2.6])
def test_recurrence_matches_series(lam, theta):
    sequence = aw_poly_sequence(6, theta, lam.values, lam.q.q)
    for n, value in enumerate(sequence):
        assert value == pytest.approx(aw_poly(n, math.cos(theta), lam).real, abs=1e-10)


def test_recurrence_needs_leading_parameter():
    with pytest.raises(ConstraintViolated):
        next(iter_aw_poly(1.0, (0.0, 0.3), 0.5))


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_q_integral_representation(lam, n):
    x = math.cos(1.1)
    assert aw_poly_qint(n, x, lam) == pytest.approx(aw_poly(n, x, lam), rel=1e-9, abs=1e-10)


def test_q_integral_representation_needs_d():
    with pytest.raises(ConstraintViolated):
        aw_poly_qint(2, 0.3, ParamSet(values=(0.4, 0.3, 0.2), q=0.5))


def test_zero_padded_family_matches_dual_qhahn():
    params = ParamSet(values=(0.4, 0.3, 0.2), q=0.5)
    for n in range(5):
        assert aw_poly(n, 0.3, params) == pytest.approx(dual_qhahn(n, 0.3, params), rel=1e-12)


def test_norms(lam):
    a, b, c, d = lam.values
    q = lam.q.q
    assert aw_norm(0, lam) == pytest.approx(h0(lam.values, q), rel=1e-15)
    first = (1 - a * b) * (1 - a * c) * (1 - a * d) / ((1 - q) * (1 - c * d) * (1 - b * d) * (1 - b * c) * a * a)
    assert norm_ratio(1, lam.values, q) == pytest.approx((1 - a * b * c * d * q) * first, rel=1e-13)
    assert aw_norm(3, lam) > 0


def test_weight_rejects_endpoints(lam):
    with pytest.raises(EndpointSingularity):
        aw_weight(1.0, lam)
    with pytest.raises(ConstraintViolated):
        aw_weight(1.5, lam)
    assert aw_weight(0.2, lam) > 0


# Degenerate families

@pytest.mark.parametrize("x", X_VALUES)
def test_alsalam_chihara_forms_agree(x):
    params = ParamSet(values=(0.5, 0.3), q=0.4)
    for n in range(6):
        assert alsalam_chihara_2phi1(n, x, params) == pytest.approx(alsalam_chihara(n, x, params), rel=1e-9, abs=1e-10)


def test_alsalam_chihara_norm_scaling():
    params = ParamSet(values=(0.5, 0.3), q=0.4)
    n = 3
    factor = qpoch_n(0.15, 0.4, n) * 0.5 ** -n / qpoch_n(0.4, 0.4, n)
    assert alsalam_chihara_norm(n, 0.2, params) == pytest.approx(factor * alsalam_chihara(n, 0.2, params))


@pytest.mark.parametrize("x", X_VALUES)
def test_big_qhermite_forms_agree(x):
    params = ParamSet(values=(0.4,), q=0.5)
    for n in range(7):
        assert big_qhermite_sum(n, x, params) == pytest.approx(big_qhermite(n, x, params), rel=1e-8, abs=1e-10)


def test_scaled_big_qhermite_first_degree():
    x, a = 0.3, 0.4
    assert big_qhermite_scaled(1, x, a, 0.5) == pytest.approx(2 * x - a)


@pytest.mark.parametrize("x", X_VALUES)
def test_scaled_big_qhermite_at_zero_is_qhermite(x):
    for n in range(8):
        assert big_qhermite_scaled(n, x, 0.0, 0.5) == pytest.approx(cont_qhermite(n, x, 0.5), rel=1e-12, abs=1e-12)


@settings(max_examples=30, deadline=None)
@given(theta=st.floats(min_value=0.05, max_value=3.09), a=st.floats(min_value=-0.9, max_value=0.9))
def test_scaled_big_qhermite_recurrence(theta, a):
    q = 0.5
    generator = iter_big_qhermite_scaled(theta, a, q)
    for n in range(7):
        assert next(generator) == pytest.approx(
            big_qhermite_scaled(n, math.cos(theta), a, q).real, rel=1e-9, abs=1e-10)


def test_wrong_family_length():
    with pytest.raises(ConstraintViolated):
        dual_qhahn(2, 0.3, ParamSet(values=(0.4, 0.3), q=0.5))


def test_q_laguerre_degree_zero():
    assert q_laguerre(0, 0.3, 0.5, 0.5) == 1


# q-Hermite and classical Hermite

def test_low_qhermite_degrees():
    x, q = 0.3, 0.5
    assert cont_qhermite(0, x, q) == pytest.approx(1.0)
    assert cont_qhermite(1, x, q) == pytest.approx(2 * x)
    assert cont_qhermite(2, x, q) == pytest.approx(4 * x * x - 1 + q)


@pytest.mark.parametrize("theta", [0.3, 1.7])
def test_qhermite_sequence_matches_sum(theta):
    for n, value in enumerate(qhermite_sequence(12, theta, 0.6)):
        assert value == pytest.approx(cont_qhermite(n, math.cos(theta), 0.6), rel=1e-10, abs=1e-12)


def test_rho0_positive_inside_vanishes_at_ends():
    assert rho0(0.3, 0.5) > 0
    assert rho0(1.0, 0.5) == 0


def test_classical_hermite():
    x = 0.7
    assert hermite(2, x) == pytest.approx(4 * x * x - 2)
    assert hermite(3, x) == pytest.approx(8 * x ** 3 - 12 * x)


def test_oscillator_functions_orthonormal():
    nodes, weights = np.polynomial.hermite.hermgauss(80)
    size = 8
    gram = np.empty((size, size))
    for m in range(size):
        for n in range(size):
            values = [hermite_psi(m, x) * hermite_psi(n, x) * math.exp(x * x) for x in nodes]
            gram[m, n] = float(np.dot(weights, values))
    np.testing.assert_allclose(gram, np.eye(size), atol=1e-12)


def test_oscillator_function_matches_polynomial():
    x, n = 0.8, 5
    expected = hermite(n, x) * math.exp(-x * x / 2) / math.sqrt(2 ** n * math.factorial(n) * math.sqrt(math.pi))
    assert hermite_psi(n, x) == pytest.approx(expected, rel=1e-12)
