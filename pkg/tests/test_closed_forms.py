"""
Product-form kernels
"""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.kernels import (
    kernel_unity,
    mehler_kernel,
    mehler_series,
    qhermite_delta_kernel,
    qhermite_poisson,
    qhermite_poisson_series,
)
from src.polys.params import ParamSet
from src.qcore.errors import ConstraintViolated, EndpointSingularity
from src.verify.standard import UNITY_MU, standard_mu


def test_mehler_at_zero_t():
    assert mehler_kernel(0.3, 0.3, 0.0) == pytest.approx(math.exp(-0.09) / math.sqrt(math.pi))


def test_mehler_at_origin():
    t = 0.6
    assert mehler_kernel(0.0, 0.0, t) == pytest.approx(1.0 / math.sqrt(math.pi * (1 - t * t)))


@settings(max_examples=30, deadline=None)
@given(x=st.floats(-2.0, 2.0), y=st.floats(-2.0, 2.0), t=st.floats(-0.5, 0.5))
def test_mehler_matches_series(x, y, t):
    closed = mehler_kernel(x, y, t)
    assert mehler_series(x, y, t) == pytest.approx(closed, rel=1e-9, abs=1e-12)


@pytest.mark.parametrize("x, y", [(-2.0, 0.5), (2.0, -0.5), (0.5, -2.0)])
def test_mehler_series_survives_cancellation(x, y):
    closed = mehler_kernel(x, y, 0.8)
    assert closed < 1e-6
    assert mehler_series(x, y, 0.8, 300) == pytest.approx(closed, rel=1e-10)


def test_mehler_series_rejects_negative_order():
    with pytest.raises(ConstraintViolated):
        mehler_series(0.1, 0.2, 0.5, -1)


def test_mehler_rejects_unit_t():
    with pytest.raises(ConstraintViolated):
        mehler_kernel(0.1, 0.2, 1.0)


def test_qhermite_poisson_at_zero_radius():
    assert qhermite_poisson(0.3, -0.8, 0.0, 0.5) == pytest.approx(1.0)


@pytest.mark.parametrize("theta,phi,r", [(0.7, 1.5, 0.3), (2.4, 0.7, 0.6), (1.5, 1.5, -0.4)])
def test_qhermite_poisson_matches_series(theta, phi, r):
    x, y = math.cos(theta), math.cos(phi)
    assert qhermite_poisson_series(x, y, r, 0.5) == pytest.approx(qhermite_poisson(x, y, r, 0.5), rel=1e-10)


def test_qhermite_poisson_rejects_unit_radius():
    with pytest.raises(ConstraintViolated):
        qhermite_poisson(0.1, 0.2, 1.0, 0.5)


def test_delta_kernel_rejects_endpoint():
    with pytest.raises(EndpointSingularity):
        qhermite_delta_kernel(0.2, 1.0, 0.5, 0.5)


def test_delta_kernel_is_positive():
    assert qhermite_delta_kernel(0.2, 0.25, 0.9, 0.5) > 0


def test_unity_is_real(lam):
    mu = standard_mu(values=UNITY_MU, lam=lam, unity=True)
    value = kernel_unity(math.cos(0.7), math.cos(1.5), lam, mu)
    assert abs(value.imag) < 1e-12 * abs(value.real)


def test_unity_needs_four_parameters():
    lam = ParamSet(values=(0.4, 0.3, 0.2), q=0.5)
    mu = standard_mu(values=(0.32, 0.24, 0.25), lam=lam, unity=True)
    with pytest.raises(ConstraintViolated):
        kernel_unity(0.1, 0.2, lam, mu)


def test_unity_rejects_plain_compatible_pair(lam, mu):
    with pytest.raises(ConstraintViolated, match="βγ = bc"):
        kernel_unity(0.1, 0.2, lam, mu)
