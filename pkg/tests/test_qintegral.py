import cmath

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.qcore import NonFiniteIntegrand
from src.qseries import q_integral


def test_monomial():
    q = 0.5
    # int_0^1 u d_q u = 1 / (1 + q)
    result = q_integral(lambda u: u, 0.0, 1.0, q)
    assert result.value == pytest.approx(1 / (1 + q), rel=1e-13)
    assert result.terms_used > 0


@pytest.mark.parametrize("power", [0, 2, 5])
def test_powers(power):
    q = 0.3
    expected = (1 - q) / (1 - q ** (power + 1))
    assert q_integral(lambda u: u ** power, 0.0, 1.0, q).value == pytest.approx(expected, rel=1e-13)


def test_limit_to_riemann_integral():
    value = q_integral(lambda u: u ** 2, 0.0, 1.0, 0.999).value
    assert value == pytest.approx(1 / 3, rel=1e-2)


@settings(max_examples=30, deadline=None)
@given(a=st.floats(min_value=-2, max_value=2), b=st.floats(min_value=-2, max_value=2),
       q=st.floats(min_value=0.1, max_value=0.9))
def test_swapping_endpoints_flips_sign(a, b, q):
    f = lambda u: cmath.cos(u) + u
    forward = q_integral(f, a, b, q).value
    backward = q_integral(f, b, a, q).value
    assert forward == pytest.approx(-backward, abs=1e-12)


def test_equal_endpoints():
    assert q_integral(lambda u: u + 1, 0.7, 0.7, 0.5).value == 0


def test_integrand_must_be_finite():
    with pytest.raises(NonFiniteIntegrand):
        q_integral(lambda u: float("inf") if u == 0.25 else 1.0, 0.0, 1.0, 0.5)
