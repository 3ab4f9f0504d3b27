"""
Direct bilinear sums
"""

import math

import pytest

from src.kernels import (
    KernelParams,
    asc_norm_direct,
    bigqh_direct,
    bigqh_norm_direct,
    bilinear_direct,
    bilinear_sum,
    iter_norm_ratio,
    kernel_direct,
    qhermite_poisson,
)
from src.polys import aw_norm
from src.polys.params import ParamSet
from src.qcore.errors import ConstraintViolated, Divergent
from src.verify.standard import standard_lambda, standard_mu


def _geometric(r):
    n = 0
    while True:
        yield r ** n
        n += 1


def test_bilinear_sum_geometric():
    result = bilinear_sum(_geometric(0.5), 0.5)
    assert result.value.real == pytest.approx(2.0, rel=1e-12)
    assert result.tail_estimate < 1e-12


def test_bilinear_sum_fixed_order_counts_terms():
    result = bilinear_sum(_geometric(0.5), 0.5, N=10)
    assert result.terms_used == 11
    assert result.value.real == pytest.approx(2.0 - 0.5 ** 10)


def test_bilinear_sum_rejects_bad_order():
    with pytest.raises(ConstraintViolated):
        bilinear_sum(_geometric(0.5), 0.5, N=0)


def test_bilinear_sum_divergent_ratio():
    with pytest.raises(Divergent):
        bilinear_sum(_geometric(1.0), 1.0)


def test_kernel_is_one_at_zero_t():
    kp = KernelParams.build((0.4, 0.3, 0.2, 0.1), (0.32, 0.2, 0.25, 0.15), 0.0, 0.5)
    result = kernel_direct(0.3, -0.6, kp)
    assert result.value == pytest.approx(1.0)


def test_norm_ratio_matches_closed_norms(lam):
    q = lam.q.q
    h0 = aw_norm(0, lam)
    ratios = iter_norm_ratio(lam.values, q)
    for n in range(7):
        assert next(ratios) == pytest.approx(aw_norm(n, lam) / h0, rel=1e-12)


def test_norm_ratio_needs_nonzero_a():
    with pytest.raises(ConstraintViolated):
        next(iter_norm_ratio((0.0, 0.3, 0.2, 0.1), 0.5))


def test_kernel_direct_symmetric_for_equal_sets(lam):
    mu = standard_mu(values=lam.values, lam=lam)
    kp = KernelParams(lam=lam, mu=mu, t=0.4)
    x, y = math.cos(0.7), math.cos(2.1)
    assert kernel_direct(x, y, kp).value == pytest.approx(kernel_direct(y, x, kp).value, rel=1e-12)


def test_kernel_direct_divergent_beyond_radius(lam):
    mu = standard_mu(values=(0.45, 0.2, 0.08 / 0.45, 0.15), lam=lam)
    kp = KernelParams(lam=lam, mu=mu, t=0.9)
    with pytest.raises(Divergent):
        kernel_direct(0.1, 0.2, kp)


def test_fixed_order_approaches_adaptive(kernel_params):
    x, y = math.cos(0.9), math.cos(1.7)
    adaptive = kernel_direct(x, y, kernel_params).value
    fixed = kernel_direct(x, y, kernel_params, N=80).value
    assert fixed == pytest.approx(adaptive, rel=1e-12)


def test_bilinear_direct_needs_shared_q():
    lam = standard_lambda()
    other = ParamSet(values=(0.32, 0.2, 0.25, 0.15), q=0.4)
    with pytest.raises(ConstraintViolated):
        bilinear_direct(0.1, 0.2, lam, other, 0.3)


def test_asc_norm_direct_needs_alpha():
    lam = ParamSet(values=(0.5, 0.3), q=0.4)
    mu = ParamSet(values=(0.0, 0.5), q=0.4)
    with pytest.raises(ConstraintViolated):
        asc_norm_direct(0.1, 0.2, lam, mu, 0.3)


def test_bigqh_direct_needs_a():
    with pytest.raises(ConstraintViolated):
        bigqh_direct(0.1, 0.2, 0.0, 0.3, 0.3, 0.5)


@pytest.mark.parametrize("theta,phi", [(0.4, 1.1), (2.0, 2.9)])
def test_bigqh_norm_at_zero_parameters_is_qhermite_poisson(theta, phi):
    x, y = math.cos(theta), math.cos(phi)
    direct = bigqh_norm_direct(x, y, 0.0, 0.0, 0.6, 0.5).value
    assert direct.real == pytest.approx(qhermite_poisson(x, y, 0.6, 0.5), rel=1e-11)
