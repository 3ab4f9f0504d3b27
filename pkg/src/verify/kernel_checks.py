"""
Kernel identities checked against their direct bilinear sums, plus the
polynomial cross-checks those sums rely on.
"""

import logging
import math
from typing import Callable, Dict, Optional, Sequence

from ..kernels import (
    KernelParams,
    asc_direct,
    asc_kernel,
    asc_kernel_norm,
    asc_kernel_unity,
    asc_norm_direct,
    bigqh_direct,
    bigqh_kernel,
    bigqh_kernel_norm,
    bigqh_norm_direct,
    dual_qhahn_direct,
    dual_qhahn_kernel,
    dual_qhahn_kernel_unity,
    kernel_direct,
    kernel_explicit,
    kernel_unity,
    mehler_kernel,
    mehler_series,
    qhermite_poisson,
    qhermite_poisson_series,
    qhermite_qbessel_kernel,
)
from ..polys import (
    alsalam_chihara,
    alsalam_chihara_2phi1,
    aw_poly_angle,
    aw_poly_qint,
    aw_poly_sequence,
    aw_spec,
    big_qhermite,
    big_qhermite_scaled_angle,
    big_qhermite_sum,
    cont_qhermite_angle,
)
from ..polys.params import MuParams, ParamSet
from ..qcore.pochhammer import h_multi, qpoch_ratio
from ..qcore.types import CheckReport, TruncationPolicy, complex_pair, relative_error
from ..qseries import phi_terms
from .standard import GRID

logger = logging.getLogger(__name__)

NEAR_UNITY_T = 0.999


def extrapolate_to_unity(kernel_at: Callable[[float], complex], t: float = NEAR_UNITY_T) -> complex:
    """
    Linear extrapolation of a kernel to t = 1 from the direct sums at t and
    2t - 1: 2 K(t) - K(2t - 1). The residual is O((1 - t)^2).
    """
    return 2.0 * complex(kernel_at(t)) - complex(kernel_at(2.0 * t - 1.0))


def grid_report(identity_id: str,
                closed: Callable[[float, float], complex],
                oracle: Callable[[float, float], complex],
                tol: float,
                witness: Dict,
                grid: Sequence[float] = GRID) -> CheckReport:
    """Largest relative discrepancy between two kernels over (theta, phi) in grid x grid."""
    worst = 0.0
    worst_at = None
    imaginary = 0.0
    for theta in grid:
        for phi in grid:
            x, y = math.cos(theta), math.cos(phi)
            value = complex(closed(x, y))
            error = relative_error(value, complex(oracle(x, y)))
            imaginary = max(imaginary, abs(value.imag) / (1.0 + abs(value.real)))
            if error >= worst:
                worst, worst_at = error, [theta, phi]
    return CheckReport.build(
        identity_id=identity_id,
        observed_error=worst,
        tolerance=tol,
        witness=dict(witness, grid=list(grid)),
        diagnostics={"worst_at": worst_at, "max_relative_imag": imaginary},
    )


def _pair_witness(lam: ParamSet, mu: ParamSet, t: complex) -> Dict:
    return {"q": lam.q.q, "lambda": list(lam.values), "mu": list(mu.values), "t": complex_pair(t)}


def _unity_witness(lam: ParamSet, mu: ParamSet) -> Dict:
    return dict(_pair_witness(lam, mu, NEAR_UNITY_T), extrapolated_from=[NEAR_UNITY_T, 2.0 * NEAR_UNITY_T - 1.0])


def check_kernel_explicit(kp: KernelParams,
                          theta: float,
                          phi: float,
                          tol: float = 1e-7,
                          policy: Optional[TruncationPolicy] = None) -> CheckReport:
    """The three-part explicit kernel against the direct sum at one point."""
    x, y = math.cos(theta), math.cos(phi)
    explicit = kernel_explicit(x, y, kp, policy)
    direct = kernel_direct(x, y, kp, policy=policy)
    return CheckReport.build(
        identity_id="check_kernel_explicit",
        observed_error=relative_error(explicit.value, direct.value),
        tolerance=tol,
        witness=dict(_pair_witness(kp.lam, kp.mu, kp.t), theta=theta, phi=phi),
        diagnostics={
            "explicit": complex_pair(explicit.value),
            "direct": complex_pair(direct.value),
            "parts": [complex_pair(p) for p in explicit.parts],
            "direct_terms": direct.terms_used,
            **explicit.diagnostics,
        },
    )


def check_kernel_symmetry(lam: ParamSet,
                          t: float,
                          theta: float,
                          phi: float,
                          explicit: bool = False,
                          tol: float = 1e-9,
                          policy: Optional[TruncationPolicy] = None) -> CheckReport:
    """With mu = lam and real t the kernel is symmetric in (x, y)."""
    mu = MuParams(values=lam.values, q=lam.q, companion=lam)
    kp = KernelParams(lam=lam, mu=mu, t=t)
    x, y = math.cos(theta), math.cos(phi)
    if explicit:
        forward, backward = kernel_explicit(x, y, kp, policy).value, kernel_explicit(y, x, kp, policy).value
    else:
        forward, backward = kernel_direct(x, y, kp, policy=policy).value, kernel_direct(y, x, kp, policy=policy).value
    return CheckReport.build(
        identity_id="check_kernel_symmetry",
        observed_error=relative_error(forward, backward),
        tolerance=tol,
        witness={"q": lam.q.q, "lambda": list(lam.values), "t": t, "theta": theta, "phi": phi,
                 "explicit": explicit},
        diagnostics={"forward": complex_pair(forward), "backward": complex_pair(backward)},
    )


def check_kernel_unity(lam: ParamSet,
                       mu: MuParams,
                       tol: float = 1e-2,
                       grid: Sequence[float] = GRID,
                       policy: Optional[TruncationPolicy] = None) -> CheckReport:
    """The t = 1 product form against the direct sum extrapolated to the unit circle."""
    companion = MuParams(values=mu.values, q=lam.q, companion=lam)

    def direct(x: float, y: float, t: float) -> complex:
        return kernel_direct(x, y, KernelParams(lam=lam, mu=companion, t=t), policy=policy).value

    return grid_report(
        "check_kernel_unity",
        lambda x, y: kernel_unity(x, y, lam, mu, policy),
        lambda x, y: extrapolate_to_unity(lambda t: direct(x, y, t)),
        tol,
        _unity_witness(lam, mu),
        grid,
    )


def check_unity_ratio(lam: ParamSet,
                      mu: MuParams,
                      tol: float = 1e-9,
                      grid: Sequence[float] = GRID,
                      policy: Optional[TruncationPolicy] = None) -> CheckReport:
    """
    K_1 / [P_r(x, y) h(x; c, d) h(y; alpha, beta)] with r = beta / b equals
    (abcd)_inf / (alpha beta, ac, ad, bc, bd, cd)_inf everywhere, where P_r
    is the q-Hermite Poisson kernel.
    """
    policy = policy or TruncationPolicy()
    q = lam.q.q
    a, b, c, d = lam.values
    alpha, beta = mu.values[0], mu.values[1]
    r = beta / b
    constant = qpoch_ratio([a * b * c * d], [alpha * beta, a * c, a * d, b * c, b * d, c * d], q, policy)

    def ratio(x: float, y: float) -> complex:
        base = qhermite_poisson(x, y, r, q, policy) * h_multi(x, [c, d], q, policy) * h_multi(y, [alpha, beta], q, policy)
        return kernel_unity(x, y, lam, mu, policy) / base

    return grid_report("check_unity_ratio", ratio, lambda x, y: constant, tol,
                       dict(_pair_witness(lam, mu, 1.0), r=r), grid)


def check_dual_qhahn_kernel(lam: ParamSet, mu: ParamSet, t: complex, tol: float = 1e-7,
                            grid: Sequence[float] = GRID,
                            policy: Optional[TruncationPolicy] = None) -> CheckReport:
    return grid_report(
        "check_dual_qhahn_kernel",
        lambda x, y: dual_qhahn_kernel(x, y, lam, mu, t, policy),
        lambda x, y: dual_qhahn_direct(x, y, lam, mu, t, policy=policy).value,
        tol,
        _pair_witness(lam, mu, t),
        grid,
    )


def check_dual_qhahn_unity(lam: ParamSet, mu: ParamSet, tol: float = 1e-2,
                           grid: Sequence[float] = GRID,
                           policy: Optional[TruncationPolicy] = None) -> CheckReport:
    return grid_report(
        "check_dual_qhahn_unity",
        lambda x, y: dual_qhahn_kernel_unity(x, y, lam, mu, policy),
        lambda x, y: extrapolate_to_unity(lambda t: dual_qhahn_direct(x, y, lam, mu, t, policy=policy).value),
        tol,
        _unity_witness(lam, mu),
        grid,
    )


def check_asc_kernel(lam: ParamSet, mu: ParamSet, t: complex, tol: float = 1e-7,
                     grid: Sequence[float] = GRID,
                     policy: Optional[TruncationPolicy] = None) -> CheckReport:
    return grid_report(
        "check_asc_kernel",
        lambda x, y: asc_kernel(x, y, lam, mu, t, policy),
        lambda x, y: asc_direct(x, y, lam, mu, t, policy=policy).value,
        tol,
        _pair_witness(lam, mu, t),
        grid,
    )


def check_asc_norm_kernel(lam: ParamSet, mu: ParamSet, t: complex, tol: float = 1e-7,
                          grid: Sequence[float] = GRID,
                          policy: Optional[TruncationPolicy] = None) -> CheckReport:
    return grid_report(
        "check_asc_norm_kernel",
        lambda x, y: asc_kernel_norm(x, y, lam, mu, t, 1, policy),
        lambda x, y: asc_norm_direct(x, y, lam, mu, t, policy=policy).value,
        tol,
        _pair_witness(lam, mu, t),
        grid,
    )


def check_asc_norm_forms(lam: ParamSet, mu: ParamSet, t: complex, theta: float, phi: float,
                         tol: float = 1e-9, policy: Optional[TruncationPolicy] = None) -> CheckReport:
    """The two 8W7 forms of the normalised Al-Salam-Chihara kernel agree."""
    x, y = math.cos(theta), math.cos(phi)
    first = asc_kernel_norm(x, y, lam, mu, t, 1, policy)
    second = asc_kernel_norm(x, y, lam, mu, t, 2, policy)
    return CheckReport.build(
        identity_id="check_asc_norm_forms",
        observed_error=relative_error(first, second),
        tolerance=tol,
        witness=dict(_pair_witness(lam, mu, t), theta=theta, phi=phi),
        diagnostics={"form1": complex_pair(first), "form2": complex_pair(second)},
    )


def check_asc_unity(lam: ParamSet, mu: ParamSet, tol: float = 1e-2,
                    grid: Sequence[float] = GRID,
                    policy: Optional[TruncationPolicy] = None) -> CheckReport:
    return grid_report(
        "check_asc_unity",
        lambda x, y: asc_kernel_unity(x, y, lam, mu, policy),
        lambda x, y: extrapolate_to_unity(lambda t: asc_direct(x, y, lam, mu, t, policy=policy).value),
        tol,
        _unity_witness(lam, mu),
        grid,
    )


def check_bigqh_kernel(a: float, alpha: float, t: complex, q: float, tol: float = 1e-7,
                       grid: Sequence[float] = GRID,
                       policy: Optional[TruncationPolicy] = None) -> CheckReport:
    return grid_report(
        "check_bigqh_kernel",
        lambda x, y: bigqh_kernel(x, y, a, alpha, t, q, policy),
        lambda x, y: bigqh_direct(x, y, a, alpha, t, q, policy=policy).value,
        tol,
        {"q": q, "a": a, "alpha": alpha, "t": complex_pair(t)},
        grid,
    )


def check_bigqh_norm_kernel(a: float, alpha: float, t: complex, q: float, tol: float = 1e-7,
                            grid: Sequence[float] = GRID,
                            policy: Optional[TruncationPolicy] = None) -> CheckReport:
    return grid_report(
        "check_bigqh_norm_kernel",
        lambda x, y: bigqh_kernel_norm(x, y, a, alpha, t, q, policy),
        lambda x, y: bigqh_norm_direct(x, y, a, alpha, t, q, policy=policy).value,
        tol,
        {"q": q, "a": a, "alpha": alpha, "t": complex_pair(t)},
        grid,
    )


def check_qbessel_reduction(alpha: float, t: complex, q: float, tol: float = 1e-11,
                            grid: Sequence[float] = GRID,
                            policy: Optional[TruncationPolicy] = None) -> CheckReport:
    """The normalised big q-Hermite kernel at a = 0 is the 2phi1 q-Bessel form."""
    return grid_report(
        "check_qbessel_reduction",
        lambda x, y: bigqh_kernel_norm(x, y, 0.0, alpha, t, q, policy),
        lambda x, y: qhermite_qbessel_kernel(x, y, alpha, t, q, policy),
        tol,
        {"q": q, "alpha": alpha, "t": complex_pair(t)},
        grid,
    )


def check_mehler(x: float, y: float, t: float, N: int = 50, tol: float = 1e-10) -> CheckReport:
    closed = mehler_kernel(x, y, t)
    series = mehler_series(x, y, t, N)
    return CheckReport.build(
        identity_id="check_mehler",
        observed_error=relative_error(series, closed),
        tolerance=tol,
        witness={"x": x, "y": y, "t": t, "N": N},
        diagnostics={"closed": closed, "series": series},
    )


def check_qhermite_poisson(theta: float, phi: float, r: float, q: float, N: int = 200,
                           tol: float = 1e-10, policy: Optional[TruncationPolicy] = None) -> CheckReport:
    x, y = math.cos(theta), math.cos(phi)
    closed = qhermite_poisson(x, y, r, q, policy)
    series = qhermite_poisson_series(x, y, r, q, N)
    return CheckReport.build(
        identity_id="check_qhermite_poisson",
        observed_error=relative_error(series, closed),
        tolerance=tol,
        witness={"q": q, "r": r, "theta": theta, "phi": phi, "N": N},
        diagnostics={"closed": closed, "series": series},
    )


def check_qhermite_limit(n: int, theta: float, q: float, tol: float = 1e-12) -> CheckReport:
    """The a = 0 big q-Hermite k-sum is the continuous q-Hermite polynomial."""
    limit = big_qhermite_scaled_angle(n, theta, 0.0, q)
    expected = cont_qhermite_angle(n, theta, q)
    return CheckReport.build(
        identity_id="check_qhermite_limit",
        observed_error=abs(limit - expected) / max(1.0, abs(expected)),
        tolerance=tol,
        witness={"q": q, "n": n, "theta": theta},
        diagnostics={"limit": complex_pair(limit), "expected": expected},
    )


def check_aw_recurrence(lam: ParamSet, theta: float, n_max: int = 8, tol: float = 1e-10,
                        policy: Optional[TruncationPolicy] = None) -> CheckReport:
    """
    The 4phi3 polynomials agree with the recurrence-generated sequence.

    Each discrepancy is measured against the absolute term sum of the 4phi3,
    the scale its own rounding error lives on: the terms of p_n grow like
    q^{-n(n-1)/2} while p_n itself stays O(a^n).
    """
    q = lam.q.q
    sequence = aw_poly_sequence(n_max, theta, lam.values, q)
    errors = []
    for n in range(n_max + 1):
        scale = 1.0 if n == 0 else sum(abs(term) for term in phi_terms(aw_spec(n, theta, lam.values, q)))
        errors.append(abs(aw_poly_angle(n, theta, lam.values, q, policy) - sequence[n]) / max(1.0, scale))
    return CheckReport.build(
        identity_id="check_aw_recurrence",
        observed_error=max(errors),
        tolerance=tol,
        witness={"q": q, "lambda": list(lam.values), "theta": theta, "n_max": n_max},
        diagnostics={"errors": errors},
    )


def check_aw_qintegral(lam: ParamSet, n: int, theta: float, tol: float = 1e-9,
                       policy: Optional[TruncationPolicy] = None) -> CheckReport:
    """The q-integral representation of p_n against the 4phi3."""
    x = math.cos(theta)
    integral = aw_poly_qint(n, x, lam, policy)
    series = aw_poly_angle(n, theta, lam.values, lam.q.q, policy)
    return CheckReport.build(
        identity_id="check_aw_qintegral",
        observed_error=relative_error(integral, series),
        tolerance=tol,
        witness={"q": lam.q.q, "lambda": list(lam.values), "n": n, "theta": theta},
        diagnostics={"qintegral": complex_pair(integral), "series": complex_pair(series)},
    )


def check_degenerate_forms(lam2: ParamSet, a: float, degrees: Sequence[int], theta: float,
                           tol: float = 1e-10, policy: Optional[TruncationPolicy] = None) -> CheckReport:
    """
    Alternative forms of the lower families: the 2phi1 Al-Salam-Chihara form
    and the k-sum big q-Hermite form against their 3phi2 definitions.
    """
    x = math.cos(theta)
    big = ParamSet(values=(a,), q=lam2.q)
    errors = []
    for n in degrees:
        asc = alsalam_chihara(n, x, lam2, policy)
        errors.append(abs(alsalam_chihara_2phi1(n, x, lam2, policy) - asc) / max(1.0, abs(asc)))
        bqh = big_qhermite(n, x, big, policy)
        errors.append(abs(big_qhermite_sum(n, x, big, policy) - bqh) / max(1.0, abs(bqh)))
    return CheckReport.build(
        identity_id="check_degenerate_forms",
        observed_error=max(errors),
        tolerance=tol,
        witness={"q": lam2.q.q, "lambda": list(lam2.values), "a": a, "degrees": list(degrees), "theta": theta},
        diagnostics={"errors": errors},
    )


def check_kernel_reality(kernel_name: str,
                         kernel: Callable[[float, float], complex],
                         tol: float = 1e-9,
                         grid: Sequence[float] = GRID) -> CheckReport:
    """Real parameters and real t give |Im K| <= tol (1 + |Re K|) over the grid."""
    worst = 0.0
    for theta in grid:
        for phi in grid:
            value = complex(kernel(math.cos(theta), math.cos(phi)))
            worst = max(worst, abs(value.imag) / (1.0 + abs(value.real)))
    return CheckReport.build(
        identity_id="check_kernel_reality",
        observed_error=worst,
        tolerance=tol,
        witness={"kernel": kernel_name, "grid": list(grid)},
    )
