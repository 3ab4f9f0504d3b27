"""
Quadrature-backed identity checks: orthogonality and normalisation of the
polynomial systems, the kernel multiplication and projection formulas, and
the delta-sequence behaviour of the q-Hermite kernel.
"""

import logging
import math
from typing import Callable, Dict, List, Optional

import numpy as np

from ..kernels.closed_forms import qhermite_delta_density
from ..kernels.direct import bilinear_direct
from ..polys.askey_wilson import angle_of, aw_norm, aw_poly_angle, h0
from ..polys.hermite import q_wavefunction
from ..polys.params import ParamSet, compatibility_violation
from ..qcore.errors import ConstraintViolated
from ..qcore.types import CheckReport, TruncationPolicy, complex_pair, relative_error
from .quadrature import AskeyWilsonWeight, QuadratureConfig, integrate_angle, theta_rule

logger = logging.getLogger(__name__)

TEST_FUNCTIONS: Dict[str, Callable[[float], float]] = {
    "one": lambda y: 1.0,
    "square": lambda y: y * y,
    "cubic": lambda y: y ** 3 - 0.5 * y,
}


def _weighted_nodes(params: ParamSet, cfg: QuadratureConfig, policy: TruncationPolicy):
    thetas, weights = theta_rule(cfg)
    weight = AskeyWilsonWeight(params, policy)
    dens = np.array([weight.density(float(theta)) for theta in thetas])
    return thetas, weights * dens


def check_weight_normalization(lam: ParamSet,
                               tol: float = 1e-8,
                               cfg: Optional[QuadratureConfig] = None,
                               policy: Optional[TruncationPolicy] = None) -> CheckReport:
    """int rho(x) dx against 1/h_0."""
    cfg = cfg or QuadratureConfig()
    policy = policy or TruncationPolicy()
    _, weighted = _weighted_nodes(lam, cfg, policy)
    integral = float(weighted.sum())
    expected = 1.0 / h0(lam.values, lam.q.q, policy)
    return CheckReport.build(
        identity_id="check_weight_normalization",
        observed_error=relative_error(integral, expected),
        tolerance=tol,
        witness={"q": lam.q.q, "lambda": list(lam.values), "panels": cfg.panels},
        diagnostics={"integral": integral, "expected": expected},
    )


def check_orthogonality(lam: ParamSet,
                        n_max: int,
                        tol: float = 1e-8,
                        cfg: Optional[QuadratureConfig] = None,
                        policy: Optional[TruncationPolicy] = None) -> List[CheckReport]:
    """
    int p_n p_m rho dx = delta_{mn} / h_n for all m, n <= n_max.

    The error is measured in units of (h_m h_n)^{-1/2}, which makes the
    diagonal entries relative errors.
    """
    cfg = cfg or QuadratureConfig()
    policy = policy or TruncationPolicy()
    thetas, weighted = _weighted_nodes(lam, cfg, policy)
    q = lam.q.q
    values = np.array([[aw_poly_angle(n, float(theta), lam.values, q, policy).real for theta in thetas]
                       for n in range(n_max + 1)])
    gram = (values * weighted) @ values.T
    norms = [aw_norm(n, lam, policy) for n in range(n_max + 1)]
    reports = []
    for n in range(n_max + 1):
        for m in range(n_max + 1):
            expected = 1.0 / norms[n] if m == n else 0.0
            error = abs(gram[m, n] - expected) * math.sqrt(abs(norms[m] * norms[n]))
            reports.append(CheckReport.build(
                identity_id="check_orthogonality",
                observed_error=error,
                tolerance=tol,
                witness={"q": q, "lambda": list(lam.values), "m": m, "n": n, "panels": cfg.panels},
                diagnostics={"integral": float(gram[m, n]), "expected": expected},
            ))
    return reports


def check_wavefunction_orthogonality(q: float,
                                     n_max: int,
                                     tol: float = 1e-8,
                                     cfg: Optional[QuadratureConfig] = None,
                                     policy: Optional[TruncationPolicy] = None) -> List[CheckReport]:
    """int Psi_m(x|q) Psi_n(x|q) dx = delta_{mn} over (-1, 1)."""
    cfg = cfg or QuadratureConfig()
    policy = policy or TruncationPolicy()
    thetas, weights = theta_rule(cfg)
    jacobian = weights * np.sin(thetas)
    values = np.array([[q_wavefunction(n, math.cos(float(theta)), q, policy) for theta in thetas]
                       for n in range(n_max + 1)])
    gram = (values * jacobian) @ values.T
    reports = []
    for n in range(n_max + 1):
        for m in range(n_max + 1):
            expected = 1.0 if m == n else 0.0
            reports.append(CheckReport.build(
                identity_id="check_wavefunction_orthogonality",
                observed_error=abs(gram[m, n] - expected),
                tolerance=tol,
                witness={"q": q, "m": m, "n": n, "panels": cfg.panels},
                diagnostics={"integral": float(gram[m, n])},
            ))
    return reports


def _poisson(x: float, y: float, lam: ParamSet, mu: ParamSet, t: complex,
             policy: TruncationPolicy) -> complex:
    """P_t^{lam, mu}(x, y) = h_0^lam K_t^{lam, mu}(x, y)."""
    return h0(lam.values, lam.q.q, policy) * bilinear_direct(x, y, lam, mu, t, policy=policy).value


def check_multiplication(lam: ParamSet,
                         mu: ParamSet,
                         lam_prime: ParamSet,
                         t: complex,
                         t_prime: complex,
                         x: float,
                         x_prime: float,
                         tol: float = 1e-6,
                         cfg: Optional[QuadratureConfig] = None,
                         policy: Optional[TruncationPolicy] = None) -> CheckReport:
    """
    int P_t^{lam, mu}(x, y) P_{t'}^{mu, lam'}(y, x') rho^mu(y) dy
    = P_{t t'}^{lam, lam'}(x, x').
    """
    cfg = cfg or QuadratureConfig()
    policy = policy or TruncationPolicy()
    for first, second in ((lam, mu), (mu, lam_prime)):
        problem = compatibility_violation(first, second)
        if problem:
            raise ConstraintViolated(problem, "multiplication formula")
    thetas, weighted = _weighted_nodes(mu, cfg, policy)
    left = complex(0.0)
    for theta, weight in zip(thetas, weighted):
        y = math.cos(float(theta))
        left += weight * _poisson(x, y, lam, mu, t, policy) * _poisson(y, x_prime, mu, lam_prime, t_prime, policy)
    right = _poisson(x, x_prime, lam, lam_prime, t * t_prime, policy)
    return CheckReport.build(
        identity_id="check_multiplication",
        observed_error=relative_error(left, right),
        tolerance=tol,
        witness={
            "q": lam.q.q,
            "lambda": list(lam.values),
            "mu": list(mu.values),
            "lambda_prime": list(lam_prime.values),
            "t": complex_pair(t),
            "t_prime": complex_pair(t_prime),
            "x": x,
            "x_prime": x_prime,
            "panels": cfg.panels,
        },
        diagnostics={"left": complex_pair(left), "right": complex_pair(right)},
    )


def check_projection(lam: ParamSet,
                     mu: ParamSet,
                     t: complex,
                     m: int,
                     x: float,
                     tol: float = 1e-7,
                     cfg: Optional[QuadratureConfig] = None,
                     policy: Optional[TruncationPolicy] = None) -> CheckReport:
    """t^m h_m^lam p_m^lam(x) = int P_t^{lam, mu}(x, y) h_m^mu p_m^mu(y) rho^mu(y) dy."""
    cfg = cfg or QuadratureConfig()
    policy = policy or TruncationPolicy()
    problem = compatibility_violation(lam, mu)
    if problem:
        raise ConstraintViolated(problem, "projection formula")
    q = lam.q.q
    thetas, weighted = _weighted_nodes(mu, cfg, policy)
    norm_mu = aw_norm(m, mu, policy)
    left = complex(0.0)
    for theta, weight in zip(thetas, weighted):
        theta = float(theta)
        y = math.cos(theta)
        left += weight * _poisson(x, y, lam, mu, t, policy) * norm_mu * aw_poly_angle(m, theta, mu.values, q, policy)
    right = t ** m * aw_norm(m, lam, policy) * aw_poly_angle(m, angle_of(x), lam.values, q, policy)
    return CheckReport.build(
        identity_id="check_projection",
        observed_error=relative_error(left, right),
        tolerance=tol,
        witness={"q": q, "lambda": list(lam.values), "mu": list(mu.values), "t": complex_pair(t),
                 "m": m, "x": x, "panels": cfg.panels},
        diagnostics={"left": complex_pair(left), "right": complex_pair(right)},
    )


def delta_panels(r: float, cfg: QuadratureConfig) -> int:
    """Panels per half-interval; the kernel peak narrows like 1 - r."""
    if r <= 0.99:
        return cfg.panels
    return int(math.ceil(2 * cfg.panels * 0.01 / (1.0 - r)))


def delta_integral(r: float, f: Callable[[float], float], x: float, q: float,
                   cfg: QuadratureConfig, policy: TruncationPolicy) -> float:
    """int K0_r(x, y) f(y) dy, split at the peak phi = theta."""
    theta = angle_of(x)
    panels = delta_panels(r, cfg)

    def integrand(phi: float) -> float:
        return qhermite_delta_density(theta, phi, r, q, policy) * f(math.cos(phi))

    total = complex(0.0)
    if theta > 0.0:
        total += integrate_angle(integrand, cfg.on(0.0, theta, panels))
    if theta < math.pi:
        total += integrate_angle(integrand, cfg.on(theta, math.pi, panels))
    return total.real


def check_delta_limit(r: float,
                      f_name: str,
                      x: float,
                      q: float,
                      tol: float,
                      cfg: Optional[QuadratureConfig] = None,
                      policy: Optional[TruncationPolicy] = None,
                      identity_id: str = "check_delta_limit") -> CheckReport:
    """|int K0_r(x, y) f(y) dy - f(x)| for one of the named TEST_FUNCTIONS."""
    if not 0.0 < r < 1.0:
        raise ConstraintViolated("0 < r < 1", f"r={r}")
    if f_name not in TEST_FUNCTIONS:
        raise ConstraintViolated("known test function", f"f={f_name!r}")
    cfg = cfg or QuadratureConfig()
    policy = policy or TruncationPolicy()
    f = TEST_FUNCTIONS[f_name]
    integral = delta_integral(r, f, x, q, cfg, policy)
    return CheckReport.build(
        identity_id=identity_id,
        observed_error=abs(integral - f(x)),
        tolerance=tol,
        witness={"q": q, "r": r, "f": f_name, "x": x, "panels": cfg.panels},
        diagnostics={"integral": integral, "panels_per_half": delta_panels(r, cfg)},
    )


def check_delta_monotonicity(f_name: str,
                             x: float,
                             q: float,
                             r_low: float = 0.99,
                             r_high: float = 0.999,
                             cfg: Optional[QuadratureConfig] = None,
                             policy: Optional[TruncationPolicy] = None) -> CheckReport:
    """The delta-sequence error at r_high does not exceed the error at r_low."""
    low = check_delta_limit(r_low, f_name, x, q, math.inf, cfg, policy)
    high = check_delta_limit(r_high, f_name, x, q, math.inf, cfg, policy)
    return CheckReport.build(
        identity_id="check_delta_monotonicity",
        observed_error=max(0.0, high.observed_error - low.observed_error),
        tolerance=0.0,
        witness={"q": q, "f": f_name, "x": x, "r_low": r_low, "r_high": r_high},
        diagnostics={"error_low": low.observed_error, "error_high": high.observed_error},
    )
