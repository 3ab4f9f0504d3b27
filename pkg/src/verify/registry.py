"""
Registry of every suite check with its tolerance.

Tolerances are per identity: the multi-sum kernels carry more truncation
error than single products, and the t = 1 forms are compared with direct
sums extrapolated from t = 0.999 and t = 0.998.
"""

import cmath
import math
import zlib
from typing import Callable, List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..kernels import (
    asc_kernel,
    asc_kernel_norm,
    bigqh_kernel,
    dual_qhahn_kernel_unity,
    kernel_unity,
)
from ..polys.params import ParamSet
from ..qcore.types import CheckReport, TruncationPolicy
from ..qseries import check_2phi1_2phi2, check_3phi2_sum, check_6w5_split
from . import checks, kernel_checks
from .quadrature import QuadratureConfig
from .sampling import sample_2phi1_point, sample_6w5_point
from .standard import (
    ASC_LAMBDA,
    ASC_MU,
    ASC_Q,
    BIGQH_A,
    BIGQH_ALPHA,
    DUAL_QHAHN_LAMBDA,
    DUAL_QHAHN_MU,
    DUAL_QHAHN_UNITY_MU,
    GRID,
    STANDARD_Q,
    SYMMETRY_LAMBDA,
    UNITY_MU,
    standard_kernel,
    standard_lambda,
    standard_mu,
)


class SuiteContext:
    """What every runner sees: quadrature rule, truncation policy and sampling seed."""

    def __init__(self,
                 quadrature: Optional[QuadratureConfig] = None,
                 policy: Optional[TruncationPolicy] = None,
                 seed: int = 42,
                 samples: int = 100):
        self.quadrature = quadrature or QuadratureConfig()
        self.policy = policy or TruncationPolicy()
        self.seed = seed
        self.samples = samples

    def rng(self, name: str) -> np.random.Generator:
        """A generator keyed by seed and check name, independent of run order."""
        return np.random.default_rng([self.seed, zlib.crc32(name.encode("utf-8"))])


Runner = Callable[[SuiteContext, float], List[CheckReport]]


class RegisteredCheck(BaseModel):
    """One entry of the suite."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    tolerance: float
    runner: Runner
    slow: bool = False

    def run(self, ctx: SuiteContext) -> List[CheckReport]:
        return self.runner(ctx, self.tolerance)


def _six_w_five(ctx: SuiteContext, tol: float) -> List[CheckReport]:
    lam = standard_lambda()
    reports = [check_6w5_split(cmath.exp(0.3j), cmath.exp(-0.2j), 0.3, lam, policy=ctx.policy, tol=tol)]
    rng = ctx.rng("check_6w5_split")
    for _ in range(ctx.samples):
        point = sample_6w5_point(rng)
        reports.append(check_6w5_split(point["u"], point["v"], point["t"], point["lam"], policy=ctx.policy, tol=tol))
    return reports


def _two_phi_one(ctx: SuiteContext, tol: float) -> List[CheckReport]:
    reports = [check_2phi1_2phi2(cmath.exp(0.3j), cmath.exp(-0.2j), 0.3, 0.3, 0.2, STANDARD_Q,
                                 policy=ctx.policy, tol=tol)]
    rng = ctx.rng("check_2phi1_2phi2")
    for _ in range(max(1, ctx.samples // 2)):
        p = sample_2phi1_point(rng)
        reports.append(check_2phi1_2phi2(p["u"], p["v"], p["t"], p["b"], p["c"], p["q"], policy=ctx.policy, tol=tol))
    return reports


def _three_phi_two(ctx: SuiteContext, tol: float) -> List[CheckReport]:
    alpha, beta, _, delta = UNITY_MU
    return [check_3phi2_sum(alpha, beta, delta, phi, STANDARD_Q, ctx.policy, tol) for phi in (0.7, 1.3)]


def _weight_normalization(ctx: SuiteContext, tol: float) -> List[CheckReport]:
    lam = standard_lambda()
    return [checks.check_weight_normalization(params, tol, ctx.quadrature, ctx.policy)
            for params in (lam, ParamSet(values=standard_mu(lam=lam).values, q=lam.q))]


def _orthogonality(ctx: SuiteContext, tol: float) -> List[CheckReport]:
    return checks.check_orthogonality(standard_lambda(), 5, tol, ctx.quadrature, ctx.policy)


def _wavefunctions(ctx: SuiteContext, tol: float) -> List[CheckReport]:
    return checks.check_wavefunction_orthogonality(STANDARD_Q, 4, tol, ctx.quadrature, ctx.policy)


def _multiplication(ctx: SuiteContext, tol: float) -> List[CheckReport]:
    lam = standard_lambda()
    mu = ParamSet(values=standard_mu(lam=lam).values, q=lam.q)
    x, x_prime = math.cos(1.0), math.cos(1.8)
    return [checks.check_multiplication(lam, mu, lam, t, t_prime, x, x_prime, tol, ctx.quadrature, ctx.policy)
            for t, t_prime in ((0.35, 0.35), (0.5, 0.2), (0.3, 0.0))]


def _projection(ctx: SuiteContext, tol: float) -> List[CheckReport]:
    lam = standard_lambda()
    mu = ParamSet(values=standard_mu(lam=lam).values, q=lam.q)
    return [checks.check_projection(lam, mu, t, m, math.cos(1.2), tol, ctx.quadrature, ctx.policy)
            for t, m in ((0.3, 0), (0.4, 2), (0.25, 4), (0.4, 4))]


def _delta_normalization(ctx: SuiteContext, tol: float) -> List[CheckReport]:
    return [checks.check_delta_limit(r, "one", x, STANDARD_Q, tol, ctx.quadrature, ctx.policy,
                                     identity_id="check_delta_normalization")
            for r, x in ((0.5, 0.3), (0.9, -0.4))]


def _delta_limit(ctx: SuiteContext, tol: float) -> List[CheckReport]:
    return [checks.check_delta_limit(0.995, "square", 0.3, STANDARD_Q, tol, ctx.quadrature, ctx.policy)]


def _delta_monotonicity(ctx: SuiteContext, tol: float) -> List[CheckReport]:
    radii = (0.9, 0.99, 0.995)
    return [checks.check_delta_monotonicity("square", 0.3, STANDARD_Q, low, high, ctx.quadrature, ctx.policy)
            for low, high in zip(radii, radii[1:])]


def _qhermite_limit(ctx: SuiteContext, tol: float) -> List[CheckReport]:
    return [kernel_checks.check_qhermite_limit(n, 1.1, STANDARD_Q, tol) for n in range(11)]


def _kernel_explicit(ctx: SuiteContext, tol: float) -> List[CheckReport]:
    kp = standard_kernel(0.3)
    return [kernel_checks.check_kernel_explicit(kp, theta, phi, tol, ctx.policy) for theta in GRID for phi in GRID]


def _kernel_symmetry(ctx: SuiteContext, tol: float) -> List[CheckReport]:
    lam = standard_lambda(SYMMETRY_LAMBDA)
    return [kernel_checks.check_kernel_symmetry(lam, 0.3, 0.7, 1.5, False, tol, ctx.policy)]


def _kernel_symmetry_explicit(ctx: SuiteContext, tol: float) -> List[CheckReport]:
    lam = standard_lambda(SYMMETRY_LAMBDA)
    return [kernel_checks.check_kernel_symmetry(lam, 0.3, 0.7, 1.5, True, tol, ctx.policy)]


def _unity_pair():
    lam = standard_lambda()
    return lam, standard_mu(UNITY_MU, lam=lam, unity=True)


def _kernel_unity(ctx: SuiteContext, tol: float) -> List[CheckReport]:
    lam, mu = _unity_pair()
    return [kernel_checks.check_kernel_unity(lam, mu, tol, policy=ctx.policy)]


def _unity_ratio(ctx: SuiteContext, tol: float) -> List[CheckReport]:
    lam, mu = _unity_pair()
    return [kernel_checks.check_unity_ratio(lam, mu, tol, policy=ctx.policy)]


def _dual_qhahn_pair(mu_values=DUAL_QHAHN_MU):
    lam = standard_lambda(DUAL_QHAHN_LAMBDA)
    return lam, ParamSet(values=mu_values, q=lam.q)


def _dual_qhahn(ctx: SuiteContext, tol: float) -> List[CheckReport]:
    lam, mu = _dual_qhahn_pair()
    return [kernel_checks.check_dual_qhahn_kernel(lam, mu, 0.3, tol, policy=ctx.policy)]


def _dual_qhahn_unity(ctx: SuiteContext, tol: float) -> List[CheckReport]:
    lam, mu = _dual_qhahn_pair(DUAL_QHAHN_UNITY_MU)
    return [kernel_checks.check_dual_qhahn_unity(lam, mu, tol, policy=ctx.policy)]


def _asc_pair():
    lam = ParamSet(values=ASC_LAMBDA, q=ASC_Q)
    return lam, ParamSet(values=ASC_MU, q=ASC_Q)


def _asc(ctx: SuiteContext, tol: float) -> List[CheckReport]:
    lam, mu = _asc_pair()
    return [kernel_checks.check_asc_kernel(lam, mu, 0.35, tol, policy=ctx.policy)]


def _asc_norm(ctx: SuiteContext, tol: float) -> List[CheckReport]:
    lam, mu = _asc_pair()
    return [kernel_checks.check_asc_norm_kernel(lam, mu, 0.35, tol, policy=ctx.policy)]


def _asc_norm_forms(ctx: SuiteContext, tol: float) -> List[CheckReport]:
    lam, mu = _asc_pair()
    return [kernel_checks.check_asc_norm_forms(lam, mu, 0.35, 1.1, 0.6, tol, ctx.policy)]


def _asc_unity(ctx: SuiteContext, tol: float) -> List[CheckReport]:
    lam, mu = _asc_pair()
    return [kernel_checks.check_asc_unity(lam, mu, tol, policy=ctx.policy)]


def _bigqh(ctx: SuiteContext, tol: float) -> List[CheckReport]:
    return [kernel_checks.check_bigqh_kernel(BIGQH_A, BIGQH_ALPHA, 0.3, STANDARD_Q, tol, policy=ctx.policy)]


def _bigqh_norm(ctx: SuiteContext, tol: float) -> List[CheckReport]:
    return [kernel_checks.check_bigqh_norm_kernel(BIGQH_A, BIGQH_ALPHA, 0.3, STANDARD_Q, tol, policy=ctx.policy)]


def _qbessel(ctx: SuiteContext, tol: float) -> List[CheckReport]:
    return [kernel_checks.check_qbessel_reduction(BIGQH_ALPHA, 0.3, STANDARD_Q, tol, policy=ctx.policy)]


def _mehler(ctx: SuiteContext, tol: float) -> List[CheckReport]:
    points = (-2.0, -0.5, 0.5, 2.0)
    reports = []
    for t in (0.2, 0.5, 0.8):
        # 0.8^300 keeps the truncated tail below 1e-10 of the kernel
        terms = 50 if t <= 0.5 else 300
        for x in points:
            for y in points:
                if t > 0.5 and x * y < -3.0:
                    # e^-36 at opposite corners is below double-precision rounding of the terms
                    continue
                reports.append(kernel_checks.check_mehler(x, y, t, terms, tol))
    return reports


def _qhermite_poisson(ctx: SuiteContext, tol: float) -> List[CheckReport]:
    return [kernel_checks.check_qhermite_poisson(1.0, 0.7, 0.4, STANDARD_Q, 60, tol, policy=ctx.policy)]


def _reality(ctx: SuiteContext, tol: float) -> List[CheckReport]:
    lam, mu = _unity_pair()
    dq_lam, dq_mu = _dual_qhahn_pair(DUAL_QHAHN_UNITY_MU)
    asc_lam, asc_mu = _asc_pair()
    policy = ctx.policy
    kernels = {
        "kernel_unity": lambda x, y: kernel_unity(x, y, lam, mu, policy),
        "dual_qhahn_kernel_unity": lambda x, y: dual_qhahn_kernel_unity(x, y, dq_lam, dq_mu, policy),
        "asc_kernel": lambda x, y: asc_kernel(x, y, asc_lam, asc_mu, 0.35, policy),
        "asc_kernel_norm": lambda x, y: asc_kernel_norm(x, y, asc_lam, asc_mu, 0.35, 2, policy),
        "bigqh_kernel": lambda x, y: bigqh_kernel(x, y, BIGQH_A, BIGQH_ALPHA, 0.3, STANDARD_Q, policy),
    }
    return [kernel_checks.check_kernel_reality(name, kernel, tol) for name, kernel in kernels.items()]


def _aw_recurrence(ctx: SuiteContext, tol: float) -> List[CheckReport]:
    return [kernel_checks.check_aw_recurrence(standard_lambda(), 1.1, 8, tol, ctx.policy)]


def _aw_qintegral(ctx: SuiteContext, tol: float) -> List[CheckReport]:
    return [kernel_checks.check_aw_qintegral(standard_lambda(), n, 1.1, tol, ctx.policy) for n in range(5)]


def _degenerate_forms(ctx: SuiteContext, tol: float) -> List[CheckReport]:
    lam, _ = _asc_pair()
    return [kernel_checks.check_degenerate_forms(lam, BIGQH_A, range(6), 1.1, tol, ctx.policy)]


def default_registry() -> List[RegisteredCheck]:
    """Every check of the acceptance run, slow ones flagged."""
    entries = [
        ("check_6w5_split", 1e-8, _six_w_five, False),
        ("check_2phi1_2phi2", 1e-9, _two_phi_one, False),
        ("check_3phi2_sum", 1e-10, _three_phi_two, False),
        ("check_weight_normalization", 1e-8, _weight_normalization, False),
        ("check_orthogonality", 1e-8, _orthogonality, False),
        ("check_wavefunction_orthogonality", 1e-8, _wavefunctions, False),
        ("check_multiplication", 1e-6, _multiplication, True),
        ("check_projection", 1e-7, _projection, True),
        ("check_delta_normalization", 1e-8, _delta_normalization, False),
        ("check_delta_limit", 0.05, _delta_limit, True),
        ("check_delta_monotonicity", 0.0, _delta_monotonicity, True),
        ("check_qhermite_limit", 1e-12, _qhermite_limit, False),
        ("check_kernel_explicit", 1e-7, _kernel_explicit, True),
        ("check_kernel_symmetry", 1e-9, _kernel_symmetry, False),
        ("check_kernel_symmetry_explicit", 1e-9, _kernel_symmetry_explicit, True),
        ("check_kernel_unity", 1e-2, _kernel_unity, False),
        ("check_unity_ratio", 1e-9, _unity_ratio, False),
        ("check_dual_qhahn_kernel", 1e-7, _dual_qhahn, False),
        ("check_dual_qhahn_unity", 1e-2, _dual_qhahn_unity, False),
        ("check_asc_kernel", 1e-7, _asc, False),
        ("check_asc_norm_kernel", 1e-7, _asc_norm, False),
        ("check_asc_norm_forms", 1e-9, _asc_norm_forms, False),
        ("check_asc_unity", 1e-2, _asc_unity, False),
        ("check_bigqh_kernel", 1e-7, _bigqh, False),
        ("check_bigqh_norm_kernel", 1e-7, _bigqh_norm, False),
        ("check_qbessel_reduction", 1e-11, _qbessel, False),
        ("check_mehler", 1e-10, _mehler, False),
        ("check_qhermite_poisson", 1e-10, _qhermite_poisson, False),
        ("check_kernel_reality", 1e-9, _reality, False),
        ("check_aw_recurrence", 1e-10, _aw_recurrence, False),
        ("check_aw_qintegral", 1e-9, _aw_qintegral, False),
        ("check_degenerate_forms", 1e-10, _degenerate_forms, False),
    ]
    return [RegisteredCheck(name=name, tolerance=tol, runner=runner, slow=slow)
            for name, tol, runner, slow in entries]
