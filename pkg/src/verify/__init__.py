"""
Numerical verification: quadrature, identity checks and the acceptance suite
"""

from .quadrature import (
    AskeyWilsonWeight,
    QHermiteWeight,
    QuadratureConfig,
    Weight,
    integrate_angle,
    integrate_weighted,
    theta_rule,
)
from .checks import (
    TEST_FUNCTIONS,
    check_delta_limit,
    check_delta_monotonicity,
    check_multiplication,
    check_orthogonality,
    check_projection,
    check_wavefunction_orthogonality,
    check_weight_normalization,
)
from .kernel_checks import (
    check_asc_kernel,
    check_asc_norm_forms,
    check_asc_norm_kernel,
    check_asc_unity,
    check_aw_qintegral,
    check_aw_recurrence,
    check_bigqh_kernel,
    check_bigqh_norm_kernel,
    check_degenerate_forms,
    check_dual_qhahn_kernel,
    check_dual_qhahn_unity,
    check_kernel_explicit,
    check_kernel_reality,
    check_kernel_symmetry,
    check_kernel_unity,
    check_mehler,
    check_qbessel_reduction,
    check_qhermite_limit,
    check_qhermite_poisson,
    check_unity_ratio,
)
from .registry import RegisteredCheck, SuiteContext, default_registry
from .suite import SuiteConfig, SuiteRunner, all_passed, run_suite

__all__ = [
    "AskeyWilsonWeight",
    "QHermiteWeight",
    "QuadratureConfig",
    "RegisteredCheck",
    "SuiteConfig",
    "SuiteContext",
    "SuiteRunner",
    "TEST_FUNCTIONS",
    "Weight",
    "all_passed",
    "check_asc_kernel",
    "check_asc_norm_forms",
    "check_asc_norm_kernel",
    "check_asc_unity",
    "check_aw_qintegral",
    "check_aw_recurrence",
    "check_bigqh_kernel",
    "check_bigqh_norm_kernel",
    "check_degenerate_forms",
    "check_delta_limit",
    "check_delta_monotonicity",
    "check_dual_qhahn_kernel",
    "check_dual_qhahn_unity",
    "check_kernel_explicit",
    "check_kernel_reality",
    "check_kernel_symmetry",
    "check_kernel_unity",
    "check_mehler",
    "check_multiplication",
    "check_orthogonality",
    "check_projection",
    "check_qbessel_reduction",
    "check_qhermite_limit",
    "check_qhermite_poisson",
    "check_unity_ratio",
    "check_wavefunction_orthogonality",
    "check_weight_normalization",
    "default_registry",
    "integrate_angle",
    "integrate_weighted",
    "run_suite",
    "theta_rule",
]
