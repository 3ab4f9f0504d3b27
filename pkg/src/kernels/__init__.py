"""
Poisson-type kernels: direct bilinear sums, the explicit Askey-Wilson
expansion, t = 1 product forms and the degenerate-family kernels
"""

from .params import KernelParams, KernelValue
from .direct import (
    asc_direct,
    asc_norm_direct,
    bigqh_direct,
    bigqh_norm_direct,
    bilinear_direct,
    bilinear_sum,
    dual_qhahn_direct,
    iter_norm_ratio,
    kernel_direct,
)
from .closed_forms import (
    kernel_unity,
    kernel_unity_angle,
    mehler_kernel,
    mehler_series,
    qhermite_delta_density,
    qhermite_delta_kernel,
    qhermite_poisson,
    qhermite_poisson_angle,
    qhermite_poisson_series,
)
from .special import (
    asc_kernel,
    asc_kernel_norm,
    asc_kernel_unity,
    bigqh_kernel,
    bigqh_kernel_norm,
    dual_qhahn_kernel,
    dual_qhahn_kernel_unity,
    j_t,
    qhermite_qbessel_kernel,
)
from .explicit import ExplicitKernel, kernel_explicit

__all__ = [
    "ExplicitKernel",
    "KernelParams",
    "KernelValue",
    "asc_direct",
    "asc_kernel",
    "asc_kernel_norm",
    "asc_kernel_unity",
    "asc_norm_direct",
    "bigqh_direct",
    "bigqh_kernel",
    "bigqh_kernel_norm",
    "bigqh_norm_direct",
    "bilinear_direct",
    "bilinear_sum",
    "dual_qhahn_direct",
    "dual_qhahn_kernel",
    "dual_qhahn_kernel_unity",
    "iter_norm_ratio",
    "j_t",
    "kernel_direct",
    "kernel_explicit",
    "kernel_unity",
    "kernel_unity_angle",
    "mehler_kernel",
    "mehler_series",
    "qhermite_delta_density",
    "qhermite_delta_kernel",
    "qhermite_poisson",
    "qhermite_poisson_angle",
    "qhermite_poisson_series",
    "qhermite_qbessel_kernel",
]
