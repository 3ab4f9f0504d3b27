"""
Exact-contract building blocks: q-shifted factorials and the h(x;a) product
"""

from .errors import (
    ConstraintViolated,
    Divergent,
    EndpointSingularity,
    MaxTermsExceeded,
    NonFiniteIntegrand,
    NonFiniteValue,
    PoleGuardTripped,
    PoleInDenominator,
    QKernelError,
)
from .pochhammer import (
    INFINITY,
    h_factor,
    h_multi,
    lattice_index,
    pole_guard,
    qpoch_inf,
    qpoch_multi,
    qpoch_n,
)
from .types import CheckReport, QBase, SeriesValue, TruncationPolicy

__all__ = [
    "CheckReport",
    "ConstraintViolated",
    "Divergent",
    "EndpointSingularity",
    "INFINITY",
    "MaxTermsExceeded",
    "NonFiniteIntegrand",
    "NonFiniteValue",
    "PoleGuardTripped",
    "PoleInDenominator",
    "QBase",
    "QKernelError",
    "SeriesValue",
    "TruncationPolicy",
    "h_factor",
    "h_multi",
    "lattice_index",
    "pole_guard",
    "qpoch_inf",
    "qpoch_multi",
    "qpoch_n",
]
