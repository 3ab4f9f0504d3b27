"""
Basic hypergeometric series, very-well-poised series and the q-integral
"""

from .hypergeometric import (
    PhiSpec,
    eval_W,
    eval_phi,
    idem,
    phi,
    phi_terms,
    sum_series,
    termination_index,
    w_spec,
)
from .qintegral import q_integral
from .transformations import check_2phi1_2phi2, check_3phi2_sum, check_6w5_split

__all__ = [
    "PhiSpec",
    "check_2phi1_2phi2",
    "check_3phi2_sum",
    "check_6w5_split",
    "eval_W",
    "eval_phi",
    "idem",
    "phi",
    "phi_terms",
    "q_integral",
    "sum_series",
    "termination_index",
    "w_spec",
]
