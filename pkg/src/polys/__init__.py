"""
Askey-Wilson polynomials, their degenerate relatives, weights and norms
"""

from .params import MuParams, ParamSet, compatibility_violation, unity_violation
from .askey_wilson import (
    angle_of,
    aw_norm,
    aw_poly,
    aw_poly_angle,
    aw_poly_qint,
    aw_poly_sequence,
    aw_spec,
    aw_weight,
    h0,
    iter_aw_poly,
    norm_ratio,
    weight_density,
)
from .degenerate import (
    alsalam_chihara,
    alsalam_chihara_2phi1,
    alsalam_chihara_norm,
    big_qhermite,
    big_qhermite_scaled,
    big_qhermite_scaled_angle,
    big_qhermite_sum,
    dual_qhahn,
    iter_big_qhermite_scaled,
    q_laguerre,
)
from .hermite import (
    cont_qhermite,
    cont_qhermite_angle,
    hermite,
    hermite_psi,
    q_wavefunction,
    qhermite_sequence,
    rho0,
)

__all__ = [
    "MuParams",
    "ParamSet",
    "alsalam_chihara",
    "alsalam_chihara_2phi1",
    "alsalam_chihara_norm",
    "angle_of",
    "aw_norm",
    "aw_poly",
    "aw_poly_angle",
    "aw_poly_qint",
    "aw_poly_sequence",
    "aw_spec",
    "aw_weight",
    "big_qhermite",
    "big_qhermite_scaled",
    "big_qhermite_scaled_angle",
    "big_qhermite_sum",
    "compatibility_violation",
    "cont_qhermite",
    "cont_qhermite_angle",
    "dual_qhahn",
    "h0",
    "hermite",
    "hermite_psi",
    "iter_aw_poly",
    "iter_big_qhermite_scaled",
    "norm_ratio",
    "q_laguerre",
    "q_wavefunction",
    "qhermite_sequence",
    "rho0",
    "unity_violation",
    "weight_density",
]
