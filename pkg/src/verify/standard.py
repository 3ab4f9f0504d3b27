"""
The blessed resonance-free parameter points shared by every suite.
"""

from typing import Optional, Tuple

from ..kernels.params import KernelParams
from ..polys.params import MuParams, ParamSet

STANDARD_Q = 0.5
STANDARD_LAMBDA = (0.4, 0.3, 0.2, 0.1)
# alpha gamma = ac, beta delta = bd with gamma = 0.25, delta = 0.15
STANDARD_MU = (0.32, 0.2, 0.25, 0.15)
# beta = bc / gamma, delta = bd / beta for the t = 1 closed form
UNITY_MU = (0.32, 0.24, 0.25, 0.125)
GRID = (0.7, 1.5, 2.4)
# mu = lambda with alpha / delta off the q-lattice
SYMMETRY_LAMBDA = (0.4, 0.3, 0.2, 0.15)

DUAL_QHAHN_LAMBDA = (0.4, 0.3, 0.2)
DUAL_QHAHN_MU = (0.32, 0.2, 0.25)
DUAL_QHAHN_UNITY_MU = (0.32, 0.24, 0.25)

ASC_Q = 0.4
ASC_LAMBDA = (0.5, 0.3)
ASC_MU = (0.3, 0.5)

BIGQH_A = 0.4
BIGQH_ALPHA = 0.3


def standard_lambda(values: Tuple[float, ...] = STANDARD_LAMBDA, q: float = STANDARD_Q) -> ParamSet:
    return ParamSet(values=values, q=q)


def standard_mu(values: Tuple[float, ...] = STANDARD_MU,
                lam: Optional[ParamSet] = None,
                unity: bool = False) -> MuParams:
    lam = lam or standard_lambda()
    return MuParams(values=values, q=lam.q, companion=lam, unity=unity)


def standard_kernel(t: complex) -> KernelParams:
    lam = standard_lambda()
    return KernelParams(lam=lam, mu=standard_mu(lam=lam), t=t)
