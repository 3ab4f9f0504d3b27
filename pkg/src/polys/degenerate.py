"""
Families below Askey-Wilson obtained by zeroing parameters: continuous dual
q-Hahn, Al-Salam-Chihara (plain and normalised), continuous big q-Hermite and
continuous q-Laguerre.
"""

import cmath
import math
from typing import Iterator, Optional

from ..qcore.errors import ConstraintViolated
from ..qcore.pochhammer import qpoch_n_ratio
from ..qcore.types import TruncationPolicy
from ..qseries.hypergeometric import phi
from .askey_wilson import angle_of
from .params import ParamSet


def _require_length(params: ParamSet, length: int) -> None:
    if len(params.values) != length:
        raise ConstraintViolated(f"{length} parameters", f"got {len(params.values)}")


def dual_qhahn(n: int, x: float, params: ParamSet, policy: Optional[TruncationPolicy] = None) -> complex:
    """p_n(x; a, b, c) = 3phi2[q^{-n}, a e^{i theta}, a e^{-i theta}; ab, ac; q, q]."""
    _require_length(params, 3)
    if n == 0:
        return complex(1.0)
    q = params.q.q
    a, b, c = params.values
    u = cmath.exp(1j * angle_of(x))
    return phi([q ** (-n), a * u, a / u], [a * b, a * c], q, q, policy)


def alsalam_chihara(n: int, x: float, params: ParamSet, policy: Optional[TruncationPolicy] = None) -> complex:
    """p_n(x; a, b) = 3phi2[q^{-n}, a e^{i theta}, a e^{-i theta}; ab, 0; q, q]."""
    _require_length(params, 2)
    if n == 0:
        return complex(1.0)
    q = params.q.q
    a, b = params.values
    u = cmath.exp(1j * angle_of(x))
    return phi([q ** (-n), a * u, a / u], [a * b, 0.0], q, q, policy)


def alsalam_chihara_2phi1(n: int, x: float, params: ParamSet,
                          policy: Optional[TruncationPolicy] = None) -> complex:
    """
    The same polynomial as (b e^{-i theta}; q)_n / (ab; q)_n (a e^{i theta})^n
    2phi1[q^{-n}, a e^{i theta}; q^{1-n} e^{i theta}/b; q, q e^{-i theta}/b].
    """
    _require_length(params, 2)
    q = params.q.q
    a, b = params.values
    if b == 0:
        raise ConstraintViolated("b ≠ 0", "the 2phi1 form divides by b")
    u = cmath.exp(1j * angle_of(x))
    series = phi([q ** (-n), a * u], [q ** (1 - n) * u / b], q / (u * b), q, policy)
    return qpoch_n_ratio([b / u], [a * b], q, n) * (a * u) ** n * series


def alsalam_chihara_norm(n: int, x: float, params: ParamSet,
                         policy: Optional[TruncationPolicy] = None) -> complex:
    """(ab; q)_n a^{-n} / (q; q)_n times the 3phi2 Al-Salam-Chihara polynomial."""
    _require_length(params, 2)
    q = params.q.q
    a, b = params.values
    if a == 0:
        raise ConstraintViolated("a ≠ 0", "the normalisation carries a^{-n}")
    return qpoch_n_ratio([a * b], [q], q, n) * a ** (-n) * alsalam_chihara(n, x, params, policy)


def big_qhermite(n: int, x: float, params: ParamSet, policy: Optional[TruncationPolicy] = None) -> complex:
    """p_n(x; a) = 3phi2[q^{-n}, a e^{i theta}, a e^{-i theta}; 0, 0; q, q]."""
    _require_length(params, 1)
    if n == 0:
        return complex(1.0)
    q = params.q.q
    (a,) = params.values
    u = cmath.exp(1j * angle_of(x))
    return phi([q ** (-n), a * u, a / u], [0.0, 0.0], q, q, policy)


def big_qhermite_scaled_angle(n: int, theta: float, a: float, q: float,
                              policy: Optional[TruncationPolicy] = None) -> complex:
    """
    a^{-n} p_n(cos theta; a) as e^{i n theta} sum_k (q^{-n}, a e^{i theta}; q)_k / (q; q)_k
    (-q^n e^{-2 i theta})^k q^{-k(k-1)/2}; finite at a = 0.
    """
    if n == 0:
        return complex(1.0)
    u = cmath.exp(1j * theta)
    # 2phi0 carries (-1)^k q^{-k(k-1)/2} by convention
    return u ** n * phi([q ** (-n), a * u], [], q ** n / (u * u), q, policy)


def big_qhermite_scaled(n: int, x: float, a: float, q: float,
                       policy: Optional[TruncationPolicy] = None) -> complex:
    """a^{-n} p_n(x; a), equal to H_n(x | q) at a = 0."""
    return big_qhermite_scaled_angle(n, angle_of(x), a, q, policy)


def iter_big_qhermite_scaled(theta: float, a: float, q: float) -> Iterator[float]:
    """a^{-n} p_n(cos theta; a) for n = 0, 1, ... from S_{n+1} = (2x - a q^n) S_n - (1 - q^n) S_{n-1}."""
    x = math.cos(theta)
    previous, current = 0.0, 1.0
    qn = 1.0
    while True:
        yield current
        previous, current = current, (2 * x - a * qn) * current - (1 - qn) * previous
        qn *= q


def big_qhermite_sum(n: int, x: float, params: ParamSet, policy: Optional[TruncationPolicy] = None) -> complex:
    """The k-sum form (a e^{i theta})^n sum_k ... of the big q-Hermite polynomial."""
    _require_length(params, 1)
    (a,) = params.values
    theta = angle_of(x)
    return (a ** n) * big_qhermite_scaled_angle(n, theta, a, params.q.q, policy)


def q_laguerre(n: int, x: float, alpha_lag: float, q: float,
               policy: Optional[TruncationPolicy] = None) -> complex:
    """Continuous q-Laguerre: normalised Al-Salam-Chihara at a = q^{(2 alpha+1)/4}, b = q^{(2 alpha+3)/4}."""
    params = ParamSet(values=(q ** ((2 * alpha_lag + 1) / 4), q ** ((2 * alpha_lag + 3) / 4)), q=q)
    return alsalam_chihara_norm(n, x, params, policy)
