"""
Continuous q-Hermite polynomials and q-wave functions, plus the classical
Hermite polynomials and oscillator wave functions.
"""

import math
from typing import List, Optional

from ..qcore.errors import ConstraintViolated, EndpointSingularity
from ..qcore.pochhammer import h_factor, qpoch_inf, qpoch_n
from ..qcore.types import TruncationPolicy
from .askey_wilson import angle_of


def cont_qhermite_angle(n: int, theta: float, q: float) -> float:
    """H_n(cos theta | q) = sum_k (q;q)_n / ((q;q)_k (q;q)_{n-k}) e^{i(n-2k) theta}."""
    if n < 0:
        raise ConstraintViolated("n >= 0", f"n={n}")
    qn = qpoch_n(q, q, n).real
    total = 0.0
    for k in range(n + 1):
        binomial = qn / (qpoch_n(q, q, k).real * qpoch_n(q, q, n - k).real)
        total += binomial * math.cos((n - 2 * k) * theta)
    return total


def cont_qhermite(n: int, x: float, q: float) -> float:
    """Continuous q-Hermite polynomial H_n(x | q)."""
    return cont_qhermite_angle(n, angle_of(x), q)


def qhermite_sequence(n_max: int, theta: float, q: float) -> List[float]:
    """H_0 .. H_{n_max} at cos theta from 2x H_n = H_{n+1} + (1 - q^n) H_{n-1}."""
    x = math.cos(theta)
    sequence = [1.0]
    previous = 0.0
    for n in range(n_max):
        current = sequence[-1]
        following = 2 * x * current - (1 - q ** n) * previous
        previous = current
        sequence.append(following)
    return sequence


def rho0(x: float, q: float, policy: Optional[TruncationPolicy] = None) -> float:
    """4 sqrt(1-x^2) prod_{k>=1} (1 - 2(2x^2-1) q^k + q^{2k})."""
    angle_of(x)
    product = h_factor(2 * x * x - 1, q, q, policy).value.real
    return 4.0 * math.sqrt(1.0 - x * x) * product


def q_wavefunction(n: int, x: float, q: float, policy: Optional[TruncationPolicy] = None) -> float:
    """Psi_n(x | q) = [(q^{n+1}; q)_inf / 2 pi]^{1/2} sqrt(rho0(x)) H_n(x | q)."""
    theta = angle_of(x)
    if abs(x) == 1.0:
        raise EndpointSingularity("|x| < 1", f"x={x}")
    scale = qpoch_inf(q ** (n + 1), q, policy).value.real / (2.0 * math.pi)
    return math.sqrt(scale) * math.sqrt(rho0(x, q, policy)) * cont_qhermite_angle(n, theta, q)


def hermite(n: int, x: float) -> float:
    """Physicists' Hermite polynomial from H_{n+1} = 2x H_n - 2n H_{n-1}."""
    if n < 0:
        raise ConstraintViolated("n >= 0", f"n={n}")
    previous, current = 0.0, 1.0
    for k in range(n):
        previous, current = current, 2 * x * current - 2 * k * previous
    return current


def hermite_psi(n: int, x: float) -> float:
    """
    Psi_n(x) = (2^n n! sqrt(pi))^{-1/2} H_n(x) e^{-x^2/2}, generated by the
    normalised recurrence so large n does not overflow.
    """
    if n < 0:
        raise ConstraintViolated("n >= 0", f"n={n}")
    previous = 0.0
    current = math.pi ** -0.25 * math.exp(-x * x / 2)
    for k in range(n):
        previous, current = current, math.sqrt(2.0 / (k + 1)) * x * current - math.sqrt(k / (k + 1)) * previous
    return current
