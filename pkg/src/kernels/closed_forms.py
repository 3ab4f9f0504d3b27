"""
Product-form kernels: the t = 1 Askey-Wilson kernel, the continuous
q-Hermite Poisson kernel with its delta-sequence normalisation, and
Mehler's kernel for the Hermite functions.
"""

import cmath
import math
from typing import Optional

from ..polys.askey_wilson import angle_of
from ..polys.hermite import qhermite_sequence
from ..polys.params import MuParams, ParamSet, unity_violation
from ..qcore.errors import ConstraintViolated, EndpointSingularity
from ..qcore.pochhammer import h_angle, qpoch_ratio
from ..qcore.types import QBase, TruncationPolicy


def kernel_unity_angle(theta: float, phi: float, lam: ParamSet, mu: ParamSet,
                       policy: Optional[TruncationPolicy] = None) -> complex:
    """The t -> 1 kernel at x = cos theta, y = cos phi; conditions are the caller's."""
    policy = policy or TruncationPolicy()
    q = lam.q.q
    a, b, c, d = lam.values
    alpha, beta, _, _ = mu.values
    r = beta / b
    constant = qpoch_ratio([a * b * c * d, r * r],
                           [alpha * beta, a * c, a * d, b * c, b * d, c * d], q, policy)
    numerator = h_angle(phi, [alpha, beta], q, policy) * h_angle(theta, [c, d], q, policy)
    denominator = h_angle(theta + phi, [r], q, policy) * h_angle(theta - phi, [r], q, policy)
    return constant * numerator / denominator


def kernel_unity(x: float, y: float, lam: ParamSet, mu: MuParams,
                 policy: Optional[TruncationPolicy] = None) -> complex:
    """
    Closed product form of the Askey-Wilson kernel in the limit t -> 1.

    Args:
        x: First abscissa
        y: Second abscissa
        lam: (a, b, c, d)
        mu: (alpha, beta, gamma, delta) with alpha gamma = ac, beta delta = bd,
            beta gamma = bc and |beta| < |b|

    Returns:
        The kernel value, real up to rounding for real parameters

    Raises:
        ConstraintViolated: if mu misses one of the t = 1 conditions
    """
    if len(lam.values) != 4:
        raise ConstraintViolated("four parameters", f"got {len(lam.values)}")
    problem = unity_violation(lam, mu)
    if problem:
        raise ConstraintViolated(problem, "t = 1 closed form")
    return kernel_unity_angle(angle_of(x), angle_of(y), lam, mu, policy)


def qhermite_poisson_angle(theta: float, phi: float, r: float, q: float,
                           policy: Optional[TruncationPolicy] = None) -> float:
    policy = policy or TruncationPolicy()
    top = qpoch_ratio([r * r], [], q, policy)
    bottom = h_angle(theta + phi, [r], q, policy) * h_angle(theta - phi, [r], q, policy)
    return (top / bottom).real


def _check_radius(r: float) -> None:
    if not abs(r) < 1.0:
        raise ConstraintViolated("|r| < 1", f"r={r}")


def qhermite_poisson(x: float, y: float, r: float, q: float,
                     policy: Optional[TruncationPolicy] = None) -> float:
    """(r^2; q)_inf / (r e^{+-i theta +- i phi}; q)_inf, the q-Hermite Poisson kernel."""
    _check_radius(r)
    return qhermite_poisson_angle(angle_of(x), angle_of(y), r, QBase.of(q).q, policy)


def qhermite_poisson_series(x: float, y: float, r: float, q: float, N: int = 200) -> float:
    """sum_{n <= N} H_n(x | q) H_n(y | q) r^n / (q; q)_n."""
    _check_radius(r)
    qv = QBase.of(q).q
    hx = qhermite_sequence(N, angle_of(x), qv)
    hy = qhermite_sequence(N, angle_of(y), qv)
    total = 0.0
    coefficient = 1.0
    for n in range(N + 1):
        total += coefficient * hx[n] * hy[n]
        coefficient *= r / (1.0 - qv ** (n + 1))
    return total


def qhermite_delta_density(theta: float, phi: float, r: float, q: float,
                           policy: Optional[TruncationPolicy] = None) -> float:
    """sin phi K0_r(cos theta, cos phi); integrates to 1 over phi in (0, pi)."""
    policy = policy or TruncationPolicy()
    w = cmath.exp(2j * phi)
    weight = qpoch_ratio([q, w, 1 / w], [], q, policy).real / (2.0 * math.pi)
    return weight * qhermite_poisson_angle(theta, phi, r, q, policy)


def qhermite_delta_kernel(x: float, y: float, r: float, q: float,
                          policy: Optional[TruncationPolicy] = None) -> float:
    """
    K0_r(x, y) = (q, r^2, e^{2i phi}, e^{-2i phi}; q)_inf
    / (2 pi sin phi (r e^{+-i theta +- i phi}; q)_inf), tending to delta(x - y) as r -> 1.
    """
    _check_radius(r)
    phi = angle_of(y)
    if abs(y) == 1.0:
        raise EndpointSingularity("|y| < 1", f"y={y}")
    return qhermite_delta_density(angle_of(x), phi, r, QBase.of(q).q, policy) / math.sin(phi)


def mehler_kernel(x: float, y: float, t: float) -> float:
    """[pi (1 - t^2)]^{-1/2} exp[(4xyt - (x^2 + y^2)(1 + t^2)) / (2(1 - t^2))]."""
    if not abs(t) < 1.0:
        raise ConstraintViolated("|t| < 1", f"t={t}")
    one_minus = 1.0 - t * t
    exponent = (4.0 * x * y * t - (x * x + y * y) * (1.0 + t * t)) / (2.0 * one_minus)
    return math.exp(exponent) / math.sqrt(math.pi * one_minus)


def mehler_series(x: float, y: float, t: float, N: int = 150) -> float:
    """
    sum_{n <= N} t^n Psi_n(x) Psi_n(y) with the oscillator wave functions.

    Both wave-function sequences come from one pass of the normalised
    recurrence and the terms are added with math.fsum, which rounds once.
    """
    if not abs(t) < 1.0:
        raise ConstraintViolated("|t| < 1", f"t={t}")
    if N < 0:
        raise ConstraintViolated("N >= 0", f"N={N}")
    scale = math.pi ** -0.25
    previous_x, current_x = 0.0, scale * math.exp(-x * x / 2)
    previous_y, current_y = 0.0, scale * math.exp(-y * y / 2)
    power = 1.0
    terms = [current_x * current_y]
    for k in range(N):
        up, down = math.sqrt(2.0 / (k + 1)), math.sqrt(k / (k + 1))
        previous_x, current_x = current_x, up * x * current_x - down * previous_x
        previous_y, current_y = current_y, up * y * current_y - down * previous_y
        power *= t
        terms.append(power * current_x * current_y)
    return math.fsum(terms)
