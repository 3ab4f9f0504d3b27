"""
Askey-Wilson polynomials in the 4phi3 normalisation, their weight and
norms, the q-integral representation, and a recurrence-generated sequence
for long bilinear sums.
"""

import cmath
import logging
import math
from itertools import islice
from typing import Iterator, List, Optional, Sequence

from ..qcore.errors import ConstraintViolated, EndpointSingularity, PoleInDenominator
from ..qcore.pochhammer import h_angle, qpoch_n_ratio, qpoch_ratio
from ..qcore.types import TruncationPolicy
from ..qseries.hypergeometric import PhiSpec, eval_phi
from ..qseries.qintegral import q_integral
from .params import ParamSet

logger = logging.getLogger(__name__)


def angle_of(x: float) -> float:
    """theta = arccos x for |x| <= 1."""
    x = float(x)
    if not -1.0 <= x <= 1.0:
        raise ConstraintViolated("|x| <= 1", f"x={x}")
    return math.acos(x)


def _interior_angle(x: float) -> float:
    theta = angle_of(x)
    if abs(x) == 1.0:
        raise EndpointSingularity("|x| < 1", f"x={x}")
    return theta


def aw_spec(n: int, theta: float, values: Sequence[float], q: float) -> PhiSpec:
    """The terminating 4phi3 defining p_n(cos theta), parameters zero-padded to four."""
    if n < 0:
        raise ConstraintViolated("n >= 0", f"n={n}")
    a, b, c, d = tuple(values) + (0.0,) * (4 - len(values))
    u = cmath.exp(1j * theta)
    return PhiSpec(
        numerator=(q ** (-n), a * b * c * d * q ** (n - 1), a * u, a / u),
        denominator=(a * b, a * c, a * d),
        z=q,
        q=q,
    )


def aw_poly_angle(n: int,
                  theta: float,
                  values: Sequence[float],
                  q: float,
                  policy: Optional[TruncationPolicy] = None) -> complex:
    """p_n(cos theta) from the terminating 4phi3."""
    if n == 0:
        return complex(1.0)
    return eval_phi(aw_spec(n, theta, values, q), policy).value


def aw_poly(n: int, x: float, lam: ParamSet, policy: Optional[TruncationPolicy] = None) -> complex:
    """
    Askey-Wilson polynomial p_n(x; a, b, c, d) normalised by p_n = 4phi3.

    Args:
        n: Degree
        x: Abscissa in [-1, 1]
        lam: Parameter set; shorter sets are zero-padded
        policy: Truncation policy (the series terminates, so only limits apply)

    Returns:
        Complex value whose imaginary part is rounding noise for real parameters
    """
    return aw_poly_angle(n, angle_of(x), lam.values, lam.q.q, policy)


def weight_density(theta: float,
                   values: Sequence[float],
                   q: float,
                   policy: Optional[TruncationPolicy] = None) -> float:
    """rho(cos theta) sin theta: the weight with the Jacobian of x = cos theta absorbed."""
    policy = policy or TruncationPolicy()
    rq = math.sqrt(q)
    top = h_angle(theta, [1.0, -1.0, rq, -rq], q, policy)
    bottom = h_angle(theta, [p for p in values if p != 0], q, policy)
    return (top / bottom).real


def aw_weight(x: float, lam: ParamSet, policy: Optional[TruncationPolicy] = None) -> float:
    """rho(x) = h(x; 1, -1, q^{1/2}, -q^{1/2}) / h(x; a, b, c, d) (1 - x^2)^{-1/2}."""
    theta = _interior_angle(x)
    return weight_density(theta, lam.values, lam.q.q, policy) / math.sqrt(1.0 - x * x)


def norm_ratio(n: int, values: Sequence[float], q: float) -> complex:
    """h_n / h_0 for zero-padded parameters."""
    if n == 0:
        return complex(1.0)
    a, b, c, d = tuple(values) + (0.0,) * (4 - len(values))
    if a == 0:
        raise PoleInDenominator("a ≠ 0 for n >= 1", "h_n carries a^{-2n}")
    abcd = a * b * c * d
    # (abcd/q;q)_n / (1 - abcd/q) = (abcd;q)_{n-1}
    top = (1.0 - abcd * q ** (2 * n - 1)) * qpoch_n_ratio([abcd], [], q, n - 1)
    return top * qpoch_n_ratio([a * b, a * c, a * d], [q, c * d, b * d, b * c], q, n) * a ** (-2 * n)


def h0(values: Sequence[float], q: float, policy: Optional[TruncationPolicy] = None) -> float:
    """h_0 = (q, ab, ac, ad, bc, bd, cd; q)_inf / (2 pi (abcd; q)_inf)."""
    policy = policy or TruncationPolicy()
    a, b, c, d = tuple(values) + (0.0,) * (4 - len(values))
    value = qpoch_ratio([q, a * b, a * c, a * d, b * c, b * d, c * d], [a * b * c * d], q, policy)
    return (value / (2.0 * math.pi)).real


def aw_norm(n: int, lam: ParamSet, policy: Optional[TruncationPolicy] = None) -> float:
    """h_n, the reciprocal squared norm: int p_n p_m rho dx = delta_{mn} / h_n."""
    if n < 0:
        raise ConstraintViolated("n >= 0", f"n={n}")
    q = lam.q.q
    a, b, c, d = lam.padded()
    if lattice_hit(a * b * c * d * q ** (2 * n - 1)):
        raise PoleInDenominator("abcd q^{2n-1} ≠ 1", f"n={n}")
    return h0(lam.values, q, policy) * norm_ratio(n, lam.values, q).real


def lattice_hit(value: float) -> bool:
    return abs(1.0 - value) <= 1e-14


def q_integral_normaliser(theta: float, lam: ParamSet, policy: TruncationPolicy) -> complex:
    """A(theta) = -i q(1-q)/(2d) (q, ab, ac, bc; q)_inf h(x; d) rho(x)."""
    q = lam.q.q
    a, b, c, d = lam.padded()
    x = math.cos(theta)
    rho = weight_density(theta, lam.values, q, policy) / math.sin(theta)
    products = qpoch_ratio([q, a * b, a * c, b * c], [], q, policy)
    return -1j * q * (1.0 - q) / (2.0 * d) * products * h_angle(theta, [d], q, policy) * rho


def aw_poly_qint(n: int, x: float, lam: ParamSet, policy: Optional[TruncationPolicy] = None) -> complex:
    """p_n evaluated through its q-integral representation; requires d ≠ 0."""
    policy = policy or TruncationPolicy()
    if len(lam.values) != 4 or lam.values[3] == 0:
        raise ConstraintViolated("d ≠ 0", "the q-integral representation divides by d")
    theta = _interior_angle(x)
    q = lam.q.q
    a, b, c, d = lam.values
    eps2 = a * b * c * d
    u_theta = cmath.exp(1j * theta)

    def integrand(u: complex) -> complex:
        # (eps^2 u/q)_inf / (eps^2 u/q)_n = (eps^2 u q^{n-1})_inf
        products = qpoch_ratio(
            [d * u * u_theta, d * u / u_theta, eps2 * u * q ** (n - 1)],
            [d * a * u / q, d * b * u / q, d * c * u / q],
            q,
            policy,
        )
        return products * qpoch_n_ratio([q / u], [], q, n) * (a * d * u / q) ** n

    integral = q_integral(integrand, q * u_theta / d, q / (u_theta * d), q, policy)
    prefactor = qpoch_n_ratio([b * c], [a * d], q, n)
    return prefactor * integral.value / q_integral_normaliser(theta, lam, policy)


def iter_aw_poly(theta: float, values: Sequence[float], q: float) -> Iterator[float]:
    """
    p_0, p_1, ... at x = cos theta by the three-term recurrence of the
    4phi3-normalised polynomials. Needs a ≠ 0.
    """
    a, b, c, d = tuple(values) + (0.0,) * (4 - len(values))
    if a == 0:
        raise ConstraintViolated("a ≠ 0", "the recurrence divides by a")
    x = math.cos(theta)
    abcd = a * b * c * d
    previous, current = 0.0, 1.0
    n = 0
    while True:
        yield current
        qn = q ** n
        big_a = ((1 - a * b * qn) * (1 - a * c * qn) * (1 - a * d * qn) * (1 - abcd * qn / q)
                 / (a * (1 - abcd * qn * qn / q) * (1 - abcd * qn * qn)))
        big_c = (a * (1 - qn) * (1 - b * c * qn / q) * (1 - b * d * qn / q) * (1 - c * d * qn / q)
                 / ((1 - abcd * qn * qn / (q * q)) * (1 - abcd * qn * qn / q)))
        previous, current = current, ((2 * x - a - 1 / a + big_a + big_c) * current - big_c * previous) / big_a
        n += 1


def aw_poly_sequence(n_max: int, theta: float, values: Sequence[float], q: float) -> List[float]:
    """p_0 .. p_{n_max} from the recurrence."""
    return list(islice(iter_aw_poly(theta, values, q), n_max + 1))
