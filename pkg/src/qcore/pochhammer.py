"""
q-shifted factorials, their multi-parameter products and the h(x;a) product.
"""

import cmath
import logging
import math
from typing import Dict, Iterable, Optional, Sequence, Union

from .errors import ConstraintViolated, MaxTermsExceeded, PoleGuardTripped, PoleInDenominator
from .types import QBase, SeriesValue, TruncationPolicy, as_complex

logger = logging.getLogger(__name__)

INFINITY = math.inf

# relative distance below which a factor 1 - a q^j counts as an exact zero
STRUCTURAL_ZERO_TOL = 1e-14
POLE_GUARD_TOL = 1e-10
POLE_GUARD_MAX_M = 60


def lattice_index(z: complex, q: float, tol: float, m_max: int = POLE_GUARD_MAX_M) -> Optional[int]:
    """
    Return m if z lies within relative distance ``tol`` of q^{-m}
    (0 <= m <= m_max), otherwise None.
    """
    z = complex(z)
    if z.real <= 0.0 or abs(z.imag) > tol * abs(z):
        return None
    m = round(math.log(z.real) / -math.log(q))
    if m < 0 or m > m_max:
        return None
    target = q ** (-m)
    if abs(z - target) <= tol * target:
        return m
    return None


def pole_guard(factors: Dict[str, complex], q: float,
               tol: float = POLE_GUARD_TOL, m_max: int = POLE_GUARD_MAX_M) -> None:
    """
    Raise PoleGuardTripped if any named denominator Pochhammer argument
    sits on the lattice {q^{-m}: 0 <= m <= m_max}.
    """
    for name, value in factors.items():
        m = lattice_index(value, q, tol, m_max)
        if m is not None:
            raise PoleGuardTripped(name, complex(value), m)


def truncation_length(scale: float, q: float, policy: TruncationPolicy) -> int:
    """
    First N with scale * q^N < rel_tol * (1 - q), the point past which the
    remaining factors of an infinite product change it by less than rel_tol.
    """
    threshold = policy.rel_tol * (1.0 - q)
    if scale < threshold:
        return 0
    n = int(math.ceil(math.log(threshold / scale) / math.log(q)))
    # guard the boundary against rounding in the logarithms
    while scale * q ** n >= threshold:
        n += 1
    if n > policy.max_terms:
        raise MaxTermsExceeded(
            "factors <= max_terms",
            f"need {n} factors, policy allows {policy.max_terms}",
        )
    if n > 0.9 * policy.max_terms:
        logger.warning("Infinite product uses %d of %d allowed factors", n, policy.max_terms)
    return n


def qpoch_n(a: complex, q: Union[QBase, float], n: int) -> complex:
    """(a;q)_n = prod_{j<n} (1 - a q^j); exactly 1 for n = 0."""
    if n < 0:
        raise ConstraintViolated("n >= 0", f"n={n}")
    qv = QBase.of(q).q
    a = as_complex(a, "a")
    result = complex(1.0)
    qj = 1.0
    for _ in range(n):
        result *= 1.0 - a * qj
        qj *= qv
    return result


def _qpoch_inf(a: complex, q: float, policy: TruncationPolicy) -> SeriesValue:
    if a == 0:
        return SeriesValue(value=1.0)
    n_factors = truncation_length(abs(a), q, policy)
    result = complex(1.0)
    qj = 1.0
    for _ in range(n_factors):
        factor = 1.0 - a * qj
        if abs(factor) <= STRUCTURAL_ZERO_TOL * max(1.0, abs(a * qj)):
            return SeriesValue(value=0.0, terms_used=n_factors, structural_zero=True)
        result *= factor
        qj *= q
    tail = abs(a) * q ** n_factors / (1.0 - q)
    logger.debug("(a;q)_inf with |a|=%.3g truncated at %d factors", abs(a), n_factors)
    return SeriesValue(value=result, terms_used=n_factors, tail_estimate=tail)


def qpoch_inf(a: complex,
              q: Union[QBase, float],
              policy: Optional[TruncationPolicy] = None) -> SeriesValue:
    """
    (a;q)_inf truncated under ``policy``.

    A point of the lattice a = q^{-m} gives exactly 0 with
    ``structural_zero`` set.
    """
    policy = policy or TruncationPolicy()
    return _qpoch_inf(as_complex(a, "a"), QBase.of(q).q, policy)


def qpoch_multi(params: Sequence[complex],
                q: Union[QBase, float],
                n: Union[int, float] = INFINITY,
                policy: Optional[TruncationPolicy] = None) -> complex:
    """(a_1, ..., a_m; q)_n as a product of single-parameter factorials."""
    if len(params) == 0:
        raise ConstraintViolated("parameter list nonempty")
    qb = QBase.of(q)
    if n == INFINITY:
        policy = policy or TruncationPolicy()
        result = complex(1.0)
        for a in params:
            value = _qpoch_inf(as_complex(a, "a"), qb.q, policy)
            if value.structural_zero:
                return complex(0.0)
            result *= value.value
        return result
    result = complex(1.0)
    for a in params:
        result *= qpoch_n(a, qb, int(n))
    return result


def qpoch_ratio(numerator: Iterable[complex],
                denominator: Iterable[complex],
                q: float,
                policy: TruncationPolicy) -> complex:
    """prod (numerator;q)_inf / prod (denominator;q)_inf on raw floats."""
    top = complex(1.0)
    for a in numerator:
        value = _qpoch_inf(complex(a), q, policy)
        if value.structural_zero:
            return complex(0.0)
        top *= value.value
    bottom = complex(1.0)
    for a in denominator:
        value = _qpoch_inf(complex(a), q, policy)
        if value.structural_zero:
            raise PoleInDenominator("denominator (a;q)_inf nonzero", f"a={complex(a)!r}")
        bottom *= value.value
    return top / bottom


def qpoch_n_ratio(numerator: Iterable[complex],
                  denominator: Iterable[complex],
                  q: float,
                  n: int) -> complex:
    """prod (numerator;q)_n / prod (denominator;q)_n on raw floats."""
    value = complex(1.0)
    qj = 1.0
    top = list(numerator)
    bottom = list(denominator)
    for _ in range(n):
        for a in top:
            value *= 1.0 - a * qj
        for a in bottom:
            factor = 1.0 - a * qj
            if factor == 0:
                raise PoleInDenominator("denominator (a;q)_n nonzero", f"a={a!r}")
            value /= factor
        qj *= q
    return value


def _check_abscissa(x: float) -> float:
    x = float(x)
    if not -1.0 <= x <= 1.0:
        raise ConstraintViolated("|x| <= 1", f"x={x}")
    return x


def _h_factor(x: float, a: complex, q: float, policy: TruncationPolicy) -> SeriesValue:
    if a == 0:
        return SeriesValue(value=1.0)
    n_factors = truncation_length(2.0 * abs(a) + abs(a) ** 2, q, policy)
    result = complex(1.0)
    qn = 1.0
    for _ in range(n_factors):
        aq = a * qn
        factor = 1.0 - 2.0 * aq * x + aq * aq
        if abs(factor) <= STRUCTURAL_ZERO_TOL * (1.0 + abs(aq)) ** 2:
            return SeriesValue(value=0.0, terms_used=n_factors, structural_zero=True)
        result *= factor
        qn *= q
    tail = (2.0 * abs(a) + abs(a) ** 2) * q ** n_factors / (1.0 - q)
    return SeriesValue(value=result, terms_used=n_factors, tail_estimate=tail)


def h_factor(x: float,
             a: complex,
             q: Union[QBase, float],
             policy: Optional[TruncationPolicy] = None) -> SeriesValue:
    """h(x;a) = prod_{n>=0} (1 - 2 a x q^n + a^2 q^{2n})."""
    policy = policy or TruncationPolicy()
    return _h_factor(_check_abscissa(x), as_complex(a, "a"), QBase.of(q).q, policy)


def h_multi(x: float,
            params: Sequence[complex],
            q: Union[QBase, float],
            policy: Optional[TruncationPolicy] = None) -> complex:
    """h(x; a_1, ..., a_r) = prod_j h(x; a_j)."""
    policy = policy or TruncationPolicy()
    x = _check_abscissa(x)
    qv = QBase.of(q).q
    result = complex(1.0)
    for a in params:
        value = _h_factor(x, as_complex(a, "a"), qv, policy)
        if value.structural_zero:
            return complex(0.0)
        result *= value.value
    return result


def h_angle(theta: float, params: Sequence[complex], q: float, policy: TruncationPolicy) -> complex:
    """h(cos theta; a_1, ..., a_r) as the product of (a e^{i theta}, a e^{-i theta}; q)_inf."""
    u = cmath.exp(1j * theta)
    args = []
    for a in params:
        args.extend((a * u, a / u))
    if not args:
        return complex(1.0)
    return qpoch_ratio(args, (), q, policy)
