"""
Direct bilinear sums sum_n c_n t^n p_n(x) p_n(y), the oracle every closed
form is tested against.

Polynomial values come from the three-term recurrences, so sums of a few
hundred terms keep full precision.
"""

import cmath
import logging
from typing import Iterator, Optional, Sequence

from ..polys.askey_wilson import angle_of, iter_aw_poly
from ..polys.degenerate import iter_big_qhermite_scaled
from ..polys.params import ParamSet
from ..qcore.errors import ConstraintViolated, Divergent, MaxTermsExceeded, NonFiniteValue
from ..qcore.types import QBase, SeriesValue, TruncationPolicy, as_complex
from .params import KernelParams

logger = logging.getLogger(__name__)


def iter_norm_ratio(values: Sequence[float], q: float) -> Iterator[float]:
    """h_n / h_0 for n = 0, 1, ... by the ratio of consecutive norms."""
    a, b, c, d = tuple(values) + (0.0,) * (4 - len(values))
    if a == 0:
        raise ConstraintViolated("a ≠ 0", "h_n carries a^{-2n}")
    abcd = a * b * c * d
    yield 1.0
    # g_n = (abcd)_{n-1} (ab, ac, ad)_n / (q, cd, bd, bc)_n a^{-2n}
    g = (1 - a * b) * (1 - a * c) * (1 - a * d) / ((1 - q) * (1 - c * d) * (1 - b * d) * (1 - b * c) * a * a)
    n = 1
    while True:
        yield (1 - abcd * q ** (2 * n - 1)) * g
        qn = q ** n
        g *= ((1 - abcd * qn / q) * (1 - a * b * qn) * (1 - a * c * qn) * (1 - a * d * qn)
              / ((1 - q * qn) * (1 - c * d * qn) * (1 - b * d * qn) * (1 - b * c * qn) * a * a))
        n += 1


def bilinear_sum(terms: Iterator[complex],
                 ratio: float,
                 N: Optional[int] = None,
                 policy: Optional[TruncationPolicy] = None) -> SeriesValue:
    """
    Sum the terms of a bilinear generating function.

    Args:
        terms: Term iterator, n = 0, 1, ...
        ratio: Asymptotic ratio of consecutive term moduli, below 1
        N: Fixed truncation order, or None to stop on two consecutive
           terms below rel_tol of the partial sum
        policy: Truncation policy

    Returns:
        SeriesValue with the number of terms and the tail estimate
    """
    policy = policy or TruncationPolicy()
    if N is not None and N < 1:
        raise ConstraintViolated("N >= 1", f"N={N}")
    if not ratio < 1.0:
        raise Divergent("geometric term ratio < 1", f"ratio={ratio:.6g}")
    total = complex(0.0)
    previous_small = False
    limit = N + 1 if N is not None else policy.max_terms
    for n, term in enumerate(terms):
        if n >= limit:
            if N is not None:
                tail = abs(last) * ratio / (1.0 - ratio)
                return SeriesValue(value=total, terms_used=n, tail_estimate=tail)
            raise MaxTermsExceeded("terms <= max_terms", "bilinear sum did not settle")
        if not cmath.isfinite(term):
            raise NonFiniteValue("series terms finite", f"term {n}")
        total += term
        last = term
        if N is None:
            small = abs(term) <= policy.rel_tol * abs(total) + policy.abs_tol
            if small and previous_small:
                return SeriesValue(value=total, terms_used=n + 1, tail_estimate=abs(term) * ratio / (1.0 - ratio))
            previous_small = small


def _aw_terms(theta: float, phi: float, lam: ParamSet, mu: ParamSet, t: complex) -> Iterator[complex]:
    q = lam.q.q
    tn = complex(1.0)
    for weight, px, py in zip(iter_norm_ratio(lam.values, q),
                              iter_aw_poly(theta, lam.values, q),
                              iter_aw_poly(phi, mu.values, q)):
        yield weight * tn * px * py
        tn *= t


def bilinear_direct(x: float,
                    y: float,
                    lam: ParamSet,
                    mu: ParamSet,
                    t: complex,
                    N: Optional[int] = None,
                    policy: Optional[TruncationPolicy] = None) -> SeriesValue:
    """sum_n (h_n / h_0) t^n p_n(x; lam) p_n(y; mu) for zero-padded parameter sets of any length."""
    t = as_complex(t, "t")
    if lam.q.q != mu.q.q:
        raise ConstraintViolated("lambda and mu share q")
    if not lam.values or lam.values[0] == 0:
        raise ConstraintViolated("a ≠ 0", "the coefficients carry a^{-2n}")
    # p_n(x; lam) grows like a^n and h_n / h_0 like a^{-2n}
    alpha = mu.values[0] if mu.values else 0.0
    ratio = abs(t * alpha / lam.values[0])
    return bilinear_sum(_aw_terms(angle_of(x), angle_of(y), lam, mu, t), ratio, N, policy)


def kernel_direct(x: float,
                  y: float,
                  kp: KernelParams,
                  N: Optional[int] = None,
                  policy: Optional[TruncationPolicy] = None) -> SeriesValue:
    """
    The Poisson-type kernel as its defining bilinear sum
    (h_0)^{-1} sum_n h_n t^n p_n(x; lam) p_n(y; mu).
    """
    result = bilinear_direct(x, y, kp.lam, kp.mu, kp.t, N, policy)
    logger.debug("Direct kernel at x=%.6g y=%.6g used %d terms", x, y, result.terms_used)
    return result


def _require_length(params: ParamSet, length: int, family: str) -> None:
    if len(params.values) != length:
        raise ConstraintViolated(f"{family} takes {length} parameters", f"got {len(params.values)}")


def dual_qhahn_direct(x: float, y: float, lam: ParamSet, mu: ParamSet, t: complex,
                      N: Optional[int] = None, policy: Optional[TruncationPolicy] = None) -> SeriesValue:
    """sum_n (ab, ac)_n / (q, bc)_n (t/a^2)^n p_n(x; a, b, c) p_n(y; alpha, beta, gamma)."""
    _require_length(lam, 3, "continuous dual q-Hahn")
    return bilinear_direct(x, y, lam, mu, t, N, policy)


def asc_direct(x: float, y: float, lam: ParamSet, mu: ParamSet, t: complex,
               N: Optional[int] = None, policy: Optional[TruncationPolicy] = None) -> SeriesValue:
    """sum_n (ab)_n / (q)_n (t/a^2)^n p_n(x; a, b) p_n(y; alpha, beta)."""
    _require_length(lam, 2, "Al-Salam-Chihara")
    return bilinear_direct(x, y, lam, mu, t, N, policy)


def asc_norm_direct(x: float, y: float, lam: ParamSet, mu: ParamSet, t: complex,
                    N: Optional[int] = None, policy: Optional[TruncationPolicy] = None) -> SeriesValue:
    """
    sum_n (q)_n / (ab)_n t^n of normalised Al-Salam-Chihara products. With
    alpha beta = ab this is the plain sum at t a / alpha.
    """
    _require_length(lam, 2, "Al-Salam-Chihara")
    a, alpha = lam.values[0], mu.values[0]
    if alpha == 0:
        raise ConstraintViolated("alpha ≠ 0", "the normalisation carries alpha^{-n}")
    return bilinear_direct(x, y, lam, mu, as_complex(t, "t") * a / alpha, N, policy)


def _scaled_hermite_terms(theta: float, phi: float, a: float, alpha: float,
                          z: complex, q: float) -> Iterator[complex]:
    zn = complex(1.0)
    qpoch = 1.0
    n = 0
    for sx, sy in zip(iter_big_qhermite_scaled(theta, a, q), iter_big_qhermite_scaled(phi, alpha, q)):
        yield zn / qpoch * sx * sy
        n += 1
        zn *= z
        qpoch *= 1 - q ** n


def bigqh_direct(x: float, y: float, a: float, alpha: float, t: complex, q: float,
                 N: Optional[int] = None, policy: Optional[TruncationPolicy] = None) -> SeriesValue:
    """sum_n (t/a^2)^n / (q)_n p_n(x; a) p_n(y; alpha), summed as (t alpha / a)^n on a^{-n} p_n."""
    if a == 0:
        raise ConstraintViolated("a ≠ 0", "the coefficients carry a^{-2n}")
    t = as_complex(t, "t")
    z = t * alpha / a
    terms = _scaled_hermite_terms(angle_of(x), angle_of(y), a, alpha, z, QBase.of(q).q)
    return bilinear_sum(terms, abs(z), N, policy)


def bigqh_norm_direct(x: float, y: float, a: float, alpha: float, t: complex, q: float,
                      N: Optional[int] = None, policy: Optional[TruncationPolicy] = None) -> SeriesValue:
    """sum_n t^n / ((q)_n (a alpha)^n) p_n(x; a) p_n(y; alpha); a = alpha = 0 gives the q-Hermite sum."""
    t = as_complex(t, "t")
    terms = _scaled_hermite_terms(angle_of(x), angle_of(y), a, alpha, t, QBase.of(q).q)
    return bilinear_sum(terms, abs(t), N, policy)
