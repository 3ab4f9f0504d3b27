"""
Jackson q-integral on the geometric lattices {a q^m} and {b q^m}.
"""

import cmath
import logging
from typing import Callable, Optional, Union

from ..qcore.errors import MaxTermsExceeded, NonFiniteIntegrand
from ..qcore.types import QBase, SeriesValue, TruncationPolicy, as_complex

logger = logging.getLogger(__name__)


def _lattice_sum(f: Callable[[complex], complex],
                 endpoint: complex,
                 q: float,
                 policy: TruncationPolicy):
    """endpoint (1-q) sum_m f(endpoint q^m) q^m, with terms used and tail."""
    if endpoint == 0:
        return complex(0.0), 0, 0.0
    total = complex(0.0)
    qm = 1.0
    previous_small = False
    for m in range(policy.max_terms):
        value = f(endpoint * qm)
        try:
            value = complex(value)
        except TypeError:
            raise NonFiniteIntegrand("integrand returns a number", f"at u={endpoint * qm!r}")
        if not cmath.isfinite(value):
            raise NonFiniteIntegrand("integrand finite on the lattice", f"f({endpoint * qm!r})={value!r}")
        term = value * qm
        total += term
        small = abs(term) <= policy.rel_tol * abs(total) + policy.abs_tol
        if small and previous_small:
            tail = abs(term) * q / (1.0 - q)
            return endpoint * (1.0 - q) * total, m + 1, abs(endpoint) * (1.0 - q) * tail
        previous_small = small
        qm *= q
    raise MaxTermsExceeded("lattice terms <= max_terms", f"endpoint {endpoint!r}")


def q_integral(f: Callable[[complex], complex],
               a: complex,
               b: complex,
               q: Union[QBase, float],
               policy: Optional[TruncationPolicy] = None) -> SeriesValue:
    """
    int_a^b f(u) d_q u = b(1-q) sum f(b q^m) q^m - a(1-q) sum f(a q^m) q^m.

    Args:
        f: Integrand, evaluated only on the two lattices
        a: Lower endpoint
        b: Upper endpoint
        q: Base of the lattice
        policy: Truncation policy applied to each lattice sum

    Returns:
        SeriesValue whose terms_used counts both lattice sums
    """
    policy = policy or TruncationPolicy()
    qv = QBase.of(q).q
    a = as_complex(a, "a")
    b = as_complex(b, "b")
    upper, upper_terms, upper_tail = _lattice_sum(f, b, qv, policy)
    lower, lower_terms, lower_tail = _lattice_sum(f, a, qv, policy)
    logger.debug("q-integral used %d + %d lattice points", upper_terms, lower_terms)
    return SeriesValue(
        value=upper - lower,
        terms_used=upper_terms + lower_terms,
        tail_estimate=upper_tail + lower_tail,
    )
