"""
Basic hypergeometric series engine.

r phi s [a_1..a_r; b_1..b_s; q, z] = sum_k (a;q)_k / (q, b;q)_k
    * [(-1)^k q^{k(k-1)/2}]^{1+s-r} z^k

Terms are generated by multiplicative update. A numerator parameter equal to
q^{-n} (within TERMINATION_TOL) ends the sum at index n.
"""

import cmath
import logging
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, field_validator

from ..qcore.errors import ConstraintViolated, Divergent, MaxTermsExceeded, NonFiniteValue, PoleInDenominator
from ..qcore.pochhammer import lattice_index
from ..qcore.types import QBase, SeriesValue, TruncationPolicy

logger = logging.getLogger(__name__)

TERMINATION_TOL = 1e-12
POLE_TOL = 1e-10


class PhiSpec(BaseModel):
    """Parameters of one basic hypergeometric series."""

    model_config = ConfigDict(frozen=True)

    numerator: Tuple[complex, ...]
    denominator: Tuple[complex, ...]
    z: complex
    q: QBase

    @field_validator("q", mode="before")
    @classmethod
    def _coerce_q(cls, value: Any) -> Any:
        return QBase(q=value) if isinstance(value, (int, float)) else value

    @field_validator("numerator", "denominator")
    @classmethod
    def _finite_parameters(cls, values: Tuple[complex, ...]) -> Tuple[complex, ...]:
        for value in values:
            if not cmath.isfinite(value):
                raise ValueError("series parameters finite")
        return values


def termination_index(numerator: Sequence[complex], q: float, limit: int) -> Optional[int]:
    """Smallest n with some numerator parameter equal to q^{-n}, if any."""
    found = None
    for a in numerator:
        n = lattice_index(a, q, TERMINATION_TOL, limit)
        if n is not None and (found is None or n < found):
            found = n
    return found


def _check_poles(denominator: Sequence[complex], q: float, stop: Optional[int], limit: int) -> None:
    for b in denominator:
        m = lattice_index(b, q, POLE_TOL, limit)
        # (b;q)_k contains 1 - b q^m once k > m
        if m is not None and (stop is None or m < stop):
            raise PoleInDenominator(
                "denominator parameter not in {q^-m}",
                f"b={b!r} is q^-{m} and the series reaches index {m + 1}",
            )


def _terms(numerator: Sequence[complex],
           denominator: Sequence[complex],
           z: complex,
           q: float) -> Iterator[complex]:
    """Successive terms of the series, without any stopping rule."""
    excess = 1 + len(denominator) - len(numerator)
    term = complex(1.0)
    qk = 1.0
    while True:
        yield term
        ratio = z
        for a in numerator:
            ratio *= 1.0 - a * qk
        bottom = 1.0 - qk * q
        for b in denominator:
            bottom *= 1.0 - b * qk
        if excess:
            ratio *= (-qk) ** excess
        term = term * ratio / bottom
        qk *= q


def _series(numerator: Sequence[complex],
            denominator: Sequence[complex],
            z: complex,
            q: float,
            policy: TruncationPolicy) -> SeriesValue:
    excess = 1 + len(denominator) - len(numerator)
    stop = termination_index(numerator, q, policy.max_terms)
    _check_poles(denominator, q, stop, policy.max_terms)

    if z == 0:
        return SeriesValue(value=1.0, terms_used=1, terminated=stop is not None)

    if stop is not None:
        if stop + 1 > policy.max_terms:
            raise MaxTermsExceeded("terms <= max_terms", f"terminating at index {stop}")
        total = complex(0.0)
        for k, term in enumerate(_terms(numerator, denominator, z, q)):
            total += term
            if k == stop:
                break
        if not cmath.isfinite(total):
            raise NonFiniteValue("series value finite", f"terminating sum to index {stop}")
        return SeriesValue(value=total, terms_used=stop + 1, terminated=True)

    if excess < 0:
        raise Divergent("r <= s + 1 for a nonterminating series",
                        f"{len(numerator)} numerator, {len(denominator)} denominator parameters")
    if excess == 0 and abs(z) >= 1.0:
        raise Divergent("|z| < 1 for a nonterminating series", f"|z|={abs(z)}")

    asymptotic_ratio = abs(z) if excess == 0 else 0.0
    total = complex(0.0)
    previous_small = False
    previous_size = None
    for k, term in enumerate(_terms(numerator, denominator, z, q)):
        if k >= policy.max_terms:
            raise MaxTermsExceeded("terms <= max_terms", f"|partial sum|={abs(total):.3g}")
        if not cmath.isfinite(term):
            raise NonFiniteValue("series terms finite", f"term {k}")
        total += term
        size = abs(term)
        if term == 0:
            # a numerator factor vanished exactly: every later term is zero
            return SeriesValue(value=total, terms_used=k + 1, terminated=True)
        small = size <= policy.rel_tol * abs(total) + policy.abs_tol
        if small and previous_small:
            observed = size / previous_size if previous_size else 0.0
            rho = max(observed, asymptotic_ratio)
            if rho < 1.0:
                tail = size * rho / (1.0 - rho)
                if tail <= policy.rel_tol * abs(total) + policy.abs_tol:
                    logger.debug("phi series stopped after %d terms, tail %.3g", k + 1, tail)
                    return SeriesValue(value=total, terms_used=k + 1, tail_estimate=tail)
        previous_small = small
        previous_size = size
    raise AssertionError("unreachable")


def eval_phi(spec: PhiSpec, policy: Optional[TruncationPolicy] = None) -> SeriesValue:
    """
    Evaluate a basic hypergeometric series.

    Args:
        spec: Numerator and denominator parameters, argument and base
        policy: Truncation policy for nonterminating series

    Returns:
        SeriesValue with terms used, tail estimate and termination flag
    """
    policy = policy or TruncationPolicy()
    return _series(spec.numerator, spec.denominator, spec.z, spec.q.q, policy)


def phi(numerator: Sequence[complex],
        denominator: Sequence[complex],
        z: complex,
        q: Union[QBase, float],
        policy: Optional[TruncationPolicy] = None) -> complex:
    """Shorthand returning only the value of eval_phi."""
    spec = PhiSpec(numerator=tuple(numerator), denominator=tuple(denominator), z=z, q=QBase.of(q))
    return eval_phi(spec, policy).value


def phi_terms(spec: PhiSpec) -> List[complex]:
    """All terms of a terminating series, in summation order."""
    stop = termination_index(spec.numerator, spec.q.q, 10 ** 6)
    if stop is None:
        raise ConstraintViolated("series terminates", "no numerator parameter equals q^-n")
    terms = []
    for k, term in enumerate(_terms(spec.numerator, spec.denominator, spec.z, spec.q.q)):
        terms.append(term)
        if k == stop:
            return terms


def w_spec(a: complex,
           bs: Sequence[complex],
           z: complex,
           q: Union[QBase, float]) -> PhiSpec:
    """The r+1 phi r series behind the very-well-poised W(a; b_1..b_{r-2}; q, z)."""
    qb = QBase.of(q)
    a = complex(a)
    root = cmath.sqrt(a)
    numerator = [a, qb.q * root, -qb.q * root]
    denominator = [root, -root]
    for b in bs:
        b = complex(b)
        if b == 0:
            raise ConstraintViolated("W parameters b_j nonzero")
        numerator.append(b)
        denominator.append(a * qb.q / b)
    return PhiSpec(numerator=tuple(numerator), denominator=tuple(denominator), z=z, q=qb)


def eval_W(a: complex,
           bs: Sequence[complex],
           z: complex,
           q: Union[QBase, float],
           policy: Optional[TruncationPolicy] = None) -> SeriesValue:
    """Very-well-poised series, delegated to eval_phi after parameter construction."""
    return eval_phi(w_spec(a, bs, z, q), policy)


def _geometric_tail(size: float, previous_size: float) -> float:
    """Remaining mass of a series whose terms shrink by size / previous_size."""
    if previous_size <= 0.0 or size == 0.0:
        return size
    rho = size / previous_size
    if rho >= 1.0:
        return size
    return size * rho / (1.0 - rho)


def sum_series(term: Callable[[int], complex],
               policy: TruncationPolicy,
               stop: Optional[int] = None,
               min_terms: int = 1) -> SeriesValue:
    """
    Sum term(0), term(1), ... of an outer series whose terms are themselves
    computed values.

    With ``stop`` the sum runs to that index inclusive. Otherwise it ends on
    two consecutive terms below rel_tol * |partial sum| once ``min_terms``
    terms have been added.
    """
    total = complex(0.0)
    if stop is not None:
        for k in range(stop + 1):
            total += term(k)
        return SeriesValue(value=total, terms_used=stop + 1, terminated=True)

    previous_small = False
    previous_size = 0.0
    for k in range(policy.max_terms):
        value = term(k)
        if not cmath.isfinite(value):
            raise NonFiniteValue("series terms finite", f"outer term {k}")
        total += value
        size = abs(value)
        small = size <= policy.rel_tol * abs(total) + policy.abs_tol
        if small and previous_small and k + 1 >= min_terms:
            return SeriesValue(value=total, terms_used=k + 1, tail_estimate=_geometric_tail(size, previous_size))
        previous_small = small
        previous_size = size
    raise MaxTermsExceeded("terms <= max_terms", "outer sum did not settle")


def idem(expression: Callable[..., complex],
         arguments: Dict[str, Any],
         swap: Tuple[str, str]) -> complex:
    """
    expression(**arguments) plus the same expression with the two named
    arguments interchanged.
    """
    first, second = swap
    mirrored = dict(arguments)
    mirrored[first], mirrored[second] = arguments[second], arguments[first]
    return expression(**arguments) + expression(**mirrored)
