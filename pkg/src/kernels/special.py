"""
Kernels of the families below Askey-Wilson: continuous dual q-Hahn,
Al-Salam-Chihara (both normalisations), continuous big q-Hermite and its
q-Hermite limit, with their t = 1 product forms where they exist.

Each returns exactly 1 at t = 0.
"""

import cmath
import logging
from typing import Dict, Optional, Sequence

from ..polys.askey_wilson import angle_of
from ..polys.params import ParamSet, compatibility_violation, unity_violation
from ..qcore.errors import ConstraintViolated
from ..qcore.pochhammer import pole_guard, qpoch_n_ratio, qpoch_ratio
from ..qcore.types import QBase, TruncationPolicy, as_complex
from ..qseries.hypergeometric import eval_W, phi, sum_series

logger = logging.getLogger(__name__)


def _coupled(lam: ParamSet, mu: ParamSet, length: int, unity: bool = False) -> None:
    if len(lam.values) != length:
        raise ConstraintViolated(f"{length} parameters", f"got {len(lam.values)}")
    problem = unity_violation(lam, mu) if unity else compatibility_violation(lam, mu)
    if problem:
        raise ConstraintViolated(problem)


def _check_t(t: complex) -> complex:
    t = as_complex(t, "t")
    if not abs(t) < 1:
        raise ConstraintViolated("|t| < 1", f"t={t!r}")
    return t


def _guarded_ratio(numerator: Sequence[complex], denominator: Dict[str, complex],
                   q: float, policy: TruncationPolicy) -> complex:
    pole_guard(denominator, q)
    return qpoch_ratio(numerator, denominator.values(), q, policy)


def _units(x: float, y: float):
    return cmath.exp(1j * angle_of(x)), cmath.exp(1j * angle_of(y))


def dual_qhahn_kernel(x: float, y: float, lam: ParamSet, mu: ParamSet, t: complex,
                      policy: Optional[TruncationPolicy] = None) -> complex:
    """
    Continuous dual q-Hahn kernel
    sum_n (ab, ac)_n / (q, bc)_n (t/a^2)^n p_n(x; a, b, c) p_n(y; alpha, beta, gamma)
    as a triple series over k, l and an 8W7, for alpha gamma = ac.
    """
    policy = policy or TruncationPolicy()
    _coupled(lam, mu, 3)
    t = _check_t(t)
    if t == 0:
        return complex(1.0)
    q = lam.q.q
    a, b, c = lam.values
    alpha, beta, gamma = mu.values
    u, w = _units(x, y)
    s = c * t / gamma

    prefactor = _guarded_ratio(
        [s * s, alpha * s * u, alpha * s / u, beta * w, b * c * t / (gamma * w), gamma / w,
         c * s * w, alpha * t * w],
        {
            "αβ": alpha * beta,
            "ac": a * c,
            "bc": b * c,
            "αc²t²e^{iφ}/γ²": alpha * s * s * w,
            "cte^{i(θ+φ)}/γ": s * u * w,
            "cte^{i(θ-φ)}/γ": s * u / w,
            "cte^{i(φ-θ)}/γ": s * w / u,
            "cte^{-i(θ+φ)}/γ": s / (u * w),
        },
        q,
        policy,
    )

    def inner(k: int):
        sk = s * q ** k

        def term(ell: int) -> complex:
            coefficient = (beta * w) ** ell * qpoch_n_ratio(
                [alpha / w, b * c * t * q ** k / (beta * gamma), alpha * sk * sk * w, sk * u / w, sk / (u * w)],
                [q, b * c * t * q ** k / (gamma * w), sk * sk, alpha * sk * u, alpha * sk / u],
                q,
                ell,
            )
            bs = [sk * u * w, sk * w / u, alpha * w, alpha * t * q ** (k + ell) / gamma, c * sk * q ** ell / gamma]
            return coefficient * eval_W(alpha * sk * sk * q ** (ell - 1) * w, bs, gamma / w, q, policy).value

        return sum_series(term, policy).value

    def outer(k: int) -> complex:
        coefficient = (-b * c) ** k * q ** (k * (k - 1) // 2) \
            * qpoch_n_ratio([alpha * s * s * w], [s * s], q, 2 * k) \
            * qpoch_n_ratio([t, s * u * w, s * u / w, s * w / u, s / (u * w)],
                            [q, c * s * w, alpha * t * w, b * c * t / (gamma * w), alpha * s * u, alpha * s / u],
                            q, k)
        return coefficient * inner(k)

    total = sum_series(outer, policy)
    logger.debug("Dual q-Hahn kernel k-sum used %d terms", total.terms_used)
    return prefactor * total.value


def dual_qhahn_kernel_unity(x: float, y: float, lam: ParamSet, mu: ParamSet,
                            policy: Optional[TruncationPolicy] = None) -> complex:
    """t -> 1 limit of the dual q-Hahn kernel; needs beta gamma = bc and c ≠ gamma."""
    policy = policy or TruncationPolicy()
    _coupled(lam, mu, 3, unity=True)
    q = lam.q.q
    a, b, c = lam.values
    alpha, beta, gamma = mu.values
    u, w = _units(x, y)
    r = c / gamma
    return _guarded_ratio(
        [alpha * w, alpha / w, beta * w, beta / w, c * u, c / u, r * r],
        {
            "αβ": alpha * beta,
            "ac": a * c,
            "bc": b * c,
            "ce^{i(θ+φ)}/γ": r * u * w,
            "ce^{i(θ-φ)}/γ": r * u / w,
            "ce^{i(φ-θ)}/γ": r * w / u,
            "ce^{-i(θ+φ)}/γ": r / (u * w),
        },
        q,
        policy,
    )


def asc_kernel(x: float, y: float, lam: ParamSet, mu: ParamSet, t: complex,
               policy: Optional[TruncationPolicy] = None) -> complex:
    """Al-Salam-Chihara kernel sum_n (ab)_n / (q)_n (t/a^2)^n p_n p_n as one 8W7, alpha beta = ab."""
    policy = policy or TruncationPolicy()
    _coupled(lam, mu, 2)
    t = _check_t(t)
    if t == 0:
        return complex(1.0)
    q = lam.q.q
    a, b = lam.values
    alpha, beta = mu.values
    u, w = _units(x, y)
    s = alpha * t / a
    prefactor = _guarded_ratio(
        [s * s, b / u, alpha * s * u, b * t * u, alpha * t * w, alpha * t / w],
        {
            "ab": a * b,
            "α²t²e^{iθ}/a": alpha * s * t * u,
            "αte^{i(θ+φ)}/a": s * u * w,
            "αte^{i(θ-φ)}/a": s * u / w,
            "αte^{i(φ-θ)}/a": s * w / u,
            "αte^{-i(θ+φ)}/a": s / (u * w),
        },
        q,
        policy,
    )
    series = eval_W(alpha * s * t * u / q, [t, alpha * t / beta, a * u, s * u * w, s * u / w], b / u, q, policy)
    return prefactor * series.value


def asc_kernel_unity(x: float, y: float, lam: ParamSet, mu: ParamSet,
                     policy: Optional[TruncationPolicy] = None) -> complex:
    """t = 1 product form of the Al-Salam-Chihara kernel."""
    policy = policy or TruncationPolicy()
    _coupled(lam, mu, 2, unity=True)
    q = lam.q.q
    a, b = lam.values
    alpha, _ = mu.values
    u, w = _units(x, y)
    r = alpha / a
    return _guarded_ratio(
        [b * u, b / u, alpha * w, alpha / w, r * r],
        {
            "ab": a * b,
            "αe^{i(θ+φ)}/a": r * u * w,
            "αe^{i(θ-φ)}/a": r * u / w,
            "αe^{i(φ-θ)}/a": r * w / u,
            "αe^{-i(θ+φ)}/a": r / (u * w),
        },
        q,
        policy,
    )


def asc_kernel_norm(x: float, y: float, lam: ParamSet, mu: ParamSet, t: complex,
                    form: int = 1, policy: Optional[TruncationPolicy] = None) -> complex:
    """
    Kernel sum_n (q)_n / (ab)_n t^n of normalised Al-Salam-Chihara products.

    Form 1 sums an 8W7 in b e^{-i theta}, form 2 one in beta t / a; the two
    are equal wherever both converge.
    """
    policy = policy or TruncationPolicy()
    _coupled(lam, mu, 2)
    t = _check_t(t)
    if form not in (1, 2):
        raise ConstraintViolated("form is 1 or 2", f"form={form}")
    if t == 0:
        return complex(1.0)
    q = lam.q.q
    a, b = lam.values
    alpha, beta = mu.values
    u, w = _units(x, y)
    crossing = {
        "te^{i(θ+φ)}": t * u * w,
        "te^{i(θ-φ)}": t * u / w,
        "te^{i(φ-θ)}": t * w / u,
        "te^{-i(θ+φ)}": t / (u * w),
    }
    if form == 1:
        prefactor = _guarded_ratio(
            [t * t, b / u, alpha * t * u, beta * t * u, a * t * w, a * t / w],
            dict({"ab": a * b, "at²e^{iθ}": a * t * t * u}, **crossing),
            q,
            policy,
        )
        series = eval_W(a * t * t * u / q, [alpha * t / b, beta * t / b, a * u, t * u * w, t * u / w],
                        b / u, q, policy)
    else:
        prefactor = _guarded_ratio(
            [beta * t / a, alpha * t * u, alpha * t / u, a * t * w, a * t / w],
            dict({"αat": alpha * a * t}, **crossing),
            q,
            policy,
        )
        series = eval_W(alpha * a * t / q, [alpha * t / b, a * u, a / u, alpha * w, alpha / w],
                        beta * t / a, q, policy)
    return prefactor * series.value


def _crossing(t: complex, u: complex, w: complex) -> Dict[str, complex]:
    return {
        "e^{i(θ+φ)}": t * u * w,
        "e^{i(θ-φ)}": t * u / w,
        "e^{i(φ-θ)}": t * w / u,
        "e^{-i(θ+φ)}": t / (u * w),
    }


def bigqh_kernel(x: float, y: float, a: float, alpha: float, t: complex, q: float,
                 policy: Optional[TruncationPolicy] = None) -> complex:
    """Continuous big q-Hermite kernel sum_n (t/a^2)^n / (q)_n p_n(x; a) p_n(y; alpha) as a 3phi2."""
    policy = policy or TruncationPolicy()
    qv = QBase.of(q).q
    t = _check_t(t)
    if a == 0:
        raise ConstraintViolated("a ≠ 0", "the coefficients carry a^{-2n}")
    if t == 0:
        return complex(1.0)
    u, w = _units(x, y)
    s = alpha * t / a
    prefactor = _guarded_ratio([s * s, alpha * t * w, alpha / w], _crossing(s, u, w), qv, policy)
    pole_guard({"α²t²/a²": s * s, "αte^{iφ}": alpha * t * w}, qv)
    series = phi([t, s * u * w, s * w / u], [s * s, alpha * t * w], alpha / w, qv, policy)
    return prefactor * series


def bigqh_kernel_norm(x: float, y: float, a: float, alpha: float, t: complex, q: float,
                      policy: Optional[TruncationPolicy] = None) -> complex:
    """Kernel sum_n t^n / ((q)_n (a alpha)^n) p_n(x; a) p_n(y; alpha) as a 3phi2."""
    policy = policy or TruncationPolicy()
    qv = QBase.of(q).q
    t = _check_t(t)
    if t == 0:
        return complex(1.0)
    u, w = _units(x, y)
    prefactor = _guarded_ratio([t * t, a * t * w, alpha / w], _crossing(t, u, w), qv, policy)
    if alpha == 0:
        return prefactor
    pole_guard({"t²": t * t, "ate^{iφ}": a * t * w}, qv)
    series = phi([a * t / alpha, t * u * w, t * w / u], [t * t, a * t * w], alpha / w, qv, policy)
    return prefactor * series


def qhermite_qbessel_kernel(x: float, y: float, alpha: float, t: complex, q: float,
                            policy: Optional[TruncationPolicy] = None) -> complex:
    """The normalised big q-Hermite kernel at a = 0, a 2phi1 of q-Bessel type."""
    policy = policy or TruncationPolicy()
    qv = QBase.of(q).q
    t = _check_t(t)
    if t == 0:
        return complex(1.0)
    u, w = _units(x, y)
    prefactor = _guarded_ratio([t * t, alpha / w], _crossing(t, u, w), qv, policy)
    pole_guard({"t²": t * t}, qv)
    return prefactor * phi([t * u * w, t * w / u], [t * t], alpha / w, qv, policy)


def j_t(x: float, y: float, alpha: float, t: complex, q: float, argument: str = "theta",
        policy: Optional[TruncationPolicy] = None) -> complex:
    """
    2phi1[t e^{i(theta+phi)}, t e^{i(theta-phi)}; t^2; q, alpha e^{-i psi}]
    with psi = theta by default, or phi when ``argument`` is "phi".
    """
    if argument not in ("theta", "phi"):
        raise ConstraintViolated("argument is theta or phi", f"argument={argument!r}")
    qv = QBase.of(q).q
    t = as_complex(t, "t")
    if t == 0:
        return complex(1.0)
    u, w = _units(x, y)
    z = alpha / (u if argument == "theta" else w)
    pole_guard({"t²": t * t}, qv)
    return phi([t * u * w, t * u / w], [t * t], z, qv, policy)
