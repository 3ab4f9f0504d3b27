"""
Explicit three-part evaluation of the Askey-Wilson Poisson kernel.

K = K1 + K2 + K3, where K1 and K2 share an l-coefficient built from a
terminating m-sum of 8W7 series, and K3 is a k-sum of terminating 4phi3
values times an l-sum of 8W7 series, added to its image under
theta -> -theta.
"""

import cmath
import logging
from typing import Dict, Optional

from ..polys.askey_wilson import angle_of
from ..qcore.errors import ConstraintViolated, EndpointSingularity
from ..qcore.pochhammer import pole_guard, qpoch_n_ratio, qpoch_ratio
from ..qcore.types import TruncationPolicy
from ..qseries.hypergeometric import eval_W, idem, phi, sum_series
from .params import KernelParams, KernelValue

logger = logging.getLogger(__name__)


class ExplicitKernel:
    """
    Evaluator for one (x, y, lambda, mu, t) point.

    The l-coefficients common to K1 and K2 are cached, since K1 revisits
    l = 0..k for every k.
    """

    def __init__(self, theta: float, phi_angle: float, kp: KernelParams,
                 policy: Optional[TruncationPolicy] = None):
        self.policy = policy or TruncationPolicy()
        self.q = kp.q.q
        self.a, self.b, self.c, self.d = kp.lam.values
        self.alpha, self.beta, self.gamma, self.delta = kp.mu.values
        self.t = complex(kp.t)
        self.eps = kp.epsilon
        self.u = cmath.exp(1j * theta)
        self.w = cmath.exp(1j * phi_angle)
        self._common: Dict[int, complex] = {}
        self._third_terms = 0
        self._guard()

    def _guard(self) -> None:
        a, b, c, d = self.a, self.b, self.c, self.d
        alpha, beta, gamma, delta = self.alpha, self.beta, self.gamma, self.delta
        q, t, eps, u, w = self.q, self.t, self.eps, self.u, self.w
        ab_ = alpha * beta / b
        pole_guard({
            "-t/ε": -t / eps,
            "ac": a * c,
            "ad": a * d,
            "bc": b * c,
            "cd": c * d,
            "αβ": alpha * beta,
            "αδ": alpha * delta,
            "α/δ": alpha / delta,
            "βδ": beta * delta,
            "qδ/α": q * delta / alpha,
            "qt²": q * t * t,
            "e^{-2iθ}": 1 / (u * u),
            "-ε": -eps,
            "-qtε": -q * t * eps,
            "-qε/t": -q * eps / t,
            "-ε/t": -eps / t,
            "-qt/ε": -q * t / eps,
            "-ad/ε": -a * d / eps,
            "-ε/ad": -eps / (a * d),
            "-tε/ad": -t * eps / (a * d),
            "t/ad": t / (a * d),
            "ad/t": a * d / t,
            "αβc/b": ab_ * c,
            "αβd/b": ab_ * d,
            "αβe^{iθ}/b": ab_ * u,
            "αβcde^{-iθ}/b": ab_ * c * d / u,
            "ε²e^{-iθ}/b": eps * eps / (b * u),
            "bcδt/γ": b * c * delta * t / gamma,
            "cte^{iθ}": c * t * u,
            "cte^{-iθ}": c * t / u,
            "cte^{i(θ+φ)}/γ": c * t * u * w / gamma,
            "cte^{i(θ-φ)}/γ": c * t * u / (w * gamma),
            "cte^{i(φ-θ)}/γ": c * t * w / (u * gamma),
            "cte^{-i(θ+φ)}/γ": c * t / (u * w * gamma),
        }, q)

    def _m_sum(self, ell: int) -> complex:
        """Terminating m-sum of 8W7 values attached to index l."""
        a, b, c, d = self.a, self.b, self.c, self.d
        alpha, beta, delta = self.alpha, self.beta, self.delta
        q, u, w = self.q, self.u, self.w
        ql = q ** (-ell)
        # numerator/denominator parameters paired so each step ratio stays O(1)
        pairs = [
            (delta * ql / alpha, q * ql / (alpha * w)),
            (q * ql / (alpha * beta), q * ql * w / alpha),
            (b * q * ql / (alpha * beta * c), b * q * ql / (alpha * beta * u)),
            (ql, b * q * ql * u / (alpha * beta)),
            (delta * w, q),
            (delta / w, beta * delta),
            (d * u, c * d),
            (d / u, q * delta / alpha),
        ]
        step = b * c * q / (alpha * delta)
        base = 1.0 - delta * ql / alpha
        w_top = alpha * beta * c * d * q ** (ell - 1) / (b * u)
        total = complex(0.0)
        coefficient = complex(1.0)
        for m in range(ell + 1):
            qm = q ** m
            well_poised = (1.0 - delta * qm * qm * ql / alpha) / base
            series = eval_W(
                w_top,
                [c / u, d * qm / u, alpha * beta * q ** (ell - m) / (b * u), c * d * q ** ell, alpha * beta / (a * b)],
                a * u,
                q,
                self.policy,
            ).value
            total += well_poised * coefficient * series
            for top, bottom in pairs:
                coefficient *= (1.0 - top * qm) / (1.0 - bottom * qm)
            coefficient *= step
        return total

    def common(self, ell: int) -> complex:
        """The l-dependent factor shared by K1 and K2."""
        if ell not in self._common:
            a, b, c, d = self.a, self.b, self.c, self.d
            alpha, beta, delta = self.alpha, self.beta, self.delta
            q, eps, u, w = self.q, self.eps, self.u, self.w
            ab_ = alpha * beta / b
            coefficient = qpoch_n_ratio(
                [-eps, a * d, alpha * w, alpha / w, ab_ * u, ab_ / u, ab_ * c * d / u],
                [q, alpha * beta, alpha * delta, alpha / delta, ab_ * d, ab_ * c, eps * eps / (b * u)],
                q,
                ell,
            )
            self._common[ell] = coefficient * q ** ell * self._m_sum(ell)
        return self._common[ell]

    def _shared_prefactor(self):
        a, b, c, d = self.a, self.b, self.c, self.d
        ab_ = self.alpha * self.beta / b
        u, eps = self.u, self.eps
        return [ab_ * c, ab_ * d, a * u, eps * eps / (b * u)], [a * c, a * d, ab_ * u, ab_ * c * d / u]

    def first(self):
        a, b, c, d = self.a, self.b, self.c, self.d
        q, t, eps = self.q, self.t, self.eps
        rq = q ** 0.5
        top, bottom = self._shared_prefactor()
        prefactor = (1 - t * t) * qpoch_ratio([-q * t * eps] + top, [-t / eps] + bottom, q, self.policy)

        def term(k: int) -> complex:
            coefficient = qpoch_n_ratio([eps, eps * rq, -eps * rq, -eps / (a * d)],
                                        [q, b * c, -q * t * eps, -q * eps / t], q, k) * q ** k
            inner = complex(0.0)
            ratio = complex(1.0)
            for ell in range(k + 1):
                inner += ratio * self.common(ell)
                ratio *= (1 - q ** (ell - k)) / (1 + a * d * q ** (1 - k + ell) / eps)
            return coefficient * inner

        total = sum_series(term, self.policy)
        return prefactor * total.value, total.terms_used

    def second(self):
        a, b, c, d = self.a, self.b, self.c, self.d
        q, t, eps = self.q, self.t, self.eps
        rq = q ** 0.5
        ad = a * d
        top, bottom = self._shared_prefactor()
        prefactor = qpoch_ratio([eps * eps, -eps / ad, t, -t * eps / ad] + top,
                                [-eps, b * c, t / ad, -eps / t] + bottom, q, self.policy)

        def term(k: int) -> complex:
            coefficient = qpoch_n_ratio([-t, t * rq, -t * rq, t / ad],
                                        [q, q * t * t, -t * eps / ad, -q * t / eps], q, k) * q ** k

            def inner(ell: int) -> complex:
                shift = qpoch_n_ratio([-eps * q ** (-k) / t], [ad * q ** (1 - k) / t], q, ell)
                return shift * self.common(ell)

            return coefficient * sum_series(inner, self.policy, min_terms=k + 2).value

        total = sum_series(term, self.policy)
        return prefactor * total.value, total.terms_used

    def _third_once(self, plus: complex, minus: complex) -> complex:
        """One orientation of K3; ``plus`` plays e^{i theta} and ``minus`` e^{-i theta}."""
        a, b, c, d = self.a, self.b, self.c, self.d
        alpha, beta, gamma, delta = self.alpha, self.beta, self.gamma, self.delta
        q, t, eps, w = self.q, self.t, self.eps, self.w
        rq = q ** 0.5
        ad = a * d
        ct = c * t
        bcdt = b * c * delta * t / gamma
        prefactor = qpoch_ratio(
            [eps * eps, a * minus, c * minus, d * minus, alpha * beta * plus / b,
             ct * plus, ct * delta * plus / gamma, b * ct * w / gamma, b * ct / (w * gamma)],
            [a * c, b * c, c * d, alpha * beta, ad / t, bcdt,
             minus * minus, ct * plus * w / gamma, ct * plus / (w * gamma)],
            q,
            self.policy,
        )

        def term(k: int) -> complex:
            qk = q ** k
            coefficient = qpoch_n_ratio(
                [t, -eps / ad, -t * eps / ad, bcdt, ct * plus * w / gamma, ct * plus / (w * gamma)],
                [q, q * t / ad, ct * plus, ct * delta * plus / gamma, b * ct * w / gamma, b * ct / (w * gamma)],
                q,
                k,
            ) * qk
            balanced = phi([q ** (-k), -t, t * rq, -t * rq], [q * t * t, -t * eps / ad, -ad * q ** (1 - k) / eps],
                           q, q, self.policy)

            def inner(ell: int) -> complex:
                ql = q ** ell
                shift = qpoch_n_ratio(
                    [ct * qk * plus * w / gamma, ct * qk * plus / (w * gamma), a * plus, c * plus, d * plus],
                    [ct * qk * plus, ct * delta * qk * plus / gamma, alpha * beta * plus / b, q * plus * plus, q],
                    q,
                    ell,
                ) * ql
                series = eval_W(
                    bcdt * qk / q,
                    [b * ct * qk / (beta * gamma), b * ct * qk / (alpha * gamma), b * minus / ql,
                     delta * w, delta / w],
                    alpha * beta * ql * plus / b,
                    q,
                    self.policy,
                ).value
                return shift * series

            return coefficient * balanced * sum_series(inner, self.policy).value

        total = sum_series(term, self.policy)
        self._third_terms = max(self._third_terms, total.terms_used)
        return prefactor * total.value

    def third(self):
        value = idem(self._third_once, {"plus": self.u, "minus": 1 / self.u}, ("plus", "minus"))
        return value, self._third_terms


def kernel_explicit(x: float, y: float, kp: KernelParams,
                    policy: Optional[TruncationPolicy] = None) -> KernelValue:
    """
    Askey-Wilson Poisson kernel from its explicit three-part expansion.

    Args:
        x: First abscissa, strictly inside (-1, 1)
        y: Second abscissa, strictly inside (-1, 1)
        kp: Compatible lambda and mu with four parameters each, and t
        policy: Truncation policy for every nested sum

    Returns:
        KernelValue carrying K1, K2, K3 and the k-terms each part used

    Raises:
        PoleGuardTripped: if a denominator parameter sits on {q^-m}
    """
    if len(kp.lam.values) != 4:
        raise ConstraintViolated("four parameters", f"got {len(kp.lam.values)}")
    theta, phi_angle = angle_of(x), angle_of(y)
    if abs(x) == 1.0 or abs(y) == 1.0:
        raise EndpointSingularity("|x| < 1 and |y| < 1", f"x={x} y={y}")
    if kp.t == 0:
        return KernelValue.from_parts((complex(1.0), complex(0.0), complex(0.0)),
                                      {"k1_terms": 0, "k2_terms": 0, "k3_terms": 0})
    evaluator = ExplicitKernel(theta, phi_angle, kp, policy)
    first, k1_terms = evaluator.first()
    second, k2_terms = evaluator.second()
    third, k3_terms = evaluator.third()
    logger.debug("Explicit kernel parts used %d/%d/%d k-terms", k1_terms, k2_terms, k3_terms)
    return KernelValue.from_parts(
        (first, second, third),
        {"k1_terms": k1_terms, "k2_terms": k2_terms, "k3_terms": k3_terms},
    )
