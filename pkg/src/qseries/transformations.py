"""
Standalone checks of transformation and summation formulas the kernel
derivation leans on.
"""

import cmath
import logging
from typing import Optional

from ..polys.params import ParamSet
from ..qcore.errors import ConstraintViolated, Divergent
from ..qcore.pochhammer import qpoch_n_ratio, qpoch_ratio
from ..qcore.types import CheckReport, QBase, TruncationPolicy, complex_pair, relative_error
from .hypergeometric import eval_phi, idem, phi, sum_series, w_spec

logger = logging.getLogger(__name__)


def _resolve_q(lam: ParamSet, q: Optional[QBase]) -> float:
    if q is not None and QBase.of(q).q != lam.q.q:
        raise ConstraintViolated("q agrees with the parameter set", f"{QBase.of(q).q} != {lam.q.q}")
    return lam.q.q


def six_w_five_lhs(u: complex, v: complex, t: complex, lam: ParamSet,
                   policy: TruncationPolicy) -> complex:
    """6W5(eps^2/q; ad, q/u, q/v; q, bc uvt/q^2)."""
    q = lam.q.q
    a, b, c, d = lam.padded()
    eps = lam.epsilon
    spec = w_spec(eps * eps / q, [a * d, q / u, q / v], b * c * u * v * t / q ** 2, q)
    return eval_phi(spec, policy).value


def six_w_five_outer_ratio(lam: ParamSet) -> float:
    """
    Asymptotic term ratio q max(1, |eps / ad|) shared by the three outer
    k-sums: the coefficients shrink like q^k while the inner 4phi3 grow like
    (eps / ad)^k.
    """
    a, _, _, d = lam.padded()
    return lam.q.q * max(1.0, abs(lam.epsilon / (a * d)))


def six_w_five_rhs(u: complex, v: complex, t: complex, lam: ParamSet,
                   policy: TruncationPolicy):
    """The three-term expansion of the 6W5, returned term by term."""
    if t == 0:
        return complex(1.0), complex(0.0), complex(0.0)
    rho = six_w_five_outer_ratio(lam)
    if rho >= 1.0:
        raise Divergent("q max(1, |eps/ad|) < 1 for the three-term expansion", f"ratio={rho:.6g}")
    if rho > 0.9:
        logger.warning("6W5 expansion converges slowly: outer ratio %.4f", rho)
    q = lam.q.q
    a, b, c, d = lam.padded()
    eps = lam.epsilon
    ad, bc = a * d, b * c
    rq = q ** 0.5
    uv = eps * eps * u * v / q ** 2

    def first(k: int) -> complex:
        coefficient = qpoch_n_ratio([eps, eps * rq, -eps * rq, -eps / ad],
                                   [q, bc, -q * t * eps, -q * eps / t], q, k) * q ** k
        inner = phi([q ** (-k), -eps, ad, uv],
                    [-ad * q ** (1 - k) / eps, u * eps * eps / q, v * eps * eps / q], q, q, policy)
        return coefficient * inner

    def second(k: int) -> complex:
        coefficient = qpoch_n_ratio([-t, t * rq, -t * rq, t / ad],
                                   [q, q * t * t, -t * eps / ad, -q * t / eps], q, k) * q ** k
        inner = phi([-eps * q ** (-k) / t, -eps, ad, uv],
                    [ad * q ** (1 - k) / t, u * eps * eps / q, v * eps * eps / q], q, q, policy)
        return coefficient * inner

    z = bc * u * v * t / q ** 2

    def third(k: int) -> complex:
        coefficient = qpoch_n_ratio([t, -eps / ad, -eps * t / ad, z],
                                   [q, q * t / ad, bc * t * u / q, bc * t * v / q], q, k) * q ** k
        inner = phi([q ** (-k), -t, t * rq, -t * rq],
                    [q * t * t, -eps * t / ad, -ad * q ** (1 - k) / eps], q, q, policy)
        return coefficient * inner

    term1 = (1 - t * t) * qpoch_ratio([-q * t * eps], [-t / eps], q, policy) \
        * sum_series(first, policy).value
    term2 = qpoch_ratio([eps * eps, -eps / ad, t, -t * eps / ad],
                        [-eps, bc, t / ad, -eps / t], q, policy) * sum_series(second, policy).value
    term3 = qpoch_ratio([eps * eps, ad, bc * t * u / q, bc * t * v / q, uv],
                        [bc, ad / t, u * eps * eps / q, v * eps * eps / q, z], q, policy) \
        * sum_series(third, policy).value
    return term1, term2, term3


def check_6w5_split(u: complex,
                    v: complex,
                    t: complex,
                    lam: ParamSet,
                    q: Optional[QBase] = None,
                    policy: Optional[TruncationPolicy] = None,
                    tol: float = 1e-8) -> CheckReport:
    """
    Compare the 6W5 series of the kernel's q-integral representation with its
    three-term expansion in t.
    """
    policy = policy or TruncationPolicy()
    _resolve_q(lam, q)
    if len(lam.values) != 4 or lam.values[0] * lam.values[3] == 0:
        raise ConstraintViolated("four parameters with ad ≠ 0")
    if not abs(t) < 1:
        raise ConstraintViolated("|t| < 1", f"t={t!r}")
    lhs = six_w_five_lhs(u, v, t, lam, policy)
    parts = six_w_five_rhs(u, v, t, lam, policy)
    rhs = sum(parts)
    return CheckReport.build(
        identity_id="check_6w5_split",
        observed_error=relative_error(rhs, lhs),
        tolerance=tol,
        witness={
            "q": lam.q.q,
            "lambda": list(lam.values),
            "u": complex_pair(u),
            "v": complex_pair(v),
            "t": complex_pair(t),
        },
        diagnostics={
            "lhs": complex_pair(lhs),
            "parts": [complex_pair(p) for p in parts],
            "t_zero_limit": t == 0,
        },
    )


def check_2phi1_2phi2(u: complex,
                      v: complex,
                      t: complex,
                      b: complex,
                      c: complex,
                      q: QBase,
                      policy: Optional[TruncationPolicy] = None,
                      tol: float = 1e-9) -> CheckReport:
    """2phi1[q/u, q/v; bc; q, bc uvt/q^2] against its prefactored 2phi2 form."""
    policy = policy or TruncationPolicy()
    qv = QBase.of(q).q
    bc = b * c
    z = bc * u * v * t / qv ** 2
    lhs = phi([qv / u, qv / v], [bc], z, qv, policy)
    prefactor = qpoch_ratio([bc * t * u / qv, bc * t * v / qv], [bc, z], qv, policy)
    rhs = prefactor * phi([t, z], [bc * t * u / qv, bc * t * v / qv], bc, qv, policy)
    return CheckReport.build(
        identity_id="check_2phi1_2phi2",
        observed_error=relative_error(rhs, lhs),
        tolerance=tol,
        witness={
            "q": qv,
            "u": complex_pair(u),
            "v": complex_pair(v),
            "t": complex_pair(t),
            "b": complex_pair(b),
            "c": complex_pair(c),
        },
        diagnostics={"lhs": complex_pair(lhs), "rhs": complex_pair(rhs)},
    )


def _three_phi_two_term(alpha: float, delta: float, beta: float, phi_angle: float,
                        q: float, policy: TruncationPolicy) -> complex:
    e = cmath.exp(1j * phi_angle)
    prefactor = qpoch_ratio([alpha * e, alpha / e, beta * delta, beta / delta],
                            [alpha / delta], q, policy)
    series = phi([beta / alpha, delta * e, delta / e], [q * delta / alpha, beta * delta], q, q, policy)
    return prefactor * series


def check_3phi2_sum(alpha: float,
                    beta: float,
                    delta: float,
                    phi_angle: float,
                    q: QBase,
                    policy: Optional[TruncationPolicy] = None,
                    tol: float = 1e-10) -> CheckReport:
    """
    Nonterminating 3phi2 summation behind the t = 1 kernel: the pair of
    series mirrored under alpha <-> delta sums to (alpha delta, beta e^{+-i phi}; q)_inf.
    """
    policy = policy or TruncationPolicy()
    qv = QBase.of(q).q
    lhs = idem(
        _three_phi_two_term,
        {"alpha": alpha, "delta": delta, "beta": beta, "phi_angle": phi_angle, "q": qv, "policy": policy},
        ("alpha", "delta"),
    )
    e = cmath.exp(1j * phi_angle)
    rhs = qpoch_ratio([alpha * delta, beta * e, beta / e], [], qv, policy)
    return CheckReport.build(
        identity_id="check_3phi2_sum",
        observed_error=relative_error(lhs, rhs),
        tolerance=tol,
        witness={"q": qv, "alpha": alpha, "beta": beta, "delta": delta, "phi": phi_angle},
        diagnostics={"lhs": complex_pair(lhs), "rhs": complex_pair(rhs)},
    )
