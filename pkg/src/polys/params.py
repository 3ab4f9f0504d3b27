"""
Parameter sets lambda = (a, b, c, d) and mu = (alpha, beta, gamma, delta),
shorter for the degenerate families.
"""

import cmath
from typing import Any, Optional, Tuple

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from ..qcore.pochhammer import lattice_index
from ..qcore.types import QBase

COMPATIBILITY_TOL = 1e-14
PAIR_LATTICE_TOL = 1e-10

FAMILY_NAMES = {
    4: "askey_wilson",
    3: "dual_qhahn",
    2: "al_salam_chihara",
    1: "big_qhermite",
    0: "qhermite",
}


def _coerce_q(value: Any) -> Any:
    return QBase(q=value) if isinstance(value, (int, float)) else value


def _close(x: float, y: float) -> bool:
    return abs(x - y) <= COMPATIBILITY_TOL * max(abs(x), abs(y))


class ParamSet(BaseModel):
    """
    Ordered real parameters of one polynomial system, with its base q.

    Length 4 is Askey-Wilson, 3 continuous dual q-Hahn, 2 Al-Salam-Chihara,
    1 continuous big q-Hermite and 0 continuous q-Hermite.
    """

    model_config = ConfigDict(frozen=True)

    values: Tuple[float, ...]
    q: QBase

    @field_validator("q", mode="before")
    @classmethod
    def _coerce(cls, value: Any) -> Any:
        return _coerce_q(value)

    @field_validator("values")
    @classmethod
    def _admissible(cls, values: Tuple[float, ...]) -> Tuple[float, ...]:
        if len(values) > 4:
            raise ValueError("at most four parameters")
        for value in values:
            if not abs(value) < 1.0:
                raise ValueError("every |parameter| < 1")
        return values

    @model_validator(mode="after")
    def _pairwise_products(self) -> "ParamSet":
        values = self.values
        for i in range(len(values)):
            for j in range(i + 1, len(values)):
                if lattice_index(values[i] * values[j], self.q.q, PAIR_LATTICE_TOL) is not None:
                    raise ValueError("pairwise products a_i a_j not in {q^-m}")
        return self

    @property
    def family(self) -> str:
        return FAMILY_NAMES[len(self.values)]

    def padded(self) -> Tuple[float, float, float, float]:
        """The parameters extended by zeros to a quartet."""
        return tuple(self.values) + (0.0,) * (4 - len(self.values))

    @property
    def epsilon(self) -> complex:
        """(abcd)^{1/2} on the principal branch."""
        a, b, c, d = self.padded()
        return cmath.sqrt(complex(a * b * c * d))


def compatibility_violation(lam: ParamSet, mu: ParamSet) -> Optional[str]:
    """Name of the first failed lambda/mu coupling condition, if any."""
    if len(lam.values) != len(mu.values):
        return "mu has the same length as lambda"
    if lam.q.q != mu.q.q:
        return "mu and lambda share q"
    n = len(lam.values)
    if n == 4:
        a, b, c, d = lam.values
        alpha, beta, gamma, delta = mu.values
        if not _close(alpha * gamma, a * c):
            return "αγ = ac"
        if not _close(beta * delta, b * d):
            return "βδ = bd"
    elif n == 3:
        a, b, c = lam.values
        alpha, beta, gamma = mu.values
        if not _close(alpha * gamma, a * c):
            return "αγ = ac"
    elif n == 2:
        a, b = lam.values
        alpha, beta = mu.values
        if not _close(alpha * beta, a * b):
            return "αβ = ab"
    return None


def unity_violation(lam: ParamSet, mu: ParamSet) -> Optional[str]:
    """Name of the first failed condition for the t = 1 closed forms, if any."""
    problem = compatibility_violation(lam, mu)
    if problem:
        return problem
    n = len(lam.values)
    if n == 4:
        b, c = lam.values[1], lam.values[2]
        beta, gamma = mu.values[1], mu.values[2]
        if not _close(beta * gamma, b * c):
            return "βγ = bc"
        if not abs(beta) < abs(b):
            return "|β| < |b|"
    elif n == 3:
        b, c = lam.values[1], lam.values[2]
        beta, gamma = mu.values[1], mu.values[2]
        if not _close(beta * gamma, b * c):
            return "βγ = bc"
        if c == gamma:
            return "c ≠ γ"
    elif n != 2:
        return "t = 1 closed form exists for 2, 3 or 4 parameters"
    return None


class MuParams(ParamSet):
    """
    The second parameter set mu, validated against its companion lambda.

    With ``unity`` set the t = 1 conditions are enforced as well.
    """

    companion: ParamSet
    unity: bool = False

    @model_validator(mode="after")
    def _coupled_to_companion(self) -> "MuParams":
        problem = unity_violation(self.companion, self) if self.unity else \
            compatibility_violation(self.companion, self)
        if problem:
            raise ValueError(problem)
        return self
