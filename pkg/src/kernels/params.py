"""
Kernel inputs and outputs.
"""

import cmath
from typing import Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from ..polys.params import MuParams, ParamSet
from ..qcore.types import QBase


class KernelParams(BaseModel):
    """
    The pair of parameter sets and the kernel variable t.

    mu is validated against lambda when it is built, so a KernelParams
    always carries a compatible pair.
    """

    model_config = ConfigDict(frozen=True)

    lam: ParamSet
    mu: MuParams
    t: complex

    @field_validator("t")
    @classmethod
    def _inside_unit_disc(cls, value: complex) -> complex:
        if not cmath.isfinite(value) or not abs(value) < 1.0:
            raise ValueError("|t| < 1")
        return value

    @model_validator(mode="after")
    def _mu_belongs_to_lam(self) -> "KernelParams":
        if self.mu.companion != self.lam:
            raise ValueError("mu was validated against a different lambda")
        return self

    @property
    def q(self) -> QBase:
        return self.lam.q

    @property
    def epsilon(self) -> complex:
        return self.lam.epsilon

    @classmethod
    def build(cls, lam_values, mu_values, t: complex, q: float) -> "KernelParams":
        """Construct lambda, mu and t from bare numbers."""
        lam = ParamSet(values=tuple(lam_values), q=q)
        mu = MuParams(values=tuple(mu_values), q=q, companion=lam)
        return cls(lam=lam, mu=mu, t=t)


class KernelValue(BaseModel):
    """A kernel value, optionally with the three parts it was assembled from."""

    model_config = ConfigDict(frozen=True)

    value: complex
    parts: Optional[Tuple[complex, complex, complex]] = None
    diagnostics: Dict[str, int] = {}

    @model_validator(mode="after")
    def _parts_add_up(self) -> "KernelValue":
        if self.parts is not None and self.value != self.parts[0] + self.parts[1] + self.parts[2]:
            raise ValueError("value = K1 + K2 + K3")
        return self

    @classmethod
    def from_parts(cls, parts: Tuple[complex, complex, complex], diagnostics: Dict[str, int]) -> "KernelValue":
        return cls(value=parts[0] + parts[1] + parts[2], parts=parts, diagnostics=diagnostics)
