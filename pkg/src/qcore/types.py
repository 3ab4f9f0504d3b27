"""
Value types shared across the package: the deformation parameter, the
truncation policy, series results and check reports.
"""

import cmath
import math
import os
import sys
from typing import Any, Dict, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .errors import NonFiniteValue


class QBase(BaseModel):
    """The deformation parameter q, strictly inside (0, 1)."""

    model_config = ConfigDict(frozen=True)

    q: float

    @field_validator("q")
    @classmethod
    def _inside_unit_interval(cls, value: float) -> float:
        if not (0.0 < value < 1.0):
            raise ValueError("0 < q < 1")
        return value

    @classmethod
    def of(cls, q: Union["QBase", float]) -> "QBase":
        """Accept either a QBase or a bare float."""
        return q if isinstance(q, QBase) else cls(q=q)


def _env_float(name: str, default: str) -> float:
    return float(os.getenv(name, default))


def _env_int(name: str, default: str) -> int:
    return int(os.getenv(name, default))


class TruncationPolicy(BaseModel):
    """
    Stopping rule for infinite products and nonterminating series.

    Defaults come from QKERNEL_REL_TOL, QKERNEL_ABS_TOL and
    QKERNEL_MAX_TERMS when set.
    """

    model_config = ConfigDict(frozen=True)

    rel_tol: float = Field(default_factory=lambda: _env_float("QKERNEL_REL_TOL", "1e-13"))
    abs_tol: float = Field(default_factory=lambda: _env_float("QKERNEL_ABS_TOL", "1e-300"))
    max_terms: int = Field(default_factory=lambda: _env_int("QKERNEL_MAX_TERMS", "1000000"))

    @field_validator("rel_tol")
    @classmethod
    def _rel_tol_range(cls, value: float) -> float:
        if not math.isfinite(value) or value < sys.float_info.epsilon:
            raise ValueError("rel_tol >= machine epsilon and finite")
        return value

    @field_validator("abs_tol")
    @classmethod
    def _abs_tol_range(cls, value: float) -> float:
        if not math.isfinite(value) or value < 0.0:
            raise ValueError("abs_tol >= 0 and finite")
        return value

    @field_validator("max_terms")
    @classmethod
    def _max_terms_range(cls, value: int) -> int:
        if value < 1:
            raise ValueError("max_terms >= 1")
        return value


class SeriesValue(BaseModel):
    """A complex value together with its truncation diagnostics."""

    model_config = ConfigDict(frozen=True)

    value: complex
    terms_used: int = 0
    tail_estimate: float = 0.0
    terminated: bool = False
    structural_zero: bool = False

    @model_validator(mode="after")
    def _finite_and_nonnegative(self) -> "SeriesValue":
        if not cmath.isfinite(self.value):
            raise ValueError("value components finite")
        if self.tail_estimate < 0.0:
            raise ValueError("tail_estimate >= 0")
        return self


class CheckReport(BaseModel):
    """Pass/fail record of one identity evaluated at one witness point."""

    model_config = ConfigDict(frozen=True)

    identity_id: str
    observed_error: float
    tolerance: float
    passed: bool
    witness: Dict[str, Any] = Field(default_factory=dict)
    diagnostics: Dict[str, Any] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _passed_matches_error(self) -> "CheckReport":
        if self.passed != (self.observed_error <= self.tolerance):
            raise ValueError("passed <=> observed_error <= tolerance")
        return self

    @classmethod
    def build(cls,
              identity_id: str,
              observed_error: float,
              tolerance: float,
              witness: Dict[str, Any],
              diagnostics: Optional[Dict[str, Any]] = None) -> "CheckReport":
        observed = float(observed_error)
        return cls(
            identity_id=identity_id,
            observed_error=observed,
            tolerance=tolerance,
            passed=observed <= tolerance,
            witness=witness,
            diagnostics=diagnostics or {},
        )


def as_complex(value: Any, name: str = "value") -> complex:
    """Convert to complex, rejecting NaN and infinity."""
    z = complex(value)
    if not cmath.isfinite(z):
        raise NonFiniteValue(f"{name} finite", repr(z))
    return z


def relative_error(observed: complex, expected: complex) -> float:
    """|observed - expected| / max(|expected|, tiny)."""
    scale = max(abs(expected), 1e-300)
    return abs(observed - expected) / scale


def complex_pair(z: complex) -> list:
    """[re, im] for JSON witnesses."""
    z = complex(z)
    return [z.real, z.imag]
