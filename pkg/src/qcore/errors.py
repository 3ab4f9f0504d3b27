"""
Exception hierarchy shared by every numerical layer.

Each error carries a stable ``code`` (used by the CLI on stderr) and an
``invariant`` naming the condition that failed.
"""

from typing import Optional


class QKernelError(ValueError):
    """Base class for all evaluation errors."""

    code = "QKERNEL"

    def __init__(self, invariant: str, detail: Optional[str] = None):
        self.invariant = invariant
        self.detail = detail
        message = invariant if detail is None else f"{invariant}: {detail}"
        super().__init__(message)


class MaxTermsExceeded(QKernelError):
    """A product or series needed more terms than the policy allows."""

    code = "MAX_TERMS"


class Divergent(QKernelError):
    """A nonterminating series was requested outside its disc of convergence."""

    code = "DIVERGENT"


class PoleInDenominator(QKernelError):
    """A denominator factor vanishes before the series terminates."""

    code = "POLE"


class PoleGuardTripped(QKernelError):
    """A kernel denominator argument sits on (or next to) the lattice q^{-m}."""

    code = "POLE_GUARD"

    def __init__(self, factor: str, value: complex, m: int):
        self.factor = factor
        self.value = value
        self.m = m
        super().__init__(
            f"{factor} not in {{q^-m}}",
            f"{factor}={value!r} is within tolerance of q^-{m}",
        )


class ConstraintViolated(QKernelError):
    """A parameter compatibility condition does not hold."""

    code = "CONSTRAINT"


class EndpointSingularity(QKernelError):
    """Evaluation requested at x = +-1 where a weight factor blows up."""

    code = "ENDPOINT"


class NonFiniteValue(QKernelError):
    """A computation produced NaN or infinity."""

    code = "NON_FINITE"


class NonFiniteIntegrand(NonFiniteValue):
    """An integrand returned NaN or infinity at a quadrature or lattice node."""

    code = "NON_FINITE_INTEGRAND"
