"""
Composite Gauss-Legendre quadrature in theta for integrals over [-1, 1]
against the weights of the polynomial systems.

With x = cos theta the Jacobian sin theta is folded into each weight's
density, which removes the (1 - x^2)^{-1/2} endpoint singularity.
"""

import math
import os
from functools import lru_cache
from typing import Callable, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..polys.askey_wilson import weight_density
from ..polys.hermite import rho0
from ..polys.params import ParamSet
from ..qcore.errors import NonFiniteIntegrand
from ..qcore.types import TruncationPolicy

MAX_NODES = 10 ** 6


class QuadratureConfig(BaseModel):
    """Panels, Gauss-Legendre order per panel and the theta interval."""

    model_config = ConfigDict(frozen=True)

    panels: int = Field(default_factory=lambda: int(os.getenv("QKERNEL_PANELS", "64")), ge=1)
    nodes_per_panel: int = Field(default_factory=lambda: int(os.getenv("QKERNEL_NODES_PER_PANEL", "16")), ge=1)
    domain: Tuple[float, float] = (0.0, math.pi)

    @model_validator(mode="after")
    def _bounded(self) -> "QuadratureConfig":
        if self.panels * self.nodes_per_panel > MAX_NODES:
            raise ValueError("panels * nodes_per_panel <= 1e6")
        lo, hi = self.domain
        if not (0.0 <= lo < hi <= math.pi):
            raise ValueError("domain inside [0, pi] with lo < hi")
        return self

    def refined(self, factor: int = 2) -> "QuadratureConfig":
        """Same rule with ``factor`` times as many panels."""
        return self.model_copy(update={"panels": self.panels * factor})

    def on(self, lo: float, hi: float, panels: Optional[int] = None) -> "QuadratureConfig":
        """Same rule restricted to [lo, hi]."""
        return QuadratureConfig(panels=panels or self.panels, nodes_per_panel=self.nodes_per_panel, domain=(lo, hi))


@lru_cache(maxsize=64)
def _composite_rule(panels: int, order: int, lo: float, hi: float) -> Tuple[np.ndarray, np.ndarray]:
    nodes, weights = np.polynomial.legendre.leggauss(order)
    edges = np.linspace(lo, hi, panels + 1)
    half = 0.5 * (edges[1:] - edges[:-1])
    mid = 0.5 * (edges[1:] + edges[:-1])
    thetas = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
    scaled = (half[:, None] * weights[None, :]).ravel()
    thetas.setflags(write=False)
    scaled.setflags(write=False)
    return thetas, scaled


def theta_rule(cfg: QuadratureConfig) -> Tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of the composite rule on cfg.domain."""
    return _composite_rule(cfg.panels, cfg.nodes_per_panel, cfg.domain[0], cfg.domain[1])


class Weight:
    """A weight on [-1, 1] seen through x = cos theta."""

    name = "lebesgue"

    def density(self, theta: float) -> float:
        """w(cos theta) sin theta."""
        return math.sin(theta)


class AskeyWilsonWeight(Weight):
    """rho(x; a, b, c, d), the orthogonality weight of the Askey-Wilson system."""

    name = "askey_wilson"

    def __init__(self, params: ParamSet, policy: Optional[TruncationPolicy] = None):
        self.params = params
        self.policy = policy or TruncationPolicy()

    def density(self, theta: float) -> float:
        return weight_density(theta, self.params.values, self.params.q.q, self.policy)


class QHermiteWeight(Weight):
    """rho0(x), the continuous q-Hermite weight."""

    name = "qhermite"

    def __init__(self, q: float, policy: Optional[TruncationPolicy] = None):
        self.q = q
        self.policy = policy or TruncationPolicy()

    def density(self, theta: float) -> float:
        return rho0(math.cos(theta), self.q, self.policy) * math.sin(theta)


def integrate_angle(g: Callable[[float], complex], cfg: Optional[QuadratureConfig] = None) -> complex:
    """int g(theta) d theta over cfg.domain."""
    cfg = cfg or QuadratureConfig()
    thetas, weights = theta_rule(cfg)
    total = complex(0.0)
    for theta, weight in zip(thetas, weights):
        value = complex(g(float(theta)))
        if not (math.isfinite(value.real) and math.isfinite(value.imag)):
            raise NonFiniteIntegrand("integrand finite", f"theta={float(theta):.17g}")
        total += weight * value
    return total


def integrate_weighted(f: Callable[[float], complex],
                       weight: Optional[Weight] = None,
                       cfg: Optional[QuadratureConfig] = None) -> complex:
    """
    int_{-1}^{1} f(x) w(x) dx.

    Args:
        f: Integrand, evaluated at x = cos theta
        weight: AskeyWilsonWeight, QHermiteWeight or plain dx (the default)
        cfg: Quadrature rule

    Returns:
        The integral as a complex number

    Raises:
        NonFiniteIntegrand: if f or the weight is NaN or infinite at a node
    """
    weight = weight or Weight()
    return integrate_angle(lambda theta: f(math.cos(theta)) * weight.density(theta), cfg)
