"""
Seeded draws of generic parameter points for the transformation checks.

A draw is rejected and redrawn when a denominator parameter falls within
relative distance REJECT_TOL of the pole lattice {q^-m}, the series
argument is too large, or the 6W5 expansion converges slower than
MAX_OUTER_RATIO per term.
"""

import cmath
import logging
from typing import Any, Dict, Iterable

import numpy as np
from pydantic import ValidationError

from ..polys.params import ParamSet
from ..qcore.errors import ConstraintViolated
from ..qcore.pochhammer import lattice_index
from ..qseries.transformations import six_w_five_outer_ratio

logger = logging.getLogger(__name__)

REJECT_TOL = 1e-2
MAX_ARGUMENT = 0.8
MAX_OUTER_RATIO = 0.7
MAX_DRAWS = 1000


def _near_lattice(values: Iterable[complex], q: float) -> bool:
    return any(lattice_index(v, q, REJECT_TOL) is not None for v in values)


def _point_on_ring(rng: np.random.Generator) -> complex:
    radius = rng.uniform(0.8, 1.25)
    angle = rng.uniform(-0.5, 0.5)
    return radius * cmath.exp(1j * angle)


def sample_6w5_point(rng: np.random.Generator) -> Dict[str, Any]:
    """
    Draw (q, lambda, u, v, t) for the 6W5 three-term expansion: positive
    parameters in [0.1, 0.6], q in [0.25, 0.75], t in [0.05, 0.5] and u, v
    near the unit circle, kept only where q max(1, |eps/ad|) <= MAX_OUTER_RATIO.
    """
    for _ in range(MAX_DRAWS):
        q = float(rng.uniform(0.25, 0.75))
        values = tuple(float(v) for v in rng.uniform(0.1, 0.6, size=4))
        t = float(rng.uniform(0.05, 0.5))
        u, v = _point_on_ring(rng), _point_on_ring(rng)
        try:
            lam = ParamSet(values=values, q=q)
        except ValidationError:
            continue
        a, b, c, d = values
        eps = lam.epsilon
        ad, bc = a * d, b * c
        z = bc * u * v * t / q ** 2
        if abs(z) >= MAX_ARGUMENT or six_w_five_outer_ratio(lam) > MAX_OUTER_RATIO:
            continue
        denominators = [bc, ad, -q * t * eps, -q * eps / t, q * t * t, -t * eps / ad, -q * t / eps,
                        t / ad, ad / t, -eps / t, -eps, -ad / eps, -eps / ad, z, b * c * t * u / q,
                        b * c * t * v / q, u * eps * eps / q, v * eps * eps / q, eps * eps / (q * ad)]
        if _near_lattice(denominators, q):
            continue
        return {"q": q, "lam": lam, "u": u, "v": v, "t": t}
    raise ConstraintViolated("admissible 6W5 draw", f"none in {MAX_DRAWS} draws")


def sample_2phi1_point(rng: np.random.Generator) -> Dict[str, Any]:
    """Draw (q, u, v, t, b, c) for the 2phi1 to 2phi2 transformation."""
    for _ in range(MAX_DRAWS):
        q = float(rng.uniform(0.25, 0.75))
        b, c = (float(v) for v in rng.uniform(0.1, 0.7, size=2))
        t = float(rng.uniform(0.05, 0.5))
        u, v = _point_on_ring(rng), _point_on_ring(rng)
        bc = b * c
        z = bc * u * v * t / q ** 2
        if abs(z) >= MAX_ARGUMENT:
            continue
        if _near_lattice([bc, z, bc * t * u / q, bc * t * v / q], q):
            continue
        return {"q": q, "u": u, "v": v, "t": t, "b": b, "c": c}
    raise ConstraintViolated("admissible 2phi1 draw", f"none in {MAX_DRAWS} draws")
