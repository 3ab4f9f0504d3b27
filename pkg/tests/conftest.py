"""
Shared fixtures: the standard parameter set and a default truncation policy
"""

import pytest

from src.qcore.types import TruncationPolicy
from src.verify.quadrature import QuadratureConfig
from src.verify.standard import standard_kernel, standard_lambda, standard_mu


@pytest.fixture
def policy():
    return TruncationPolicy()


@pytest.fixture
def lam():
    """lambda = (0.4, 0.3, 0.2, 0.1) at q = 0.5."""
    return standard_lambda()


@pytest.fixture
def mu(lam):
    """mu = (0.32, 0.2, 0.25, 0.15), coupled to lambda."""
    return standard_mu(lam=lam)


@pytest.fixture
def kernel_params():
    return standard_kernel(0.3)


@pytest.fixture
def quadrature():
    return QuadratureConfig(panels=64, nodes_per_panel=16)
