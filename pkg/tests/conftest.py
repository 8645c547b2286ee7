"""Shared fixtures for the wavekit test suite."""

import numpy as np
import pytest

from wavekit.field.grid import make_grid
from wavekit.field.spectral import Field
from wavekit.models.params import PhysicalParams
from wavekit.soliton.spec import SolitonSpec
from wavekit.surface.manufactured import HarmonicMode


@pytest.fixture
def grid():
    """One period [-π, π) with 256 nodes"""
    return make_grid(1, np.pi, 256)


@pytest.fixture
def eta(grid):
    return Field.from_function(grid, lambda x: 0.05 * np.cos(2.0 * x))


@pytest.fixture
def harmonic(grid):
    return HarmonicMode(grid, (1.0,), amplitude=1.0, h0=1.0)


@pytest.fixture
def harmonic_state(harmonic, eta):
    return harmonic.state(eta)


@pytest.fixture
def flat_params():
    return PhysicalParams(h0=1.0)


@pytest.fixture
def high_tension_spec():
    """c = 0.95, κ = 0.5, σ̂ = 0.4: hyperbola, both families admitted"""
    return SolitonSpec(c=0.95, kappa=0.5, sigma_hat=0.4)


@pytest.fixture
def low_tension_spec():
    """c = 1.2, κ = 1.5, σ̂ = 0.2: circle, depression only"""
    return SolitonSpec(c=1.2, kappa=1.5, sigma_hat=0.2)
