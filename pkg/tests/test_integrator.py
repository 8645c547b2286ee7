"""
Tests for implicit midpoint time stepping of the hierarchy.
"""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from wavekit.field.grid import make_grid
from wavekit.field.spectral import Field
from wavekit.hierarchy.integrator import ImplicitMidpoint, evolve, hierarchy_stepper, step
from wavekit.hierarchy.order import HierarchyState
from wavekit.models.base import ConvergenceError, ValidationError
from wavekit.models.params import DimensionlessParams


@pytest.fixture
def long_grid():
    return make_grid(1, 8.0 * np.pi, 256)


@pytest.fixture
def pulse(long_grid):
    eta = Field.from_function(long_grid, lambda x: 0.5 / np.cosh(x) ** 2)
    return HierarchyState(eta, Field.zeros(long_grid))


@pytest.fixture
def params():
    return DimensionlessParams(eps=0.1, delta=0.1, gamma=1.0)


class TestLinearFlow:

    def test_quadratic_energy_conserved(self, pulse, params):
        traj = evolve(pulse, "00", params, dt=0.05, steps=200)
        assert traj.relative_drift < 1e-10
        assert traj.final.t == pytest.approx(10.0)

    def test_single_mode_phase(self, grid, params):
        eta = Field.from_function(grid, lambda x: 0.1 * np.cos(x))
        traj = evolve(HierarchyState(eta, Field.zeros(grid)), "00", params, dt=0.01, steps=100)
        x = grid.axis(0)
        assert_allclose(traj.final.eta.values, 0.1 * np.cos(x) * np.cos(1.0), atol=1e-5)
        assert_allclose(traj.final.xi.values, -0.1 * np.cos(x) * np.sin(1.0), atol=1e-5)


class TestNonlinearFlow:

    def test_time_reversible(self, pulse, params):
        forward = step(pulse, "11", params, 0.01)
        back = step(forward, "11", params, -0.01)
        assert_allclose(back.eta.values, pulse.eta.values, atol=1e-10)
        assert_allclose(back.xi.values, pulse.xi.values, atol=1e-10)
        assert back.t == pytest.approx(0.0, abs=1e-15)

    def test_hamiltonian_drift_small(self, pulse, params):
        traj = evolve(pulse, "11", params, dt=0.005, steps=100)
        assert traj.relative_drift < 1e-6

    @pytest.mark.slow
    @pytest.mark.parametrize("order", ["00", "10", "11", "02", "12"])
    def test_long_run_drift_every_order(self, pulse, params, order):
        traj = evolve(pulse, order, params, dt=0.01, steps=1000, energy_every=10)
        assert traj.final.t == pytest.approx(10.0)
        assert traj.relative_drift < 1e-6

    def test_snapshots(self, pulse, params):
        traj = evolve(pulse, "10", params, dt=0.01, steps=6, snapshot_every=2)
        assert len(traj.snapshots) == 4
        assert len(traj.energies) == 7
        assert traj.order == "10"
        kept = evolve(pulse, "10", params, dt=0.01, steps=6)
        assert len(kept.snapshots) == 2


class TestStepperErrors:

    def test_zero_step(self, pulse, params):
        with pytest.raises(ValidationError):
            step(pulse, "00", params, 0.0)

    def test_needs_steps(self, pulse, params):
        with pytest.raises(ValidationError):
            evolve(pulse, "00", params, dt=0.01, steps=0)

    def test_iteration_cap(self, pulse, params):
        stepper = hierarchy_stepper(pulse.grid, "10", params, max_iter=1)
        with pytest.raises(ConvergenceError):
            step(pulse, "10", params, 0.01, stepper)

    def test_generic_pair(self, grid):
        # harmonic oscillator per mode: u_t = v, v_t = -u
        ones = np.ones(grid.N[0])
        stepper = ImplicitMidpoint(grid, ones, ones, lambda u, v: (v.copy(), Field(grid, -u.values)))
        u = Field.from_function(grid, np.cos)
        v = Field.zeros(grid)
        for _ in range(10):
            u, v = stepper.step(u, v, 0.1)
        energy = np.sum(u.values ** 2 + v.values ** 2)
        assert energy == pytest.approx(np.sum(np.cos(grid.axis(0)) ** 2), rel=1e-12)
        assert stepper.last_iterations <= 2
