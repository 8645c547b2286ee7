"""
Tests for the nonlocal global-relation residuals.

Manufactured harmonic flows satisfy every relation exactly, so their
residuals must vanish at spectral accuracy. Perturbed states exercise the
reductions between the relations.
"""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from wavekit.field.grid import make_grid
from wavekit.field.spectral import Field
from wavekit.models.base import CuspError, OverflowGuardError, ValidationError
from wavekit.models.params import PhysicalParams
from wavekit.relation.residuals import (
    flat_bottom_residual,
    irrotational_residuals,
    map_ordered,
    multivalued_residual,
    rotational_residual,
    scaled_cosh,
    scaled_sinh,
)
from wavekit.surface.manufactured import (
    HarmonicMode,
    StreamlineBottomFlow,
    harmonic_modes,
    parametric_graph,
    reparameterize,
)
from wavekit.surface.state import ParametricSurface

TOL = 1e-10


@pytest.fixture
def ks(grid):
    return grid.lattice_modes(8)


@pytest.fixture
def perturbed_state(grid, harmonic_state):
    """Harmonic state whose η_t no longer matches the flow"""
    bump = 0.01 * np.cos(grid.axis(0))
    return harmonic_state.with_fields(eta_t=Field(grid, harmonic_state.eta_t.values + bump))


class TestScaledHyperbolics:

    def test_match_direct_evaluation(self):
        arg = np.linspace(0.5, 1.5, 7)
        kappa, M = 3.0, 1.5
        assert_allclose(scaled_cosh(kappa, arg, M), np.exp(-kappa * M) * np.cosh(kappa * arg), rtol=1e-13)
        assert_allclose(scaled_sinh(kappa, arg, M), np.exp(-kappa * M) * np.sinh(kappa * arg), rtol=1e-13)

    def test_no_overflow_at_large_kappa(self):
        values = scaled_cosh(45.0, np.array([1.05]), 1.05)
        assert np.all(np.isfinite(values))
        assert values[0] == pytest.approx(0.5, rel=1e-12)


class TestFlatBottom:

    def test_manufactured_flow_vanishes(self, harmonic_state, flat_params, ks):
        report = flat_bottom_residual(harmonic_state, flat_params, ks)
        assert len(report.k_values) == 17
        assert report.sup_norm < TOL

    def test_superposition_vanishes(self, grid, eta, flat_params, ks):
        flow = harmonic_modes(grid, [1.0, 2.0, 3.0], [0.5, 0.2, 0.1])
        report = flat_bottom_residual(flow.state(eta), flat_params, ks)
        assert report.sup_norm < TOL

    def test_perturbation_is_detected(self, perturbed_state, flat_params, ks):
        report = flat_bottom_residual(perturbed_state, flat_params, ks)
        assert report.sup_norm > 1e-4

    def test_requires_flat_bottom(self, grid, eta, ks):
        flow = StreamlineBottomFlow(grid, k0=1.0, amplitude=0.05, current=1.0)
        with pytest.raises(ValidationError, match="flat bottom"):
            flat_bottom_residual(flow.state(eta), flow.params(), ks)

    def test_off_lattice_wavenumber(self, harmonic_state, flat_params):
        with pytest.raises(ValidationError):
            flat_bottom_residual(harmonic_state, flat_params, [(0.5,)])

    def test_overflow_guard(self, harmonic_state, flat_params):
        with pytest.raises(OverflowGuardError):
            flat_bottom_residual(harmonic_state, flat_params, [(60.0,)])

    def test_custom_guard_allows_large_k(self, harmonic_state, flat_params):
        report = flat_bottom_residual(harmonic_state, flat_params, [(60.0,)], kappa_max=100.0)
        assert np.isfinite(report.sup_norm)

    def test_threaded_evaluation_keeps_order(self, harmonic_state, flat_params, ks):
        serial = flat_bottom_residual(harmonic_state, flat_params, ks, workers=1)
        threaded = flat_bottom_residual(harmonic_state, flat_params, ks, workers=4)
        assert threaded.k_values == serial.k_values
        assert_allclose(threaded.residuals, serial.residuals, rtol=0, atol=0)


class TestIrrotationalPair:

    def test_flat_bottom_flow(self, harmonic, harmonic_state, flat_params, ks):
        first, second = irrotational_residuals(harmonic_state, harmonic.bottom_potential(), flat_params, ks)
        assert first.sup_norm < TOL
        assert second.sup_norm < TOL

    def test_streamline_bottom_flow(self, grid, eta, ks):
        flow = StreamlineBottomFlow(grid, k0=1.0, amplitude=0.05, current=1.0)
        params = flow.params()
        assert not params.flat_bottom
        first, second = irrotational_residuals(flow.state(eta), flow.bottom_potential(), params, ks)
        assert first.sup_norm < 1e-9
        assert second.sup_norm < 1e-9

    def test_wrong_bottom_potential_detected(self, grid, harmonic_state, flat_params, ks):
        wrong = Field.from_function(grid, lambda x: 0.5 * np.cos(x))
        first, _ = irrotational_residuals(harmonic_state, wrong, flat_params, ks)
        assert first.sup_norm > 1e-4

    def test_two_dimensional_surface(self):
        grid = make_grid(2, np.pi, 32)
        flow = HarmonicMode(grid, (1.0, 1.0), amplitude=0.5)
        eta = Field.from_function(grid, lambda x, y: 0.03 * np.cos(x) * np.cos(y))
        modes = grid.lattice_modes(2)
        first, second = irrotational_residuals(flow.state(eta), flow.bottom_potential(), PhysicalParams(), modes)
        assert len(first.k_values) == 25
        assert first.sup_norm < 1e-9
        assert second.sup_norm < 1e-9


class TestRotational:

    def test_manufactured_flow_vanishes(self, harmonic, eta, ks):
        gamma = 0.7
        state = harmonic.state(eta, gamma)
        report = rotational_residual(state, PhysicalParams(gamma=gamma), ks)
        assert report.sup_norm < TOL

    def test_reduces_to_flat_bottom_relation(self, perturbed_state, flat_params, ks):
        rotational = rotational_residual(perturbed_state, flat_params, ks)
        flat = flat_bottom_residual(perturbed_state, flat_params, ks)
        for (k,) in ks:
            if k == 0.0:
                continue
            expected = 1j / abs(k) * flat.value_at(k)
            assert rotational.value_at(k) == pytest.approx(expected, abs=1e-12)

    def test_vorticity_mismatch_detected(self, harmonic, eta, ks):
        state = harmonic.state(eta, 0.7)
        report = rotational_residual(state, PhysicalParams(gamma=0.0), ks)
        assert report.sup_norm > 1e-5


class TestMultivalued:

    def test_graph_matches_rotational(self, perturbed_state, ks):
        params = PhysicalParams(gamma=0.4)
        floats = [k[0] for k in ks]
        multivalued = multivalued_residual(parametric_graph(perturbed_state), params, floats)
        rotational = rotational_residual(perturbed_state, params, ks)
        assert_allclose(multivalued.residuals, rotational.residuals, atol=1e-11)

    def test_reparameterization_invariance(self, harmonic, eta, ks):
        gamma = 0.7
        params = PhysicalParams(gamma=gamma)
        surface = reparameterize(parametric_graph(harmonic.state(eta, gamma)), 0.3)
        report = multivalued_residual(surface, params, [k[0] for k in ks])
        assert report.sup_norm < 1e-9

    def test_period_incompatible_wavenumber(self, harmonic_state, flat_params):
        with pytest.raises(ValidationError, match="horizontal period"):
            multivalued_residual(parametric_graph(harmonic_state), flat_params, [0.5])

    def test_cusp_rejected(self, grid, flat_params):
        zero = Field.zeros(grid)
        surface = ParametricSurface(grid, zero, zero, zero, zero, zero, zero)
        with pytest.raises(CuspError):
            multivalued_residual(surface, flat_params, [1.0])


class TestMapOrdered:

    def test_preserves_order(self):
        assert map_ordered(lambda v: v * v, range(10), workers=3) == [v * v for v in range(10)]
