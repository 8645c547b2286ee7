"""
Tests for surface states and the recovery of interior velocity traces.
"""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from wavekit.field.grid import make_grid
from wavekit.field.spectral import Field, interpolate, spectral_derivative
from wavekit.models.base import CuspError, ValidationError
from wavekit.surface.kinematics import (
    bottom_potential_gradient,
    curvature_term,
    normal_velocity_relation,
    recover_gradient_irrotational,
    recover_gradient_rotational,
    recover_multivalued,
    surface_tension_term,
)
from wavekit.surface.manufactured import StreamlineBottomFlow, parametric_graph, reparameterize
from wavekit.surface.state import ParametricSurface, SurfaceState


class TestSurfaceState:

    def test_fields_must_share_grid(self, grid, eta):
        other = make_grid(1, np.pi, 128)
        with pytest.raises(ValidationError, match="different grid"):
            SurfaceState(grid, eta, Field.zeros(grid), Field.zeros(other))

    def test_wave_height_must_be_real(self, grid):
        complex_eta = Field(grid, np.zeros(grid.shape, dtype=complex))
        with pytest.raises(ValidationError, match="real"):
            SurfaceState(grid, complex_eta, Field.zeros(grid), Field.zeros(grid))

    def test_degenerate_layer(self, grid):
        deep = Field(grid, np.full(grid.shape, -2.0))
        state = SurfaceState(grid, deep, Field.zeros(grid), Field.zeros(grid))
        with pytest.raises(ValidationError, match="degenerates"):
            state.check_layer(1.0)

    def test_missing_potential_rate(self, grid, eta):
        state = SurfaceState(grid, eta, Field.zeros(grid), Field.zeros(grid))
        with pytest.raises(ValidationError):
            state.require_pot_t("bernoulli")

    def test_rest_state(self, grid):
        state = SurfaceState.rest(grid)
        assert not np.any(state.eta.values)
        assert state.pot_t is not None


class TestGradientRecovery:

    def test_irrotational_traces(self, harmonic, harmonic_state, eta):
        _, phi_h, phi_y = harmonic.traces(eta)
        (phi_x,), recovered_y = recover_gradient_irrotational(harmonic_state)
        assert_allclose(phi_x.values, phi_h[0], atol=1e-10)
        assert_allclose(recovered_y.values, phi_y, atol=1e-10)

    def test_rotational_traces(self, harmonic, eta):
        gamma = 0.7
        state = harmonic.state(eta, gamma)
        _, phi_h, phi_y = harmonic.traces(eta)
        phi_x, recovered_y = recover_gradient_rotational(state, gamma)
        assert_allclose(phi_x.values, phi_h[0], atol=1e-10)
        assert_allclose(recovered_y.values, phi_y, atol=1e-10)

    def test_rotational_needs_one_horizontal_dimension(self):
        grid = make_grid(2, np.pi, 16)
        with pytest.raises(ValidationError):
            recover_gradient_rotational(SurfaceState.rest(grid), 1.0)

    def test_parametric_graph_traces(self, harmonic, eta):
        gamma = 0.4
        state = harmonic.state(eta, gamma)
        _, phi_h, phi_y = harmonic.traces(eta)
        phi_x, recovered_y, phi_t = recover_multivalued(parametric_graph(state), gamma)
        assert_allclose(phi_x.values, phi_h[0], atol=1e-10)
        assert_allclose(recovered_y.values, phi_y, atol=1e-10)
        # the manufactured potential is steady
        assert_allclose(phi_t.values, 0.0, atol=1e-10)

    def test_reparameterized_traces(self, grid, harmonic, eta):
        gamma = 0.4
        state = harmonic.state(eta, gamma)
        graph = parametric_graph(state)
        warped = reparameterize(graph, 0.3)
        phi_x, _, _ = recover_multivalued(warped, gamma)
        expected = interpolate(Field(grid, harmonic.traces(eta)[1][0]), warped.X.values)
        assert_allclose(phi_x.values, expected, atol=1e-9)

    def test_cusp_detected(self, grid):
        zero = Field.zeros(grid)
        flat = ParametricSurface(grid, zero, zero, zero, zero, zero, zero)
        with pytest.raises(CuspError):
            recover_multivalued(flat, 0.0)

    def test_warp_must_be_monotone(self, harmonic_state):
        with pytest.raises(ValidationError):
            reparameterize(parametric_graph(harmonic_state), 1.0)


def _smooth(grid, rng, modes=4):
    x = grid.axis(0)
    coef = rng.standard_normal((modes, 2))
    return sum((a * np.cos(m * x) + b * np.sin(m * x)) / m ** 2 for m, (a, b) in enumerate(coef, start=1))


class TestOverturningSurface:
    """X(λ) = λ - 1.5 sin λ runs backwards near λ = 0, so the curve is not a graph"""

    @pytest.fixture
    def surface(self, grid):
        rng = np.random.default_rng(7)
        lam = grid.axis(0)
        return ParametricSurface(
            grid,
            X=Field(grid, lam - 1.5 * np.sin(lam), drift=(2.0 * np.pi,)),
            Y=Field(grid, 0.3 * np.cos(lam)),
            X_t=Field(grid, 0.2 * _smooth(grid, rng)),
            Y_t=Field(grid, 0.2 * _smooth(grid, rng)),
            xi=Field(grid, _smooth(grid, rng)),
            xi_t=Field(grid, _smooth(grid, rng)),
        )

    def test_surface_overturns(self, surface):
        assert np.min(surface.Xd) < -0.4
        surface.check_immersion()

    @pytest.mark.parametrize("gamma", [0.0, 0.7])
    def test_traces_solve_kinematic_system(self, surface, gamma):
        phi_x, phi_y, phi_t = recover_multivalued(surface, gamma)
        Xd, Yd = surface.Xd, surface.Yd
        # tangential chain rule
        assert_allclose(Xd * phi_x.values + Yd * phi_y.values, surface.xid, atol=1e-11)
        # normal velocity of the curve
        R = Xd * surface.Y_t.values - Yd * surface.X_t.values - gamma * surface.Y.values * Yd
        assert_allclose(normal_velocity_relation(surface, gamma), R, atol=1e-13)
        assert_allclose(Xd * phi_y.values - Yd * phi_x.values, R, atol=1e-11)
        # time derivative following the parameterization
        lhs = phi_t.values + phi_x.values * surface.X_t.values + phi_y.values * surface.Y_t.values
        assert_allclose(lhs, surface.xi_t.values, atol=1e-11)


class TestBottomGradient:

    def test_streamline_bottom(self, grid):
        flow = StreamlineBottomFlow(grid, k0=1.0, amplitude=0.05, current=1.0)
        h = flow.bottom()
        assert np.max(np.abs(h.values)) > 0.05
        _, phi_h, phi_y = flow.evaluate(grid.nodes, flow.bottom_y)
        dq = bottom_potential_gradient((Field(grid, phi_h[0]),), Field(grid, phi_y), h)
        expected = spectral_derivative(flow.bottom_potential())
        assert_allclose(dq[0].values, expected.values, atol=1e-10)

    def test_flat_bottom_is_horizontal_gradient(self, grid):
        phi_x = Field.from_function(grid, np.sin)
        dq = bottom_potential_gradient((phi_x,), Field.from_function(grid, np.cos), Field.zeros(grid))
        assert_allclose(dq[0].values, phi_x.values)


class TestCurvature:

    def test_zero_tension(self, eta):
        assert not np.any(surface_tension_term(eta, 0.0).values)

    def test_small_slope_limit(self, grid):
        a = 1e-4
        eta = Field.from_function(grid, lambda x: a * np.cos(x))
        expected = -0.2 * a * np.cos(grid.axis(0))
        assert_allclose(surface_tension_term(eta, 0.2).values, expected, atol=1e-12)

    def test_density_scaling(self, eta):
        assert_allclose(surface_tension_term(eta, 0.2, rho=2.0).values,
                        0.5 * surface_tension_term(eta, 0.2).values, atol=1e-14)

    def test_parametric_curvature_matches_graph(self, harmonic_state):
        graph = parametric_graph(harmonic_state)
        assert_allclose(curvature_term(graph, 0.3).values,
                        surface_tension_term(harmonic_state.eta, 0.3).values, atol=1e-10)

    def test_graph_slope(self, harmonic_state):
        graph = parametric_graph(harmonic_state)
        assert_allclose(graph.Yd, spectral_derivative(harmonic_state.eta).values, atol=1e-14)
        assert graph.horizontal_period == pytest.approx(2.0 * np.pi)
