"""
Tests for the pointwise Bernoulli residuals.
"""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from wavekit.field.spectral import norm_linf
from wavekit.models.base import ValidationError
from wavekit.models.params import PhysicalParams, TensionScale
from wavekit.relation.bernoulli import (
    bernoulli_assembled_multivalued,
    bernoulli_residual_irrotational,
    bernoulli_residual_multivalued,
    bernoulli_residual_rotational,
)
from wavekit.surface.manufactured import parametric_graph, reparameterize, standing_wave_state


class TestIrrotational:

    @pytest.mark.parametrize("sigma", [0.0, 0.07])
    def test_standing_wave_is_second_order(self, grid, sigma):
        params = PhysicalParams(sigma=sigma)
        big = norm_linf(bernoulli_residual_irrotational(standing_wave_state(1e-3, 0.4, grid, params), params))
        small = norm_linf(bernoulli_residual_irrotational(standing_wave_state(5e-4, 0.4, grid, params), params))
        assert big / small == pytest.approx(4.0, rel=0.05)

    def test_missing_potential_rate(self, grid, harmonic_state, flat_params):
        state = harmonic_state.with_fields(pot_t=None)
        with pytest.raises(ValidationError):
            bernoulli_residual_irrotational(state, flat_params)

    def test_tension_scale_choice(self, grid):
        state = standing_wave_state(0.01, 0.0, grid, PhysicalParams())
        scaled = PhysicalParams(sigma=0.2, rho=2.0)
        bare = PhysicalParams(sigma=0.2, rho=2.0, tension_scale=TensionScale.SIGMA)
        assert scaled.surface_tension_coefficient == pytest.approx(0.1)
        assert bare.surface_tension_coefficient == pytest.approx(0.2)
        gap = bernoulli_residual_irrotational(state, scaled).values - bernoulli_residual_irrotational(state, bare).values
        assert norm_linf(gap) > 0.0


class TestRotational:

    def test_zero_vorticity_matches_irrotational(self, harmonic_state, flat_params):
        assert_allclose(bernoulli_residual_rotational(harmonic_state, flat_params).values,
                        bernoulli_residual_irrotational(harmonic_state, flat_params).values, atol=1e-14)

    def test_vorticity_correction(self, harmonic, eta):
        state = harmonic.state(eta, 0.5)
        rotational = bernoulli_residual_rotational(state, PhysicalParams(gamma=0.5))
        irrotational = bernoulli_residual_irrotational(state, PhysicalParams(gamma=0.5))
        assert norm_linf(rotational.values - irrotational.values) > 1e-4


class TestMultivalued:

    @pytest.fixture
    def params(self):
        return PhysicalParams(gamma=0.5, sigma=0.1)

    def test_graph_matches_rotational(self, harmonic, eta, params):
        state = harmonic.state(eta, params.gamma)
        assert_allclose(bernoulli_residual_multivalued(parametric_graph(state), params).values,
                        bernoulli_residual_rotational(state, params).values, atol=1e-10)

    def test_closed_form_matches_assembled_traces(self, harmonic, eta, params):
        surface = reparameterize(parametric_graph(harmonic.state(eta, params.gamma)), 0.3)
        assert_allclose(bernoulli_residual_multivalued(surface, params).values,
                        bernoulli_assembled_multivalued(surface, params).values, atol=1e-10)

    def test_missing_xi_t(self, harmonic_state, params):
        surface = parametric_graph(harmonic_state.with_fields(pot_t=None))
        with pytest.raises(ValidationError):
            bernoulli_residual_multivalued(surface, params)
