"""
Tests for travelling-wave coefficients, soliton existence and closed-form profiles.

Validates:
- Derived coefficients α², β, μ, Δ
- Existence verdicts in both tension regimes and the κ thresholds
- Profiles solve the travelling-wave ODE, the second-order form and the PDE
- Symmetries map solutions to solutions
- Admission, blow-up and degeneracy errors
"""

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from wavekit.field.grid import make_grid
from wavekit.models.base import AdmissionError, BlowUpError, DegenerateCoefficientError, ValidationError
from wavekit.soliton.profiles import (
    GammaPoint,
    exponential_centre,
    exponential_profile,
    gamma_point,
    ode_residual,
    profile,
    reflection_shift,
    soliton2_residual,
    soliton_grid,
    symmetry_orbit,
    tail_bound,
    travelling_pde_residual,
)
from wavekit.soliton.spec import (
    Regime,
    SolitonFamily,
    SolitonSpec,
    admissible_speed_interval,
    classify,
    coefficients,
    kappa_threshold,
    solve_kappa_threshold,
)


@pytest.fixture(scope="module")
def high_grid():
    return soliton_grid(SolitonSpec(c=0.95, kappa=0.5, sigma_hat=0.4))


class TestCoefficients:

    def test_high_tension_values(self, high_tension_spec):
        s = 0.4 - 1.0 / 3.0
        spec = high_tension_spec
        assert spec.alpha2 == pytest.approx((1.0 - 0.95 ** 2) / s, rel=1e-12)
        assert spec.alpha2 == pytest.approx(1.4625, rel=1e-10)
        assert spec.beta == pytest.approx(7.48125, rel=1e-10)
        assert spec.mu == pytest.approx(7.5, rel=1e-10)
        assert spec.discriminant == pytest.approx(4 * 7.5 * 1.4625 + 7.48125 ** 2, rel=1e-10)
        assert spec.regime == Regime.SUBCRITICAL_HIGH_TENSION

    def test_low_tension_values(self, low_tension_spec):
        spec = low_tension_spec
        assert spec.alpha2 == pytest.approx(3.3, rel=1e-10)
        assert spec.beta == pytest.approx(7.2, rel=1e-10)
        assert spec.mu == pytest.approx(-3.75, rel=1e-10)
        assert spec.discriminant == pytest.approx(2.34, rel=1e-9)
        assert spec.regime == Regime.SUPERCRITICAL_LOW_TENSION

    def test_no_real_scale(self):
        spec = SolitonSpec(c=0.5, kappa=0.5, sigma_hat=0.2)
        assert spec.alpha is None
        assert spec.regime == Regime.NO_REAL_ALPHA
        with pytest.raises(ValidationError):
            spec.require_alpha()

    def test_dispersionless(self):
        with pytest.raises(DegenerateCoefficientError):
            coefficients(0.95, 0.5, 1.0 / 3.0)

    def test_spec_is_frozen(self, high_tension_spec):
        with pytest.raises(Exception):
            high_tension_spec.c = 0.5

    def test_reflection_flips_beta(self, high_tension_spec):
        reflected = high_tension_spec.reflected()
        assert reflected.beta == pytest.approx(-high_tension_spec.beta)
        assert reflected.alpha2 == pytest.approx(high_tension_spec.alpha2)
        assert high_tension_spec.flipped_alpha().alpha == pytest.approx(-high_tension_spec.alpha)


class TestExistence:

    def test_high_tension_admits_both(self):
        verdict = classify(0.95, 0.5, 0.4)
        assert verdict.summary == "both exist"
        assert verdict.exists(SolitonFamily.ELEVATED)
        assert verdict.regime == Regime.SUBCRITICAL_HIGH_TENSION

    def test_low_tension_depression_only(self):
        verdict = classify(1.2, 1.5, 0.2)
        assert verdict.summary == "depression only"
        assert "kappa_depression_min" in verdict.binding_inequalities

    def test_irrotational_elevated_below_sqrt_two(self):
        assert classify(1.2, 0.0, 0.2).summary == "elevated only"

    def test_irrotational_fast_waves_excluded(self):
        assert classify(2.0, 0.0, 0.2).summary == "neither exists"

    def test_no_real_scale(self):
        assert classify(0.5, 0.5, 0.2).summary == "neither exists"

    @pytest.mark.parametrize("family", ["elevated", "depression"])
    def test_threshold_closed_form_matches_root(self, family):
        closed = kappa_threshold(1.5, 0.2, family)
        assert solve_kappa_threshold(1.5, 0.2, family) == pytest.approx(closed, abs=1e-12)

    def test_thresholds_bracket_verdict(self):
        kappa_e = kappa_threshold(1.5, 0.2, "elevated")
        kappa_d = kappa_threshold(1.5, 0.2, "depression")
        assert classify(1.5, kappa_e - 0.01, 0.2).summary == "elevated only"
        assert classify(1.5, kappa_d + 0.01, 0.2).summary == "depression only"
        assert classify(1.5, 0.5 * (kappa_e + kappa_d), 0.2).summary == "neither exists"

    def test_threshold_domain(self):
        with pytest.raises(ValidationError):
            kappa_threshold(0.9, 0.2, "elevated")
        with pytest.raises(ValidationError):
            solve_kappa_threshold(1.5, 0.4, "depression")

    def test_speed_intervals(self):
        intervals = admissible_speed_interval(1.5, 0.2, "depression", c_max=10.0)
        assert len(intervals) == 1
        assert intervals[0][0] == pytest.approx(1.0 + 1e-9)
        assert intervals[0][1] == pytest.approx(10.0)

        elevated = admissible_speed_interval(0.0, 0.2, "elevated", c_max=3.0)
        assert len(elevated) == 1
        assert elevated[0][1] == pytest.approx(math.sqrt(2.0), abs=1e-10)

    def test_speed_interval_needs_low_tension(self):
        with pytest.raises(ValidationError):
            admissible_speed_interval(0.5, 0.4, "elevated")


class TestGammaPoint:

    def test_high_tension_points(self, high_tension_spec):
        up = gamma_point(high_tension_spec, "elevated")
        down = gamma_point(high_tension_spec, SolitonFamily.DEPRESSION)
        assert up.gamma1 == pytest.approx(-0.39098, abs=1e-5)
        assert up.gamma2 == pytest.approx(-1.33563, abs=1e-5)
        assert down.gamma2 == pytest.approx(1.33563, abs=1e-5)
        assert up.amplitude() == pytest.approx(1.1648968, abs=1e-6)
        assert down.amplitude() == pytest.approx(-0.16740, abs=1e-5)
        assert abs(up.manifold_residual(high_tension_spec)) < 1e-12

    def test_low_tension_depression(self, low_tension_spec):
        point = gamma_point(low_tension_spec, "depression")
        assert point.gamma2 > 0.0
        assert point.amplitude() < 0.0

    def test_rejected_family(self, low_tension_spec):
        with pytest.raises(AdmissionError) as info:
            gamma_point(low_tension_spec, "elevated")
        assert info.value.inequality == "sqrt(4*mu*alpha2 + beta^2) > beta"
        assert info.value.value < 0.0

    def test_zero_beta(self):
        with pytest.raises(DegenerateCoefficientError):
            gamma_point(SolitonSpec(c=0.0, kappa=0.5, sigma_hat=0.4), "elevated")

    def test_constant_solution_at_threshold(self):
        kappa = kappa_threshold(1.5, 0.2, "elevated")
        spec = SolitonSpec(c=1.5, kappa=kappa, sigma_hat=0.2)
        point = gamma_point(spec, "elevated")
        assert point.constant
        w = profile(make_grid(1, 10.0, 64), point, spec)
        assert_allclose(w.values, point.gamma1)
        assert ode_residual(w, spec) < 1e-9


class TestProfiles:

    @pytest.mark.parametrize("family", ["elevated", "depression"])
    def test_solves_travelling_ode(self, high_tension_spec, high_grid, family):
        w = profile(high_grid, gamma_point(high_tension_spec, family), high_tension_spec)
        assert ode_residual(w, high_tension_spec) < 1e-9
        assert soliton2_residual(w, high_tension_spec) < 1e-8

    def test_solves_slow_variable_equation(self, high_tension_spec, high_grid):
        up = gamma_point(high_tension_spec, "elevated")
        down = gamma_point(high_tension_spec, "depression")
        assert travelling_pde_residual(down, high_tension_spec, high_grid) < 1e-8
        assert travelling_pde_residual(up, high_tension_spec, high_grid) < 1e-5

    def test_low_tension_profile(self, low_tension_spec):
        point = gamma_point(low_tension_spec, "depression")
        grid = soliton_grid(low_tension_spec)
        w = profile(grid, point, low_tension_spec)
        assert ode_residual(w, low_tension_spec) < 1e-9
        assert w.values[grid.N[0] // 2] == pytest.approx(point.amplitude())

    def test_blow_up_branch(self, high_tension_spec, high_grid):
        with pytest.raises(BlowUpError) as info:
            profile(high_grid, GammaPoint(gamma1=1.0, gamma2=-0.5), high_tension_spec)
        assert info.value.alpha_z == pytest.approx(np.arccosh(2.0))

    def test_one_dimensional_only(self, high_tension_spec):
        point = gamma_point(high_tension_spec, "elevated")
        with pytest.raises(ValidationError):
            profile(make_grid(2, 4.0, 16), point, high_tension_spec)

    @pytest.mark.parametrize("family", ["elevated", "depression"])
    def test_exponential_form_is_shifted_profile(self, high_tension_spec, high_grid, family):
        z = high_grid.axis(0)
        w = profile(high_grid, gamma_point(high_tension_spec, family), high_tension_spec)
        shifted = exponential_profile(z + exponential_centre(high_tension_spec), high_tension_spec, family)
        assert_allclose(shifted, w.values, rtol=1e-10, atol=1e-14)

    def test_reflection_shift(self, high_tension_spec):
        z = np.linspace(-5.0, 5.0, 41)
        forward = exponential_profile(z, high_tension_spec, "elevated")
        mirrored = exponential_profile(reflection_shift(high_tension_spec) - z, high_tension_spec, "elevated")
        assert_allclose(mirrored, forward, rtol=1e-10, atol=1e-14)

    def test_tail_bound(self, high_tension_spec):
        point = gamma_point(high_tension_spec, "elevated")
        alpha = high_tension_spec.alpha
        z = np.linspace(2.0, 30.0, 50) / alpha
        w = point.gamma1 / (1.0 + point.gamma2 * np.cosh(alpha * z))
        assert np.all(np.abs(w) <= tail_bound(z, point, high_tension_spec) * (1.0 + 1e-12))
        assert np.isinf(tail_bound(0.0, point, high_tension_spec))


class TestSymmetries:

    @pytest.fixture
    def elevated(self, high_tension_spec, high_grid):
        return profile(high_grid, gamma_point(high_tension_spec, "elevated"), high_tension_spec)

    @pytest.mark.parametrize("which", ["G1", "G2", "G3", "g4"])
    def test_orbit_stays_on_solutions(self, elevated, high_tension_spec, which):
        w, spec = symmetry_orbit(elevated, high_tension_spec, which, shift=0.7)
        assert ode_residual(w, spec) < 1e-9

    def test_negation_pairs_with_reflected_speed(self, elevated, high_tension_spec):
        w, spec = symmetry_orbit(elevated, high_tension_spec, "G1")
        assert spec.c == pytest.approx(-0.95)
        assert np.min(w.values) == pytest.approx(-1.1648968, abs=1e-6)
        # without reflecting (c, κ) the negated profile is not a solution
        assert ode_residual(w, high_tension_spec) > 1e-3

    def test_unknown_symmetry(self, elevated, high_tension_spec):
        with pytest.raises(ValidationError, match="unknown symmetry"):
            symmetry_orbit(elevated, high_tension_spec, "G5")
