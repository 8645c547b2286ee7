"""
Tests for the Γ manifold geometry and the parameter-sweep atlas.
"""

import math

import numpy as np
import pytest

from wavekit.models.base import ValidationError
from wavekit.soliton.atlas import (
    ATLAS_COLUMNS,
    Topology,
    atlas_row,
    bifurcation_points,
    component_label,
    gamma_manifold_atlas,
    manifold_topology,
    sample_manifold,
    speed_sweep,
)
from wavekit.soliton.profiles import gamma_point
from wavekit.soliton.spec import SolitonSpec


@pytest.fixture
def no_scale_spec():
    return SolitonSpec(c=0.5, kappa=0.5, sigma_hat=0.2)


class TestTopology:

    def test_high_tension_hyperbola(self, high_tension_spec):
        assert manifold_topology(high_tension_spec) == Topology.HYPERBOLA
        assert bifurcation_points(high_tension_spec) == [(0.0, 1.0), (0.0, -1.0)]

    def test_low_tension_circle(self, low_tension_spec):
        assert manifold_topology(low_tension_spec) == Topology.CIRCLE
        points = bifurcation_points(low_tension_spec)
        assert len(points) == 4
        m = low_tension_spec.mu_over_alpha2
        for g1, g2 in points:
            assert g2 ** 2 - m * g1 ** 2 == pytest.approx(1.0, abs=1e-12)

    def test_no_manifold(self, no_scale_spec):
        assert manifold_topology(no_scale_spec) == Topology.NONE
        assert bifurcation_points(no_scale_spec) == []
        with pytest.raises(ValidationError):
            component_label(0.1, 1.0, no_scale_spec)


class TestLabels:

    def test_hyperbola_families(self, high_tension_spec):
        up = gamma_point(high_tension_spec, "elevated")
        down = gamma_point(high_tension_spec, "depression")
        assert component_label(up.gamma1, up.gamma2, high_tension_spec) == "elevated"
        assert component_label(down.gamma1, down.gamma2, high_tension_spec) == "depression"
        assert component_label(0.0, 1.0, high_tension_spec) == "bifurcation"

    def test_circle_families(self, low_tension_spec):
        down = gamma_point(low_tension_spec, "depression")
        assert component_label(down.gamma1, down.gamma2, low_tension_spec) == "depression"
        assert component_label(0.5, -0.5, low_tension_spec) == "unphysical"


class TestSampling:

    def test_hyperbola_samples(self, high_tension_spec):
        samples = sample_manifold(high_tension_spec, count=64)
        assert len(samples) == 64
        assert all(abs(s.point().manifold_residual(high_tension_spec)) < 1e-11 for s in samples)
        assert {s.label for s in samples} <= {"elevated", "depression", "bifurcation"}
        assert {"elevated", "depression"} <= {s.label for s in samples}

    def test_circle_samples(self, low_tension_spec):
        samples = sample_manifold(low_tension_spec, count=16)
        assert len(samples) == 16
        assert all(abs(s.point().manifold_residual(low_tension_spec)) < 1e-12 for s in samples)
        labels = {s.label for s in samples}
        assert "unphysical" in labels
        assert "bifurcation" in labels

    def test_needs_two_samples(self, high_tension_spec):
        with pytest.raises(ValidationError):
            sample_manifold(high_tension_spec, count=1)


class TestAtlas:

    def test_row_for_high_tension(self, high_tension_spec):
        row = atlas_row(high_tension_spec)
        assert row.verdict == "both exist"
        assert row.topology == "hyperbola"
        assert row.gamma2 == pytest.approx(math.sqrt(high_tension_spec.discriminant) / high_tension_spec.beta)
        assert row.gamma2 > 0.0
        assert len(row.to_row()) == len(ATLAS_COLUMNS)

    def test_row_without_real_scale(self, no_scale_spec):
        row = atlas_row(no_scale_spec)
        assert row.verdict == "neither exists"
        assert row.gamma1 is None
        assert np.isnan(row.to_row()[-1])

    def test_sweep_keeps_order(self):
        specs = speed_sweep(0.1, 0.99, 12, kappa=0.5, sigma_hat=0.4)
        serial = gamma_manifold_atlas(specs, workers=1)
        threaded = gamma_manifold_atlas(specs, workers=4)
        assert [r.c for r in threaded] == [r.c for r in serial]
        assert threaded == serial
        assert all(r.verdict == "both exist" for r in serial)

    def test_sweep_across_the_critical_speed(self):
        rows = gamma_manifold_atlas(speed_sweep(1.05, 3.0, 20, kappa=0.0, sigma_hat=0.2))
        elevated = [r.c for r in rows if r.elevated_exists]
        assert elevated
        assert max(elevated) < math.sqrt(2.0)
        assert not any(r.depression_exists for r in rows)

    def test_sweep_needs_a_speed(self):
        with pytest.raises(ValidationError):
            speed_sweep(0.1, 0.9, 0, kappa=0.5, sigma_hat=0.4)
