"""
Physical and dimensionless parameter sets

PhysicalParams carries the dimensional constants of the free-surface problem
(gravity, depth, surface tension, density, vorticity) plus an optional bottom
perturbation. DimensionlessParams carries the small parameters of the long-wave
hierarchy. `nondimensionalize` maps the first onto the second.
"""

import math
from enum import Enum
from typing import Any, Optional

import numpy as np
from pydantic import Field, field_validator, model_validator

from .base import BaseWaveModel, ValidationError


class TensionScale(str, Enum):
    """Which surface-tension coefficient multiplies the curvature terms"""

    SIGMA_OVER_RHO = "sigma_over_rho"  # σ/ρ, as in the irrotational Bernoulli condition
    SIGMA = "sigma"                    # bare σ, as printed in the rotational section


class PhysicalParams(BaseWaveModel):
    """Dimensional constants of the water-wave problem"""

    g: float = Field(9.81, gt=0, description="Gravitational acceleration (length/time²)")
    h0: float = Field(1.0, gt=0, description="Mean depth (length)")
    sigma: float = Field(0.0, ge=0, description="Surface tension")
    rho: float = Field(1.0, gt=0, description="Density")
    gamma: float = Field(0.0, description="Constant vorticity (1/time)")
    tension_scale: TensionScale = Field(
        TensionScale.SIGMA_OVER_RHO, description="Coefficient used in front of the curvature terms"
    )
    bottom: Optional[Any] = Field(
        None, exclude=True, description="Bottom perturbation h(x) as a Field; bottom is y = -h0 - h(x)"
    )

    class Config:
        arbitrary_types_allowed = True

    @field_validator("bottom")
    @classmethod
    def _bottom_is_field(cls, v: Any) -> Any:
        if v is None:
            return v
        from ..field.spectral import Field as GridField

        if not isinstance(v, GridField):
            raise ValueError("bottom must be a wavekit Field or None")
        if not v.is_real:
            raise ValueError("bottom perturbation must be real")
        return v

    @property
    def surface_tension_coefficient(self) -> float:
        if self.tension_scale == TensionScale.SIGMA.value:
            return self.sigma
        return self.sigma / self.rho

    @property
    def flat_bottom(self) -> bool:
        return self.bottom is None or not np.any(self.bottom.values)

    def bottom_values(self, grid) -> np.ndarray:
        """h(x) sampled on `grid`, zeros for a flat bottom"""
        if self.bottom is None:
            return np.zeros(grid.shape)
        if self.bottom.grid != grid:
            raise ValidationError("bottom perturbation lives on a different grid")
        return self.bottom.values

    def require_flat_bottom(self, operation: str) -> None:
        if not self.flat_bottom:
            raise ValidationError(f"{operation} requires a flat bottom (h ≡ 0)")


class DimensionlessParams(BaseWaveModel):
    """Small parameters and scaled constants of the long-wave hierarchy"""

    eps: float = Field(0.1, gt=0, lt=1, description="Amplitude ratio a/h")
    delta: float = Field(0.1, gt=0, lt=1, description="Depth ratio h/ℓ")
    gamma: float = Field(0.0, description="Dimensionless vorticity")
    sigma_hat: float = Field(0.0, ge=0, description="Dimensionless surface tension σ/(g h²)")
    kappa_vort: Optional[float] = Field(None, description="Vorticity product γδ, O(1) in the large-vorticity scaling")
    cubic: float = Field(1.0 / 3.0, description="Coefficient of ξ_X²ξ_XX in the long-wave equations")

    @model_validator(mode="before")
    @classmethod
    def _derive_kappa(cls, data: Any) -> Any:
        if isinstance(data, dict) and data.get("kappa_vort") is None:
            data = dict(data)
            data["kappa_vort"] = float(data.get("gamma", 0.0)) * float(data.get("delta", 0.1))
        return data

    @property
    def dispersion(self) -> float:
        """σ̂ − ⅓"""
        return self.sigma_hat - 1.0 / 3.0


def nondimensionalize(params: PhysicalParams, amplitude: float, wavelength: float) -> DimensionlessParams:
    """
    Scale a dimensional parameter set by a typical amplitude and wavelength.

    Args:
        params: dimensional constants
        amplitude: typical wave amplitude a
        wavelength: typical horizontal length scale ℓ

    Returns:
        DimensionlessParams with ε = a/h₀, δ = h₀/ℓ, σ̂ = (σ/ρ)/(g h₀²),
        γ scaled by ℓ/√(g h₀) and κ = γδ
    """
    if amplitude <= 0 or wavelength <= 0:
        raise ValidationError(
            "amplitude and wavelength must be positive", [{"amplitude": amplitude, "wavelength": wavelength}]
        )
    h0 = params.h0
    gamma_hat = params.gamma * wavelength / math.sqrt(params.g * h0)
    delta = h0 / wavelength
    return DimensionlessParams(
        eps=amplitude / h0,
        delta=delta,
        gamma=gamma_hat,
        sigma_hat=params.surface_tension_coefficient / (params.g * h0 ** 2),
        kappa_vort=gamma_hat * delta,
    )
