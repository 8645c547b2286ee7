"""
Surface states: graph surfaces y = η(x,t) and parametric surfaces (X(λ,t), Y(λ,t))
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

import numpy as np

from ..field.grid import Grid
from ..field.spectral import Field, spectral_derivative
from ..models.base import CuspError, ValidationError

logger = logging.getLogger(__name__)

CUSP_THRESHOLD = 1e-12


@dataclass
class SurfaceState:
    """
    Collocated samples of the wave height and the surface potential.

    `pot` is q (irrotational) or ξ (rotational); `pot_t` is its time
    derivative, required only by the Bernoulli residuals.
    """

    grid: Grid
    eta: Field
    eta_t: Field
    pot: Field
    pot_t: Optional[Field] = None

    def __post_init__(self):
        for name in ("eta", "eta_t", "pot", "pot_t"):
            f = getattr(self, name)
            if f is None:
                continue
            if not isinstance(f, Field):
                raise ValidationError(f"{name} must be a Field, got {type(f).__name__}")
            if f.grid != self.grid:
                raise ValidationError(f"{name} is sampled on a different grid")
        if not self.eta.is_real:
            raise ValidationError("wave height must be real")

    @classmethod
    def rest(cls, grid: Grid) -> "SurfaceState":
        zero = Field.zeros(grid)
        return cls(grid, zero, zero.copy(), zero.copy(), zero.copy())

    def require_pot_t(self, operation: str) -> Field:
        if self.pot_t is None:
            raise ValidationError(f"{operation} needs the time derivative of the surface potential")
        return self.pot_t

    def check_layer(self, h0: float, bottom: Optional[np.ndarray] = None) -> None:
        """Fluid layer nondegenerate: η + h₀ + h > 0 with the bottom at y = -h₀ - h"""
        depth = self.eta.values + h0 + (0.0 if bottom is None else bottom)
        if np.min(depth) <= 0.0:
            raise ValidationError(
                "fluid layer degenerates (η + h₀ + h <= 0 somewhere)", [{"min_depth": float(np.min(depth))}]
            )

    def with_fields(self, **updates) -> "SurfaceState":
        values = {name: getattr(self, name) for name in ("eta", "eta_t", "pot", "pot_t")}
        values.update(updates)
        return SurfaceState(self.grid, **values)

    @property
    def eta_grad(self):
        return tuple(spectral_derivative(self.eta, a) for a in range(self.grid.dim))

    @property
    def pot_grad(self):
        return tuple(spectral_derivative(self.pot, a) for a in range(self.grid.dim))


@dataclass
class ParametricSurface:
    """
    Free surface embedded as (X(λ,t), Y(λ,t)) with the potential ξ(λ,t) along it.

    Dots denote λ-derivatives and are computed spectrally on `lambda_grid`.
    X usually carries a secular part (X = λ + periodic) so that the curve
    spans one horizontal period.
    """

    lambda_grid: Grid
    X: Field
    Y: Field
    X_t: Field
    Y_t: Field
    xi: Field
    xi_t: Optional[Field] = None
    cusp_threshold: float = field(default=CUSP_THRESHOLD)

    def __post_init__(self):
        if self.lambda_grid.dim != 1:
            raise ValidationError("parametric surfaces are curves: lambda_grid must be 1-D")
        for name in ("X", "Y", "X_t", "Y_t", "xi", "xi_t"):
            f = getattr(self, name)
            if f is not None and f.grid != self.lambda_grid:
                raise ValidationError(f"{name} is sampled on a different grid")

    @cached_property
    def Xd(self) -> np.ndarray:
        return spectral_derivative(self.X).values

    @cached_property
    def Yd(self) -> np.ndarray:
        return spectral_derivative(self.Y).values

    @cached_property
    def Xdd(self) -> np.ndarray:
        return spectral_derivative(self.X, order=2).values

    @cached_property
    def Ydd(self) -> np.ndarray:
        return spectral_derivative(self.Y, order=2).values

    @cached_property
    def xid(self) -> np.ndarray:
        return spectral_derivative(self.xi).values

    @cached_property
    def speed2(self) -> np.ndarray:
        """Ẋ² + Ẏ²"""
        return self.Xd ** 2 + self.Yd ** 2

    def check_immersion(self) -> None:
        m = float(np.min(self.speed2))
        if m < self.cusp_threshold:
            raise CuspError(m, self.cusp_threshold)

    def require_xi_t(self, operation: str) -> Field:
        if self.xi_t is None:
            raise ValidationError(f"{operation} needs ξ_t on the parametric surface")
        return self.xi_t

    @property
    def horizontal_period(self) -> float:
        """Horizontal extent swept by one period of λ (the secular part of X)"""
        return self.X.drift[0]
