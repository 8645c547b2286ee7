"""
Surface kinematics: recovery of the interior velocity traces on the free surface

Given the wave height, its time derivative and the surface potential, the
chain rule and the kinematic condition form a nonsingular linear system for
the traces of ∇φ. The rotational case uses the pseudo-potential (u = φ_x - γy,
v = φ_y); the parametric case works along a curve (X(λ), Y(λ)).
"""

import logging
from typing import Sequence, Tuple

import numpy as np

from ..field.spectral import Field, divergence, spectral_derivative
from ..models.base import ValidationError
from .state import ParametricSurface, SurfaceState

logger = logging.getLogger(__name__)


def recover_gradient_irrotational(s: SurfaceState) -> Tuple[Tuple[Field, ...], Field]:
    """
    Traces of ∇ₓφ and φ_y on y = η from (η, η_t, q).

    Solves ∇q = ∇ₓφ + φ_y∇η and η_t = φ_y - ∇η·∇ₓφ pointwise.

    Returns:
        (horizontal gradient components, φ_y)
    """
    eta_grad = [g.values for g in s.eta_grad]
    q_grad = [g.values for g in s.pot_grad]
    slope2 = sum(e ** 2 for e in eta_grad)
    phi_y = (s.eta_t.values + sum(e * q for e, q in zip(eta_grad, q_grad))) / (1.0 + slope2)
    phi_h = tuple(Field(s.grid, q - phi_y * e) for e, q in zip(eta_grad, q_grad))
    return phi_h, Field(s.grid, phi_y)


def recover_gradient_rotational(s: SurfaceState, gamma: float) -> Tuple[Field, Field]:
    """
    Traces (φ_x, φ_y) of the pseudo-potential for constant vorticity γ.

    (1+η_x²)φ_x = ξ_x - η_tη_x + γηη_x² and (1+η_x²)φ_y = η_t + η_xξ_x - γηη_x.
    """
    if s.grid.dim != 1:
        raise ValidationError("constant-vorticity kinematics are two-dimensional (dim = 1)")
    eta = s.eta.values
    eta_x = s.eta_grad[0].values
    xi_x = s.pot_grad[0].values
    eta_t = s.eta_t.values
    denom = 1.0 + eta_x ** 2
    phi_x = (xi_x - eta_t * eta_x + gamma * eta * eta_x ** 2) / denom
    phi_y = (eta_t + eta_x * xi_x - gamma * eta * eta_x) / denom
    return Field(s.grid, phi_x), Field(s.grid, phi_y)


def recover_multivalued(p: ParametricSurface, gamma: float) -> Tuple[Field, Field, Field]:
    """
    Traces (φ_x, φ_y, φ_t) along a parametric surface.

    With R = ẊY_t - ẎX_t - γYẎ and D = Ẋ² + Ẏ²:
    φ_x = (Ẋξ̇ - ẎR)/D, φ_y = (Ẏξ̇ + ẊR)/D, φ_t = ξ_t - φ_xX_t - φ_yY_t.

    Raises:
        CuspError: D below the immersion threshold somewhere
    """
    p.check_immersion()
    xi_t = p.require_xi_t("recover_multivalued")
    Xd, Yd, D = p.Xd, p.Yd, p.speed2
    R = normal_velocity_relation(p, gamma)
    phi_x = (Xd * p.xid - Yd * R) / D
    phi_y = (Yd * p.xid + Xd * R) / D
    phi_t = xi_t.values - phi_x * p.X_t.values - phi_y * p.Y_t.values
    g = p.lambda_grid
    return Field(g, phi_x), Field(g, phi_y), Field(g, phi_t)


def normal_velocity_relation(p: ParametricSurface, gamma: float) -> np.ndarray:
    """R = ẊY_t - ẎX_t - γYẎ, the scaled normal velocity of the surface"""
    return p.Xd * p.Y_t.values - p.Yd * p.X_t.values - gamma * p.Y.values * p.Yd


def surface_tension_term(eta: Field, sigma: float, rho: float = 1.0) -> Field:
    """
    (σ/ρ)·∇·(∇η/√(1+|∇η|²)), the mean-curvature pressure jump.

    Args:
        eta: wave height
        sigma: surface tension
        rho: density; pass 1 to use σ unscaled
    """
    if rho <= 0:
        raise ValidationError(f"density must be positive, got {rho}")
    if sigma == 0.0:
        return Field.zeros(eta.grid)
    grads = [spectral_derivative(eta, a) for a in range(eta.grid.dim)]
    norm = np.sqrt(1.0 + sum(g.values ** 2 for g in grads))
    flux = [Field(eta.grid, g.values / norm) for g in grads]
    return Field(eta.grid, (sigma / rho) * divergence(flux).values)


def curvature_term(p: ParametricSurface, sigma: float) -> Field:
    """σ·(ẊŸ - ẎẌ)/(Ẋ²+Ẏ²)^{3/2}"""
    p.check_immersion()
    kappa = (p.Xd * p.Ydd - p.Yd * p.Xdd) / p.speed2 ** 1.5
    return Field(p.lambda_grid, sigma * kappa)


def bottom_potential_gradient(phi_h: Sequence[Field], phi_y: Field, h: Field) -> Tuple[Field, ...]:
    """
    Tangential gradient of Q(x) = φ(x, -h₀ - h(x)) from the bottom traces.

    ∇Q = ∇ₓφ - φ_y∇h
    """
    out = []
    for a, comp in enumerate(phi_h):
        h_a = spectral_derivative(h, a).values
        out.append(Field(h.grid, comp.values - phi_y.values * h_a))
    return tuple(out)
