"""
Pointwise residuals of the dynamic (Bernoulli) condition on the free surface
"""

import logging

import numpy as np

from ..field.spectral import Field
from ..models.base import ValidationError
from ..models.params import PhysicalParams
from ..surface.kinematics import curvature_term, recover_multivalued, surface_tension_term
from ..surface.state import ParametricSurface, SurfaceState

logger = logging.getLogger(__name__)


def bernoulli_residual_irrotational(s: SurfaceState, p: PhysicalParams) -> Field:
    """
    q_t + ½|∇q|² + gη - (η_t + ∇η·∇q)²/(2(1+|∇η|²)) - f(η)

    f(η) is the surface-tension term with the coefficient selected by
    p.tension_scale.
    """
    q_t = s.require_pot_t("bernoulli_residual_irrotational")
    eta_grad = [g.values for g in s.eta_grad]
    q_grad = [g.values for g in s.pot_grad]
    slope2 = sum(e ** 2 for e in eta_grad)
    normal = s.eta_t.values + sum(e * q for e, q in zip(eta_grad, q_grad))
    tension = surface_tension_term(s.eta, p.surface_tension_coefficient).values
    residual = (q_t.values + 0.5 * sum(q ** 2 for q in q_grad) + p.g * s.eta.values
                - normal ** 2 / (2.0 * (1.0 + slope2)) - tension)
    return Field(s.grid, residual)


def bernoulli_residual_rotational(s: SurfaceState, p: PhysicalParams) -> Field:
    """
    Irrotational residual in ξ plus the vorticity correction
    γη(2η_tη_x - 2ξ_x + γη)/(2(1+η_x²)).
    """
    if s.grid.dim != 1:
        raise ValidationError("constant-vorticity Bernoulli condition is two-dimensional (dim = 1)")
    base = bernoulli_residual_irrotational(s, p).values
    eta = s.eta.values
    eta_x = s.eta_grad[0].values
    xi_x = s.pot_grad[0].values
    gamma = p.gamma
    vortical = gamma * eta * (2.0 * s.eta_t.values * eta_x - 2.0 * xi_x + gamma * eta) / (2.0 * (1.0 + eta_x ** 2))
    return Field(s.grid, base + vortical)


def bernoulli_residual_multivalued(surface: ParametricSurface, p: PhysicalParams) -> Field:
    """
    Closed-form Bernoulli residual along a parametric surface.

    ξ_t + gY - ½(X_t² + Y_t²)
      + γY(2ẊẎY_t - 2Ẏ²X_t - 2ξ̇Ẋ + γẊ²Y)/(2D)
      + (ξ̇ - ẊX_t - ẎY_t)²/(2D) - coef·curvature,   D = Ẋ² + Ẏ²

    Raises:
        CuspError: D below the immersion threshold somewhere
    """
    surface.check_immersion()
    xi_t = surface.require_xi_t("bernoulli_residual_multivalued").values
    Xd, Yd, D = surface.Xd, surface.Yd, surface.speed2
    X_t, Y_t, Y = surface.X_t.values, surface.Y_t.values, surface.Y.values
    xid = surface.xid
    gamma = p.gamma
    vortical = gamma * Y * (2.0 * Xd * Yd * Y_t - 2.0 * Yd ** 2 * X_t - 2.0 * xid * Xd + gamma * Xd ** 2 * Y) / (2.0 * D)
    tangential = (xid - Xd * X_t - Yd * Y_t) ** 2 / (2.0 * D)
    curvature = curvature_term(surface, p.surface_tension_coefficient).values
    residual = xi_t + p.g * Y - 0.5 * (X_t ** 2 + Y_t ** 2) + vortical + tangential - curvature
    return Field(surface.lambda_grid, residual)


def bernoulli_assembled_multivalued(surface: ParametricSurface, p: PhysicalParams) -> Field:
    """
    Same residual assembled from the recovered traces:
    φ_t + ½φ_y² + ½(φ_x - γY)² + gY - coef·curvature.
    """
    phi_x, phi_y, phi_t = recover_multivalued(surface, p.gamma)
    Y = surface.Y.values
    curvature = curvature_term(surface, p.surface_tension_coefficient).values
    residual = (phi_t.values + 0.5 * phi_y.values ** 2 + 0.5 * (phi_x.values - p.gamma * Y) ** 2
                + p.g * Y - curvature)
    return Field(surface.lambda_grid, np.asarray(residual))
