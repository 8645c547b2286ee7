"""
Long-wave equations obtained by eliminating η from the hierarchy

- the weakly rotational Boussinesq-type equation for ξ alone,
- its large-vorticity form in the slow variables (X, T) with κ = γδ,
- the KdV-type reduction in the moving frame χ,
together with their linear dispersion and the instability for σ̂ < ⅓.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple, Union

import numpy as np

from ..field.grid import Grid
from ..field.spectral import Field, antiderivative, spectral_derivative
from ..models.base import DegenerateCoefficientError, ValidationError
from ..models.params import DimensionlessParams
from .integrator import ImplicitMidpoint
from .order import HierarchyState, OrderTag
from .systems import hierarchy_rhs

logger = logging.getLogger(__name__)

DEGENERACY = 1e-8
GATEAUX_STEP = 1e-3

ArrayLike = Union[float, np.ndarray]


def _d(f: Field, order: int = 1) -> np.ndarray:
    return spectral_derivative(f, 0, order).values


def long_wave_dispersion(k: ArrayLike, p: DimensionlessParams) -> ArrayLike:
    """ω² = k² + δ²(σ̂-⅓)k⁴"""
    return k ** 2 + p.delta ** 2 * p.dispersion * k ** 4


def long3_dispersion(k: ArrayLike, sigma_hat: float) -> ArrayLike:
    """ω² = k² + (σ̂-⅓)k⁴ in the slow variables"""
    return k ** 2 + (sigma_hat - 1.0 / 3.0) * k ** 4


def growth_rate(k: ArrayLike, sigma_hat: float) -> ArrayLike:
    """|Im ω| of the linearized slow-variable equation; nonzero only where ω² < 0"""
    return np.sqrt(np.maximum(0.0, -long3_dispersion(k, sigma_hat)))


def unstable_threshold(sigma_hat: float) -> float:
    """Smallest unstable |k|: k² > 1/(⅓-σ̂); infinite for σ̂ >= ⅓"""
    if sigma_hat >= 1.0 / 3.0:
        return np.inf
    return float(1.0 / np.sqrt(1.0 / 3.0 - sigma_hat))


def hierarchy_xi_tt(s: HierarchyState, p: DimensionlessParams) -> Tuple[Field, Field]:
    """
    ξ_t and ξ_tt along the order-(1,2) flow.

    ξ_tt is the directional derivative of the ξ right-hand side along
    (η_t, ξ_t), taken by central differences; the right-hand side is
    quadratic, so the difference quotient is exact up to round-off.
    """
    order = OrderTag(n=1, m=2)
    eta_t, xi_t = hierarchy_rhs(s, order, p)
    h = GATEAUX_STEP
    _, plus = hierarchy_rhs(s.perturbed(eta_t.values, xi_t.values, h), order, p)
    _, minus = hierarchy_rhs(s.perturbed(eta_t.values, xi_t.values, -h), order, p)
    return xi_t, Field(s.grid, (plus.values - minus.values) / (2.0 * h))


def eliminate_eta_long(xi: Field, xi_t: Field, p: DimensionlessParams, xi_tt: Optional[Field] = None,
                       eta: Optional[Field] = None) -> Field:
    """
    Residual of the Boussinesq-type equation for ξ

        ξ_tt - ξ_xx + ε(2ξ_xξ_xt + ξ_tξ_xx) + εδγ(2ξ_tξ_xt + ξ_xξ_tt)
             + cubic·ε²ξ_x²ξ_xx + δ²(σ̂-⅓)ξ_xxxx

    Args:
        xi, xi_t: ξ and its time derivative
        p: dimensionless parameters; p.cubic is the ε² coefficient
        xi_tt: second time derivative; computed from the (1,2) flow of
            (eta, xi) when omitted
        eta: wave height, required only when xi_tt is omitted
    """
    if xi_tt is None:
        if eta is None:
            raise ValidationError("eliminate_eta_long needs either xi_tt or eta")
        _, xi_tt = hierarchy_xi_tt(HierarchyState(eta, xi), p)
    eps, delta, gamma = p.eps, p.delta, p.gamma
    xi_x, xi_xx, xi_4 = _d(xi), _d(xi, 2), _d(xi, 4)
    xt = xi_t.values
    xi_xt = _d(xi_t)
    xtt = xi_tt.values
    residual = (xtt - xi_xx
                + eps * (2.0 * xi_x * xi_xt + xt * xi_xx)
                + eps * delta * gamma * (2.0 * xt * xi_xt + xi_x * xtt)
                + p.cubic * eps ** 2 * xi_x ** 2 * xi_xx
                + delta ** 2 * p.dispersion * xi_4)
    return Field(xi.grid, residual)


def boussinesq_rhs_long3(xi: Field, xi_T: Field, p: DimensionlessParams) -> Tuple[Field, Field]:
    """
    (ξ_T, ξ_TT) of the large-vorticity equation in the slow variables

        (1 + κξ_X)ξ_TT = ξ_XX - 2ξ_Xξ_XT - ξ_Tξ_XX - 2κξ_Tξ_XT
                         - cubic·ξ_X²ξ_XX - (σ̂-⅓)ξ_XXXX

    κ = p.kappa_vort. κ = 0 gives the irrotational equation.

    Raises:
        DegenerateCoefficientError: |1 + κξ_X| < 1e-8 somewhere
    """
    kappa = p.kappa_vort or 0.0
    xi_X, xi_XX, xi_4 = _d(xi), _d(xi, 2), _d(xi, 4)
    xt = xi_T.values
    xi_XT = _d(xi_T)
    coef = 1.0 + kappa * xi_X
    worst = float(np.min(np.abs(coef)))
    if worst < DEGENERACY:
        raise DegenerateCoefficientError(f"1 + κξ_X nearly vanishes (min |1 + κξ_X| = {worst:.3e})")
    numerator = (xi_XX - 2.0 * xi_X * xi_XT - xt * xi_XX - 2.0 * kappa * xt * xi_XT
                 - p.cubic * xi_X ** 2 * xi_XX - p.dispersion * xi_4)
    return xi_T.copy(), Field(xi.grid, numerator / coef)


def evolve_long3_linear(xi: Field, xi_T: Field, sigma_hat: float, t: float) -> Tuple[Field, Field]:
    """
    Exact mode-wise evolution of ξ_TT = ξ_XX - (σ̂-⅓)ξ_XXXX.

    Modes with ω² < 0 grow as cosh/sinh with rate √(-ω²). Drift in ξ is
    carried unchanged.
    """
    k = xi.grid.wavenumbers(0)
    w2 = long3_dispersion(k, sigma_hat)
    x0, v0 = xi.spectrum, xi_T.spectrum
    osc = np.sqrt(np.abs(w2))
    stable = w2 > 0.0
    unstable = w2 < 0.0
    safe = np.where(osc > 0.0, osc, 1.0)
    c = np.where(stable, np.cos(osc * t), np.where(unstable, np.cosh(osc * t), 1.0))
    s_over = np.where(stable, np.sin(osc * t) / safe, np.where(unstable, np.sinh(osc * t) / safe, t))
    s_times = np.where(stable, -osc * np.sin(osc * t), np.where(unstable, osc * np.sinh(osc * t), 0.0))
    x_hat = x0 * c + v0 * s_over
    v_hat = x0 * s_times + v0 * c
    # modes at round-off level stay unexcited
    scale = max(float(np.max(np.abs(x0))), float(np.max(np.abs(v0))))
    tol = 1e3 * np.finfo(float).eps * scale
    idle = (np.abs(x0) <= tol) & (np.abs(v0) <= tol)
    x_hat = np.where(idle, 0.0, x_hat)
    v_hat = np.where(idle, 0.0, v_hat)
    grid = xi.grid
    return (Field.from_spectrum(grid, x_hat, real=True, drift=xi.drift),
            Field.from_spectrum(grid, v_hat, real=True, drift=xi_T.drift))


def long3_stepper(grid: Grid, p: DimensionlessParams, **kwargs) -> ImplicitMidpoint:
    """Midpoint stepper for (ξ, ξ_T): linear part a = 1, b = k² + (σ̂-⅓)k⁴"""
    k = grid.wavenumbers(0)
    a = np.ones_like(k)
    b = long3_dispersion(k, p.sigma_hat)
    return ImplicitMidpoint(grid, a, b, lambda u, v: boussinesq_rhs_long3(u, v, p), **kwargs)


def long3_midpoint(xi: Field, xi_T: Field, p: DimensionlessParams, dt: float, steps: int) -> Tuple[Field, Field]:
    """Integrate the slow-variable equation for `steps` implicit midpoint steps"""
    if steps < 1:
        raise ValidationError(f"steps must be >= 1, got {steps}")
    stepper = long3_stepper(xi.grid, p)
    u, v = xi, xi_T
    for _ in range(steps):
        u, v = stepper.step(u, v, dt)
    return u, v


def kdv_residual(xi: Field, xi_tau: Field, p: DimensionlessParams) -> Field:
    """(2ξ_τ + ξ_χ² + (σ̂-⅓)ξ_χχχ)_χ"""
    inner = 2.0 * xi_tau.values + _d(xi) ** 2 + p.dispersion * _d(xi, 3)
    return Field(xi.grid, _d(Field(xi.grid, inner)))


@dataclass
class KdVSolitary:
    """Steady sech² solution u = ξ_χ = A sech²(χ/width) moving with speed V"""

    amplitude: float
    speed: float
    width: float
    u: Field
    xi: Field
    xi_tau: Field


def kdv_solitary_profile(grid: Grid, width: float, sigma_hat: float) -> KdVSolitary:
    """
    Fit the sech² ansatz to the travelling KdV-type equation.

    With u = A sech²(Bχ), B = 1/width, and ξ_τ = -Vu, the integrated equation
    -2Vu + u² + (σ̂-⅓)u'' = 0 is linear in (A, V) after dividing by A; it is
    collocated at two points and the 2×2 system is solved directly
    (A = 6(σ̂-⅓)B², V = 2(σ̂-⅓)B²).

    Raises:
        DegenerateCoefficientError: σ̂ = ⅓
    """
    s = sigma_hat - 1.0 / 3.0
    if abs(s) < DEGENERACY:
        raise DegenerateCoefficientError("σ̂ = ⅓ removes the dispersive term; no solitary wave")
    if width <= 0:
        raise ValidationError(f"width must be positive, got {width}")
    B = 1.0 / width
    points = np.array([0.0, 0.75 * width])

    def shape(chi):
        return 1.0 / np.cosh(B * chi) ** 2

    # (-2Vu + u² + s u'')/A = 0 with u'' = A(4B²S - 6B²S²): rows A S² - 2V S = -s(4B²S - 6B²S²)
    S = shape(points)
    matrix = np.column_stack([S ** 2, -2.0 * S])
    rhs = -s * (4.0 * B ** 2 * S - 6.0 * B ** 2 * S ** 2)
    A, V = (float(v) for v in np.linalg.solve(matrix, rhs))
    u = Field.from_function(grid, lambda x: A * shape(x))
    xi = antiderivative(u)
    logger.debug(f"🔧 KdV solitary wave A = {A:.6g}, V = {V:.6g}")
    return KdVSolitary(amplitude=A, speed=V, width=width, u=u, xi=xi, xi_tau=Field(grid, -V * u.values))
