"""
Linear limit of the nonlocal formulation

Linearizing the flat-bottom global relation and the Bernoulli condition gives
η̂_t = a(κ)q̂ and q̂_t = -b(κ)η̂ per Fourier mode, with a = κ tanh(κh₀) and
b = g + (σ/ρ)κ². The measures below quantify how far a nonlinear state is
from that limit; both are O(ε²) for states of amplitude ε.
"""

import logging
from typing import Iterable, Optional, Tuple, Union

import numpy as np

from ..field.spectral import Field, fourier_integral, gradient, laplacian, norm_hs, norm_l1, norm_l2, norm_linf
from ..models.base import ValidationError
from ..models.params import PhysicalParams
from ..surface.kinematics import surface_tension_term
from ..surface.state import SurfaceState

logger = logging.getLogger(__name__)

KAPPA_WINDOW = 0.1

ArrayLike = Union[float, np.ndarray]


def kinematic_symbol(kappa: ArrayLike, p: PhysicalParams) -> ArrayLike:
    """a(κ) = κ tanh(κh₀)"""
    return kappa * np.tanh(kappa * p.h0)


def dynamic_symbol(kappa: ArrayLike, p: PhysicalParams) -> ArrayLike:
    """b(κ) = g + (σ/ρ)κ²"""
    return p.g + p.surface_tension_coefficient * kappa ** 2


def dispersion_omega2(kappa: ArrayLike, p: PhysicalParams) -> ArrayLike:
    """
    ω² = κ g tanh(κh₀)(1 + σκ²/(gρ)) for linear gravity-capillary waves.

    Raises:
        ValidationError: negative κ
    """
    k = np.asarray(kappa, dtype=float)
    if np.any(k < 0):
        raise ValidationError("wavenumber modulus must be nonnegative")
    out = kinematic_symbol(k, p) * dynamic_symbol(k, p)
    return float(out) if np.ndim(out) == 0 else out


def _require_periodic(s: SurfaceState, operation: str) -> None:
    if any(s.pot.drift) or any(s.eta.drift):
        raise ValidationError(f"{operation} needs periodic fields (no secular part)")


def linear_evolve(s0: SurfaceState, p: PhysicalParams, t: float) -> SurfaceState:
    """
    Exact evolution of the linearized system, one rotation per Fourier mode.

    η̂(t) = η̂₀ cos ωt + (a/ω) q̂₀ sin ωt
    q̂(t) = q̂₀ cos ωt - (b/ω) η̂₀ sin ωt

    The κ = 0 mode keeps η̂ fixed and drifts q̂ by -gη̂₀t.

    Returns:
        SurfaceState at time t, with η_t and q_t from the linear equations
    """
    p.require_flat_bottom("linear_evolve")
    _require_periodic(s0, "linear_evolve")
    grid = s0.grid
    kappa = grid.kappa
    a = kinematic_symbol(kappa, p)
    b = dynamic_symbol(kappa, p)
    omega = np.sqrt(a * b)
    cos = np.cos(omega * t)
    # sin(ωt)/ω with its t → limit on the zero mode
    sinc = np.where(omega > 0.0, np.sin(omega * t) / np.where(omega > 0.0, omega, 1.0), t)

    eta0 = s0.eta.spectrum
    q0 = s0.pot.spectrum
    eta_hat = eta0 * cos + a * q0 * sinc
    q_hat = q0 * cos - b * eta0 * sinc
    real = s0.eta.is_real and s0.pot.is_real
    return SurfaceState(
        grid=grid,
        eta=Field.from_spectrum(grid, eta_hat, real=real),
        eta_t=Field.from_spectrum(grid, a * q_hat, real=real),
        pot=Field.from_spectrum(grid, q_hat, real=real),
        pot_t=Field.from_spectrum(grid, -b * eta_hat, real=real),
    )


def linear_energy(s: SurfaceState, p: PhysicalParams) -> float:
    """Σ (b|η̂|² + a|q̂|²) with Parseval-normalised coefficients; conserved by linear_evolve"""
    kappa = s.grid.kappa
    eta_c = s.eta.parseval_coefficients()
    q_c = s.pot.parseval_coefficients()
    return float(np.sum(dynamic_symbol(kappa, p) * np.abs(eta_c) ** 2
                        + kinematic_symbol(kappa, p) * np.abs(q_c) ** 2))


def default_kappa_window(s: SurfaceState) -> float:
    """0.1/ε with ε = ‖η‖∞; unbounded for the rest state"""
    eps = norm_linf(s.eta)
    return KAPPA_WINDOW / eps if eps > 0.0 else np.inf


def linear_relation_residual(s: SurfaceState, p: PhysicalParams, kappa_max: Optional[float] = None) -> float:
    """
    sup over lattice κ ≤ kappa_max of |η̂_t - κ tanh(κh₀) q̂|.

    η̂ denotes the box Fourier integral, so the value approximates the
    whole-line transform for decayed fields.

    Args:
        s: state whose η_t comes from the exact nonlinear kinematics
        p: flat-bottom parameters
        kappa_max: wavenumber window, default 0.1/‖η‖∞
    """
    p.require_flat_bottom("linear_relation_residual")
    _require_periodic(s, "linear_relation_residual")
    kappa_max = kappa_max if kappa_max is not None else default_kappa_window(s)
    kappa = s.grid.kappa
    window = kappa <= kappa_max
    gap = s.grid.cell_volume * np.abs(s.eta_t.spectrum - kinematic_symbol(kappa, p) * s.pot.spectrum)
    return float(np.max(np.where(window, gap, 0.0)))


def depth_integral_gap(s: SurfaceState, p: PhysicalParams, k, eps: float) -> Tuple[float, float]:
    """
    Gap between the depth-weighted transform of η_t and its plain transform.

    gap = |∫e^{ik·x} η_t cosh(κ(η+h₀))/cosh(κ(ε+h₀)) - η̂_t(k)|, which is
    bounded by 2(1 - e^{-2κε})‖η_t‖_{L¹} whenever ‖η‖∞ < ε.

    Returns:
        (gap, bound)

    Raises:
        ValidationError: ‖η‖∞ >= eps
    """
    amp = norm_linf(s.eta)
    if amp >= eps:
        raise ValidationError(f"wave height exceeds the amplitude bound: ‖η‖∞ = {amp:.3e} >= ε = {eps:.3e}")
    kv = np.atleast_1d(np.asarray(k, dtype=float))
    kappa = float(np.linalg.norm(kv))
    top = s.eta.values + p.h0
    ref = eps + p.h0
    # cosh(κ·top)/cosh(κ·ref) without overflow, both arguments positive
    ratio = np.exp(kappa * (top - ref)) * (1.0 + np.exp(-2.0 * kappa * top)) / (1.0 + np.exp(-2.0 * kappa * ref))
    weighted = fourier_integral(Field(s.grid, s.eta_t.values * ratio), kv)
    plain = fourier_integral(s.eta_t, kv)
    gap = abs(weighted - plain)
    bound = 2.0 * (1.0 - np.exp(-2.0 * kappa * eps)) * norm_l1(s.eta_t)
    return float(gap), float(bound)


def nonlinear_part(s: SurfaceState, p: PhysicalParams) -> Field:
    """
    N(q,η) = ½|∇q|² + (σ/ρ)∇·(∇η/√(1+|∇η|²) - ∇η) - (η_t + ∇η·∇q)²/(2(1+|∇η|²))
    """
    eta_grad = [g.values for g in s.eta_grad]
    q_grad = [g.values for g in s.pot_grad]
    slope2 = sum(e ** 2 for e in eta_grad)
    coef = p.surface_tension_coefficient
    tension = surface_tension_term(s.eta, coef).values
    if coef != 0.0:
        tension = tension - coef * laplacian(s.eta).values
    normal = s.eta_t.values + sum(e * q for e, q in zip(eta_grad, q_grad))
    values = 0.5 * sum(q ** 2 for q in q_grad) + tension - normal ** 2 / (2.0 * (1.0 + slope2))
    return Field(s.grid, values)


def nonlinear_bernoulli_norm(s: SurfaceState, p: PhysicalParams) -> float:
    """‖N(q,η)‖ in the box L¹ norm"""
    return norm_l1(nonlinear_part(s, p))


def gradient_l2(f: Field) -> float:
    """‖∇f‖ in the box L² norm"""
    return float(np.sqrt(sum(norm_l2(g) ** 2 for g in gradient(f))))


def a_priori_size(s: SurfaceState) -> float:
    """
    Largest of ‖η_t‖_{L¹}, ‖η‖∞, ‖∇q‖_{L¹}, ‖∇q‖_{L²}.

    Both norms of ∇q are taken and the stricter (larger) one is used.
    """
    q_l1 = sum(norm_l1(g) for g in s.pot_grad)
    return float(max(norm_l1(s.eta_t), norm_linf(s.eta), q_l1, gradient_l2(s.pot)))


def nonlinear_l1_bound(s: SurfaceState, p: PhysicalParams) -> float:
    """½‖∇q‖²_{L²} + (σ/ρ)‖η‖²_{H²} + ½(‖η_t‖_{L²} + ‖∇q‖_{L²})², an upper bound of ‖N‖_{L¹} at small slopes"""
    dq = gradient_l2(s.pot)
    coef = p.surface_tension_coefficient
    return float(0.5 * dq ** 2 + coef * norm_hs(s.eta, 2.0) ** 2 + 0.5 * (norm_l2(s.eta_t) + dq) ** 2)


def sobolev_ratio(eta: Field) -> float:
    """‖η‖∞ / ‖η‖_{H²}; zero for η = 0"""
    h2 = norm_hs(eta, 2.0)
    return norm_linf(eta) / h2 if h2 > 0.0 else 0.0


def sobolev_constant(states: Iterable[SurfaceState]) -> float:
    """Largest embedding ratio ‖η‖∞/‖η‖_{H²} over a family of states"""
    ratios = [sobolev_ratio(s.eta) for s in states]
    if not ratios:
        raise ValidationError("sobolev_constant needs at least one state")
    constant = max(ratios)
    logger.debug(f"📊 fitted embedding constant C = {constant:.4g} over {len(ratios)} states")
    return constant
