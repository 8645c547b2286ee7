"""
Residuals of the nonlocal (global-relation) equations

Every evaluator returns one complex residual per dual-lattice wavenumber k,
packed in a ResidualReport. Hyperbolic factors are evaluated in scaled form:
each report is multiplied by e^{-κM}, M = h₀ + max(|η|, |h|), so the values
stay O(1) up to the overflow guard κ_max.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, TypeVar, Union

import numpy as np

from ..field.spectral import Field, box_exponential_sum, spectral_derivative
from ..models.base import OverflowGuardError, ValidationError
from ..models.params import PhysicalParams
from ..models.reports import ResidualReport
from ..surface.state import ParametricSurface, SurfaceState

logger = logging.getLogger(__name__)

KAPPA_GUARD = 50.0
PERIOD_TOL = 1e-9

K = Union[float, Sequence[float]]
T = TypeVar("T")
R = TypeVar("R")


def default_kappa_max(h0: float) -> float:
    return KAPPA_GUARD / h0


def map_ordered(func: Callable[[T], R], items: Iterable[T], workers: int = 1) -> List[R]:
    """Evaluate func over items, on a thread pool when workers > 1, keeping input order"""
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items))


def scaled_cosh(kappa: float, arg: np.ndarray, M: float) -> np.ndarray:
    """e^{-κM}·cosh(κ·arg) without forming cosh(κ·arg)"""
    return 0.5 * (np.exp(kappa * (arg - M)) + np.exp(-kappa * (arg + M)))


def scaled_sinh(kappa: float, arg: np.ndarray, M: float) -> np.ndarray:
    """e^{-κM}·sinh(κ·arg) without forming sinh(κ·arg)"""
    return 0.5 * (np.exp(kappa * (arg - M)) - np.exp(-kappa * (arg + M)))


def residual_scale(kappa: float, h0: float, eta: np.ndarray, h: Optional[np.ndarray] = None) -> Tuple[float, float]:
    """
    Scaling exponent M and factor e^{-κM} shared by all terms of one residual.

    Returns:
        (M, e^{-κM})
    """
    amp = float(np.max(np.abs(eta))) if np.size(eta) else 0.0
    if h is not None and np.size(h):
        amp = max(amp, float(np.max(np.abs(h))))
    M = h0 + amp
    return M, float(np.exp(-kappa * M))


def _prepare(grid, ks: Sequence[K], kappa_max: float) -> List[Tuple[np.ndarray, float]]:
    out = []
    for k in ks:
        grid.lattice_index(k)
        kv = np.atleast_1d(np.asarray(k, dtype=float))
        kappa = float(np.linalg.norm(kv))
        if kappa > kappa_max:
            raise OverflowGuardError(kappa, kappa_max)
        out.append((kv, kappa))
    return out


def irrotational_residuals(s: SurfaceState, Q: Field, p: PhysicalParams, ks: Sequence[K],
                           kappa_max: Optional[float] = None,
                           workers: int = 1) -> Tuple[ResidualReport, ResidualReport]:
    """
    Residuals of the irrotational pair coupling (η_t, ∇q) with the bottom potential Q.

    R₁(k) = ∫e^{ik·x}[κη_t sinh(κη) - ik·∇q cosh(κη) + ik·∇Q cosh(κ(h₀+h))]
    R₂(k) = ∫e^{ik·x}[κη_t cosh(κη) - ik·∇q sinh(κη) - ik·∇Q sinh(κ(h₀+h))]

    Args:
        s: surface state with pot = q
        Q: potential on the bottom y = -h₀ - h(x)
        p: physical parameters; p.bottom supplies h
        ks: dual-lattice wavevectors
        kappa_max: overflow guard, default 50/h₀
        workers: thread count for the per-k evaluation

    Returns:
        (report of R₁, report of R₂), both scaled by e^{-κM}

    Raises:
        ValidationError: k off the dual lattice
        OverflowGuardError: |k| beyond kappa_max
    """
    grid = s.grid
    if Q.grid != grid:
        raise ValidationError("bottom potential lives on a different grid")
    kappa_max = kappa_max if kappa_max is not None else default_kappa_max(p.h0)
    prepared = _prepare(grid, ks, kappa_max)
    s.check_layer(p.h0, p.bottom_values(grid))

    eta = s.eta.values
    h = p.bottom_values(grid)
    eta_t = s.eta_t.values
    q_grad = [g.values for g in s.pot_grad]
    Q_grad = [spectral_derivative(Q, a).values for a in range(grid.dim)]
    depth = p.h0 + h

    def one(item) -> Tuple[complex, complex]:
        kv, kappa = item
        M, _ = residual_scale(kappa, p.h0, eta, h)
        kq = sum(kc * g for kc, g in zip(kv, q_grad))
        kQ = sum(kc * g for kc, g in zip(kv, Q_grad))
        r1 = (kappa * eta_t * scaled_sinh(kappa, eta, M)
              - 1j * kq * scaled_cosh(kappa, eta, M)
              + 1j * kQ * scaled_cosh(kappa, depth, M))
        r2 = (kappa * eta_t * scaled_cosh(kappa, eta, M)
              - 1j * kq * scaled_sinh(kappa, eta, M)
              - 1j * kQ * scaled_sinh(kappa, depth, M))
        return box_exponential_sum(r1, grid, kv), box_exponential_sum(r2, grid, kv)

    pairs = map_ordered(one, prepared, workers)
    kvs = [kv for kv, _ in prepared]
    first = ResidualReport.from_arrays("irrotational_first", kvs, [a for a, _ in pairs])
    second = ResidualReport.from_arrays("irrotational_second", kvs, [b for _, b in pairs])
    logger.debug(f"📊 irrotational residuals sup = {first.sup_norm:.3e}, {second.sup_norm:.3e}")
    return first, second


def flat_bottom_residual(s: SurfaceState, p: PhysicalParams, ks: Sequence[K],
                         kappa_max: Optional[float] = None, workers: int = 1) -> ResidualReport:
    """∫e^{ik·x}[κη_t cosh(κ(η+h₀)) - ik·∇q sinh(κ(η+h₀))] per k, scaled by e^{-κM}"""
    p.require_flat_bottom("flat_bottom_residual")
    grid = s.grid
    kappa_max = kappa_max if kappa_max is not None else default_kappa_max(p.h0)
    prepared = _prepare(grid, ks, kappa_max)
    s.check_layer(p.h0)

    eta = s.eta.values
    eta_t = s.eta_t.values
    q_grad = [g.values for g in s.pot_grad]
    elevation = eta + p.h0

    def one(item) -> complex:
        kv, kappa = item
        M, _ = residual_scale(kappa, p.h0, eta)
        kq = sum(kc * g for kc, g in zip(kv, q_grad))
        integrand = kappa * eta_t * scaled_cosh(kappa, elevation, M) - 1j * kq * scaled_sinh(kappa, elevation, M)
        return box_exponential_sum(integrand, grid, kv)

    values = map_ordered(one, prepared, workers)
    return ResidualReport.from_arrays("flat_bottom", [kv for kv, _ in prepared], values)


def rotational_residual(s: SurfaceState, p: PhysicalParams, ks: Sequence[K],
                        kappa_max: Optional[float] = None, workers: int = 1) -> ResidualReport:
    """
    ∫e^{ikx}[ξ_x sinh(k(η+h₀)) + i(η_t - γηη_x) cosh(k(η+h₀))] per k, scaled by e^{-κM}.

    For γ = 0 and k ≠ 0 this equals (i/κ) times the flat-bottom residual.
    """
    if s.grid.dim != 1:
        raise ValidationError("rotational residual is two-dimensional (dim = 1)")
    p.require_flat_bottom("rotational_residual")
    grid = s.grid
    kappa_max = kappa_max if kappa_max is not None else default_kappa_max(p.h0)
    prepared = _prepare(grid, ks, kappa_max)
    s.check_layer(p.h0)

    eta = s.eta.values
    eta_x = s.eta_grad[0].values
    xi_x = s.pot_grad[0].values
    normal = s.eta_t.values - p.gamma * eta * eta_x
    elevation = eta + p.h0

    def one(item) -> complex:
        kv, kappa = item
        k = float(kv[0])
        M, _ = residual_scale(kappa, p.h0, eta)
        sinh_k = np.sign(k) * scaled_sinh(kappa, elevation, M)
        integrand = xi_x * sinh_k + 1j * normal * scaled_cosh(kappa, elevation, M)
        return box_exponential_sum(integrand, grid, kv)

    values = map_ordered(one, prepared, workers)
    return ResidualReport.from_arrays("rotational", [kv for kv, _ in prepared], values)


def multivalued_residual(surface: ParametricSurface, p: PhysicalParams, ks: Sequence[float],
                         kappa_max: Optional[float] = None, workers: int = 1) -> ResidualReport:
    """
    ∫e^{ikX}[ξ̇ sinh(k(Y+h₀)) + i(ẊY_t - ẎX_t - γYẎ) cosh(k(Y+h₀))] dλ per k.

    X must advance by a positive horizontal period P over one λ-period and
    kP/(2π) must be an integer, so that e^{ikX} is λ-periodic.

    Raises:
        CuspError: the parameterization is not an immersion
        ValidationError: k incompatible with the horizontal period
    """
    p.require_flat_bottom("multivalued_residual")
    surface.check_immersion()
    grid = surface.lambda_grid
    period = surface.horizontal_period
    if period <= 0.0:
        raise ValidationError(f"X must advance by a positive horizontal period, got {period}")
    kappa_max = kappa_max if kappa_max is not None else default_kappa_max(p.h0)

    kvs = []
    for k in ks:
        k = float(np.atleast_1d(k)[0])
        m = k * period / (2.0 * np.pi)
        if abs(m - round(m)) > PERIOD_TOL:
            raise ValidationError(
                "wavenumber is off the lattice of the horizontal period", [{"k": k, "period": period}]
            )
        if abs(k) > kappa_max:
            raise OverflowGuardError(abs(k), kappa_max)
        kvs.append(k)

    Y = surface.Y.values
    if np.min(Y + p.h0) <= 0.0:
        raise ValidationError("fluid layer degenerates (Y + h₀ <= 0 somewhere)")
    X = surface.X.values
    normal = surface.Xd * surface.Y_t.values - surface.Yd * surface.X_t.values - p.gamma * Y * surface.Yd
    xid = surface.xid
    elevation = Y + p.h0
    dl = grid.cell_volume

    def one(k: float) -> complex:
        kappa = abs(k)
        M, _ = residual_scale(kappa, p.h0, Y)
        integrand = (xid * np.sign(k) * scaled_sinh(kappa, elevation, M)
                     + 1j * normal * scaled_cosh(kappa, elevation, M))
        return complex(np.sum(integrand * np.exp(1j * k * X)) * dl)

    values = map_ordered(one, kvs, workers)
    return ResidualReport.from_arrays("multivalued", [[k] for k in kvs], values)
