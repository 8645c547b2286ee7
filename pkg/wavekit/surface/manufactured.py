"""
Manufactured harmonic flows with exact free-surface and bottom traces

Every oracle here is an exactly harmonic potential φ(x, y) evaluated on a
prescribed surface y = η(x); η_t then follows from the kinematic condition, so
the resulting SurfaceState satisfies the interior equations to round-off and
the nonlocal residuals must vanish at spectral accuracy.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import newton

from ..field.grid import Grid
from ..field.spectral import Field, interpolate, spectral_derivative
from ..models.base import ConvergenceError, ValidationError
from ..models.params import PhysicalParams
from .state import ParametricSurface, SurfaceState

logger = logging.getLogger(__name__)

Evaluation = Tuple[np.ndarray, Tuple[np.ndarray, ...], np.ndarray]


class HarmonicOracle(ABC):
    """Closed-form harmonic potential with exact gradient"""

    grid: Grid

    @abstractmethod
    def evaluate(self, nodes: Sequence[np.ndarray], y: np.ndarray) -> Evaluation:
        """Returns (φ, ∇ₓφ components, φ_y) at the points (nodes, y)"""

    def potential_drift(self) -> Optional[Tuple[float, ...]]:
        """Secular part of φ along the horizontal axes, None when periodic"""
        return None

    def traces(self, eta: Field) -> Evaluation:
        return self.evaluate(self.grid.nodes, eta.values)

    def state(self, eta: Field, gamma: float = 0.0) -> SurfaceState:
        """
        Surface state carried by this flow on y = η.

        η_t follows the kinematic condition of the pseudo-potential with
        constant vorticity γ (γ = 0 is the irrotational condition). The
        potential is steady, so q_t = φ_y η_t.
        """
        if eta.grid != self.grid:
            raise ValidationError("wave height lives on a different grid")
        if gamma != 0.0 and self.grid.dim != 1:
            raise ValidationError("constant vorticity requires dim = 1")
        phi, phi_h, phi_y = self.traces(eta)
        eta_grad = [spectral_derivative(eta, a).values for a in range(self.grid.dim)]
        eta_t = phi_y - sum(e * p for e, p in zip(eta_grad, phi_h))
        if gamma != 0.0:
            eta_t = eta_t + gamma * eta.values * eta_grad[0]
        pot = Field(self.grid, phi, self.potential_drift())
        return SurfaceState(
            grid=self.grid,
            eta=eta,
            eta_t=Field(self.grid, eta_t),
            pot=pot,
            pot_t=Field(self.grid, phi_y * eta_t),
        )


@dataclass
class HarmonicMode(HarmonicOracle):
    """φ = A cos(k₀·x + θ) cosh(|k₀|(y + h₀)), harmonic with φ_y = 0 on the flat bottom"""

    grid: Grid
    k0: Tuple[float, ...]
    amplitude: float = 1.0
    theta: float = 0.0
    h0: float = 1.0

    def __post_init__(self):
        self.k0 = tuple(float(k) for k in np.atleast_1d(self.k0))
        self.grid.lattice_index(self.k0)

    @property
    def kappa(self) -> float:
        return float(np.linalg.norm(self.k0))

    def evaluate(self, nodes, y):
        arg = sum(k * x for k, x in zip(self.k0, nodes)) + self.theta
        depth = self.kappa * (y + self.h0)
        phi = self.amplitude * np.cos(arg) * np.cosh(depth)
        phi_h = tuple(-self.amplitude * k * np.sin(arg) * np.cosh(depth) for k in self.k0)
        phi_y = self.amplitude * self.kappa * np.cos(arg) * np.sinh(depth)
        return phi, phi_h, phi_y

    def bottom_potential(self) -> Field:
        """Q on the flat bottom y = -h₀"""
        arg = sum(k * x for k, x in zip(self.k0, self.grid.nodes)) + self.theta
        return Field(self.grid, self.amplitude * np.cos(arg))


@dataclass
class HarmonicSuperposition(HarmonicOracle):
    """Sum of harmonic modes sharing one grid and depth"""

    grid: Grid
    modes: List[HarmonicMode] = field(default_factory=list)

    def __post_init__(self):
        for m in self.modes:
            if m.grid != self.grid:
                raise ValidationError("all modes must share the superposition grid")

    def evaluate(self, nodes, y):
        phi = np.zeros(np.shape(y))
        phi_h = [np.zeros(np.shape(y)) for _ in range(self.grid.dim)]
        phi_y = np.zeros(np.shape(y))
        for m in self.modes:
            p, ph, py = m.evaluate(nodes, y)
            phi = phi + p
            phi_h = [a + b for a, b in zip(phi_h, ph)]
            phi_y = phi_y + py
        return phi, tuple(phi_h), phi_y

    def bottom_potential(self) -> Field:
        return Field(self.grid, sum(m.bottom_potential().values for m in self.modes))


@dataclass
class StreamlineBottomFlow(HarmonicOracle):
    """
    Uniform current plus one standing mode over a bottom that is a streamline.

    φ = Ux + A cos(k₀x) cosh(k₀(y+h₀)) with stream function
    ψ = Uy - A sin(k₀x) sinh(k₀(y+h₀)). The bottom is the level set
    ψ = -U(h₀ + offset), so the no-flux condition holds exactly and the
    bottom perturbation h(x) = -h₀ - y_b(x) is not flat.
    """

    grid: Grid
    k0: float = 1.0
    amplitude: float = 0.05
    current: float = 1.0
    h0: float = 1.0
    offset: float = 0.1

    def __post_init__(self):
        if self.grid.dim != 1:
            raise ValidationError("streamline bottom flows are two-dimensional (dim = 1)")
        if self.current == 0.0:
            raise ValidationError("a nonzero current is required to trace the bottom streamline")
        self.grid.lattice_index(self.k0)
        self._bottom_y: Optional[np.ndarray] = None

    def evaluate(self, nodes, y):
        x = nodes[0]
        depth = self.k0 * (y + self.h0)
        phi = self.current * x + self.amplitude * np.cos(self.k0 * x) * np.cosh(depth)
        phi_x = self.current - self.amplitude * self.k0 * np.sin(self.k0 * x) * np.cosh(depth)
        phi_y = self.amplitude * self.k0 * np.cos(self.k0 * x) * np.sinh(depth)
        return phi, (phi_x,), phi_y

    def stream_function(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return self.current * y - self.amplitude * np.sin(self.k0 * x) * np.sinh(self.k0 * (y + self.h0))

    def potential_drift(self) -> Tuple[float, ...]:
        return (self.current * 2.0 * self.grid.L[0],)

    @property
    def bottom_y(self) -> np.ndarray:
        """Bottom elevation y_b(x) solving ψ(x, y_b) = -U(h₀ + offset)"""
        if self._bottom_y is None:
            x = self.grid.nodes[0]
            level = -self.current * (self.h0 + self.offset)

            def residual(y):
                return self.stream_function(x, y) - level

            def slope(y):
                return self.current - self.amplitude * self.k0 * np.sin(self.k0 * x) * np.cosh(self.k0 * (y + self.h0))

            start = np.full(x.shape, level / self.current)
            y_b = newton(residual, start, fprime=slope, tol=1e-15, maxiter=100)
            miss = float(np.max(np.abs(residual(y_b))))
            if not np.all(np.isfinite(y_b)) or miss > 1e-12:
                raise ConvergenceError("bottom streamline solve failed", 100, miss)
            logger.debug(f"🔧 bottom streamline traced, max|ψ - c| = {miss:.2e}")
            self._bottom_y = y_b
        return self._bottom_y

    def bottom(self) -> Field:
        """h(x) with the bottom at y = -h₀ - h(x)"""
        return Field(self.grid, -self.h0 - self.bottom_y)

    def bottom_potential(self) -> Field:
        phi, _, _ = self.evaluate(self.grid.nodes, self.bottom_y)
        return Field(self.grid, phi, self.potential_drift())

    def params(self, **overrides) -> PhysicalParams:
        return PhysicalParams(h0=self.h0, bottom=self.bottom(), **overrides)


def harmonic_modes(grid: Grid, wavenumbers: Sequence[float], amplitudes: Sequence[float],
                   h0: float = 1.0, phases: Optional[Sequence[float]] = None) -> HarmonicSuperposition:
    """1-D superposition of cos modes on lattice wavenumbers"""
    phases = phases if phases is not None else [0.0] * len(wavenumbers)
    modes = [
        HarmonicMode(grid, (k,), amplitude=a, theta=th, h0=h0)
        for k, a, th in zip(wavenumbers, amplitudes, phases)
    ]
    return HarmonicSuperposition(grid, modes)


def wave_packet_state(eps: float, grid: Grid, h0: float = 1.0, width: float = 2.0,
                      wavenumbers: Sequence[float] = (0.5, 1.0, 1.5),
                      amplitudes: Sequence[float] = (1.0, 0.5, 0.25)) -> SurfaceState:
    """
    Scaled smooth family used by the O(ε²) sweeps.

    η = ε·sech²(x/width); φ = ε·Σ aⱼ cos(kⱼx) cosh(kⱼ(y+h₀)). η_t and q are
    the exact traces of φ, so the state satisfies the full kinematics.
    """
    if eps <= 0:
        raise ValidationError(f"eps must be positive, got {eps}")
    x = grid.nodes[0]
    eta = Field(grid, eps / np.cosh(x / width) ** 2)
    flow = harmonic_modes(grid, wavenumbers, [eps * a for a in amplitudes], h0=h0)
    return flow.state(eta)


def standing_wave_state(eps: float, t: float, grid: Grid, params: PhysicalParams,
                        k0: Optional[Sequence[float]] = None) -> SurfaceState:
    """
    Linear standing wave η = ε cos(k₀·x) cos(ωt) with its exact linear potential.

    The state solves the linearized kinematic and Bernoulli conditions, so the
    nonlinear Bernoulli residual is O(ε²).
    """
    params.require_flat_bottom("standing_wave_state")
    k0 = tuple(k0) if k0 is not None else (np.pi / grid.L[0],) + (0.0,) * (grid.dim - 1)
    grid.lattice_index(k0)
    kappa = float(np.linalg.norm(k0))
    if kappa == 0.0:
        raise ValidationError("standing wave needs a nonzero wavenumber")
    a = kappa * np.tanh(kappa * params.h0)
    b = params.g + params.surface_tension_coefficient * kappa ** 2
    omega = np.sqrt(a * b)
    shape = np.cos(sum(k * x for k, x in zip(k0, grid.nodes)))
    return SurfaceState(
        grid=grid,
        eta=Field(grid, eps * shape * np.cos(omega * t)),
        eta_t=Field(grid, -eps * omega * shape * np.sin(omega * t)),
        pot=Field(grid, -eps * (omega / a) * shape * np.sin(omega * t)),
        pot_t=Field(grid, -eps * (omega ** 2 / a) * shape * np.cos(omega * t)),
    )


def parametric_graph(s: SurfaceState) -> ParametricSurface:
    """Graph surface as the curve X = λ, Y = η(λ)"""
    if s.grid.dim != 1:
        raise ValidationError("parametric surfaces are curves: dim must be 1")
    grid = s.grid
    lam = grid.nodes[0]
    zero = Field.zeros(grid)
    return ParametricSurface(
        lambda_grid=grid,
        X=Field(grid, lam, (2.0 * grid.L[0],)),
        Y=s.eta.copy(),
        X_t=zero,
        Y_t=s.eta_t.copy(),
        xi=s.pot.copy(),
        xi_t=s.pot_t.copy() if s.pot_t is not None else None,
    )


def reparameterize(p: ParametricSurface, warp: float) -> ParametricSurface:
    """
    Resample a curve along λ ↦ λ + warp·(L/π)·sin(π(λ+L)/L).

    The map is a monotone diffeomorphism of the period for |warp| < 1 and is
    steady, so time derivatives at fixed λ are resampled the same way.
    """
    if abs(warp) >= 1.0:
        raise ValidationError(f"|warp| must be < 1 for a monotone map, got {warp}")
    grid = p.lambda_grid
    L = grid.L[0]
    lam = grid.nodes[0]
    target = lam + warp * (L / np.pi) * np.sin(np.pi * (lam + L) / L)

    def resample(f: Optional[Field]) -> Optional[Field]:
        if f is None:
            return None
        return Field(grid, interpolate(f, target), f.drift)

    return ParametricSurface(
        lambda_grid=grid,
        X=resample(p.X),
        Y=resample(p.Y),
        X_t=resample(p.X_t),
        Y_t=resample(p.Y_t),
        xi=resample(p.xi),
        xi_t=resample(p.xi_t),
        cusp_threshold=p.cusp_threshold,
    )
