"""
Closed-form soliton profiles and their verification

Profiles are written W(z) = Γ₁/(1 + Γ₂cosh(αz)) with Γ₁ = -2α²/β and
Γ₂ = ±√Δ/β. The sign in front of √Δ is recorded on the GammaPoint: -1 gives
the elevated family and +1 the depression family.
"""

import logging
import math
from typing import Optional, Tuple, Union

import numpy as np
from pydantic import Field as PydanticField

from ..field.grid import Grid, make_grid
from ..field.spectral import Field, antiderivative, norm_linf, spectral_derivative
from ..hierarchy.long_wave import boussinesq_rhs_long3
from ..models.base import AdmissionError, BaseWaveModel, BlowUpError, DegenerateCoefficientError, ValidationError
from ..models.params import DimensionlessParams
from .spec import SolitonFamily, SolitonSpec, admission_margins

logger = logging.getLogger(__name__)

CONSTANT_TOL = 1e-12
SYMMETRIES = ("G1", "G2", "G3", "G4")


class GammaPoint(BaseWaveModel):
    """Point (Γ₁, Γ₂) on the manifold Γ₂² - (μ/α²)Γ₁² = 1"""

    gamma1: float = PydanticField(..., description="Γ₁ = -2α²/β")
    gamma2: float = PydanticField(..., description="Γ₂ = branch·√Δ/β")
    family: Optional[SolitonFamily] = PydanticField(None, description="Family the point was built for")
    branch: int = PydanticField(0, description="Sign in front of √Δ; 0 for the constant solution")
    constant: bool = PydanticField(False, description="Γ₂ = 0 bifurcation: W ≡ Γ₁")

    class Config:
        frozen = True

    def manifold_residual(self, spec: SolitonSpec) -> float:
        return self.gamma2 ** 2 - spec.mu_over_alpha2 * self.gamma1 ** 2 - 1.0

    def amplitude(self) -> float:
        """W(0)"""
        if self.constant:
            return self.gamma1
        return self.gamma1 / (1.0 + self.gamma2)


def gamma_point(spec: SolitonSpec, family: Union[SolitonFamily, str]) -> GammaPoint:
    """
    Manifold point of an admitted family.

    On the Γ₂ = 0 locus (Δ = 0) the constant solution W = Γ₁ is returned
    and flagged.

    Raises:
        AdmissionError: the family is not admitted; carries the violated inequality
        DegenerateCoefficientError: β = 0, where Γ₁ and Γ₂ are undefined
    """
    family = SolitonFamily(family)
    a2 = spec.alpha2
    if a2 <= 0.0:
        raise AdmissionError("no real soliton scale", "alpha2 > 0", a2)
    beta = spec.beta
    if abs(beta) < CONSTANT_TOL:
        raise DegenerateCoefficientError("β = 0: the profile has no (Γ₁, Γ₂) representation")
    gamma1 = -2.0 * a2 / beta
    margins = admission_margins(spec)
    delta = margins["discriminant"]
    if abs(delta) <= CONSTANT_TOL * max(1.0, beta ** 2):
        logger.info(f"⚠️ Δ = 0: constant solution W = Γ₁ = {gamma1:.6g}")
        return GammaPoint(gamma1=gamma1, gamma2=0.0, family=family, branch=0, constant=True)
    if delta < 0.0:
        raise AdmissionError(f"{family.value} soliton not admitted: 4μα² + β² <= 0", "4*mu*alpha2 + beta^2 > 0", delta)
    if family == SolitonFamily.ELEVATED:
        branch, margin, inequality = -1, margins["elevated_margin"], "sqrt(4*mu*alpha2 + beta^2) > beta"
    else:
        branch, margin, inequality = 1, margins["depression_margin"], "sqrt(4*mu*alpha2 + beta^2) > -beta"
    if margin <= 0.0:
        raise AdmissionError(f"{family.value} soliton not admitted", inequality, margin)
    return GammaPoint(gamma1=gamma1, gamma2=branch * math.sqrt(delta) / beta, family=family, branch=branch)


def blow_up_location(point: GammaPoint, spec: Optional[SolitonSpec] = None) -> Optional[float]:
    """αz where 1 + Γ₂cosh(αz) vanishes, or None when the denominator never does"""
    g2 = point.gamma2
    if -1.0 <= g2 < 0.0:
        return float(np.arccosh(1.0 / abs(g2)))
    return None


def profile(grid: Grid, point: GammaPoint, spec: SolitonSpec) -> Field:
    """
    Sample W(z) = Γ₁/(1 + Γ₂cosh(αz)) on a 1-D grid centred at z = 0.

    Raises:
        BlowUpError: -1 <= Γ₂ < 0, the denominator vanishes on the real line
    """
    if grid.dim != 1:
        raise ValidationError("soliton profiles live on 1-D grids")
    if point.constant or point.gamma2 == 0.0:
        return Field(grid, np.full(grid.shape, point.gamma1))
    alpha_z = blow_up_location(point, spec)
    if alpha_z is not None:
        raise BlowUpError(alpha_z)
    alpha = spec.require_alpha()
    z = grid.axis(0)
    with np.errstate(over="ignore"):
        denom = 1.0 + point.gamma2 * np.cosh(alpha * z)
    return Field(grid, point.gamma1 / denom)


def exponential_profile(z: np.ndarray, spec: SolitonSpec, family: Union[SolitonFamily, str]) -> np.ndarray:
    """
    Uncentred forms

        w↑ =  4α³e^{αz} / (Δ - 2αβe^{αz} + α²e^{2αz})
        w↓ = -4α³e^{αz} / (Δ + 2αβe^{αz} + α²e^{2αz})

    with the signed α of the SolitonSpec. They are centred at (1/2α)·log(Δ/α²).
    """
    family = SolitonFamily(family)
    spec.require_alpha()
    alpha = spec.alpha
    beta, delta = spec.beta, spec.discriminant
    sign = 1.0 if family == SolitonFamily.ELEVATED else -1.0
    z = np.asarray(z, dtype=float)
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        e_plus = np.exp(alpha * z)
        e_minus = np.exp(-alpha * z)
        out = sign * 4.0 * alpha ** 3 / (delta * e_minus - sign * 2.0 * alpha * beta + alpha ** 2 * e_plus)
    return np.where(np.isfinite(out), out, 0.0)


def exponential_centre(spec: SolitonSpec) -> float:
    """Centre (1/2α)·log(Δ/α²) of the uncentred forms"""
    alpha = spec.alpha
    if alpha is None or spec.discriminant <= 0.0:
        raise ValidationError("the exponential forms need α² > 0 and Δ > 0")
    return math.log(spec.discriminant / spec.alpha2) / (2.0 * alpha)


def reflection_shift(spec: SolitonSpec) -> float:
    """Translation (1/α)·log(4μ + β²/α²) that reproduces z -> -z on the uncentred forms"""
    return 2.0 * exponential_centre(spec)


def _d(w: Field, order: int = 1) -> np.ndarray:
    return spectral_derivative(w, 0, order).values


def ode_residual(w: Field, spec: SolitonSpec) -> float:
    """sup |α²w² + βw³ - μw⁴ - (w')²|"""
    v = w.values
    wz = _d(w)
    res = spec.alpha2 * v ** 2 + spec.beta * v ** 3 - spec.mu * v ** 4 - wz ** 2
    return norm_linf(res)


def soliton2_residual(w: Field, spec: SolitonSpec) -> float:
    """sup |(c²-1)w + (3c/2)(κc-1)w² + (K/3)w³ + (σ̂-⅓)w''|"""
    c, kappa = spec.c, spec.kappa
    v = w.values
    res = ((c ** 2 - 1.0) * v + 1.5 * c * (kappa * c - 1.0) * v ** 2
           + spec.cubic / 3.0 * v ** 3 + spec.dispersion * _d(w, 2))
    return norm_linf(res)


def symmetry_orbit(w: Field, spec: SolitonSpec, which: str, shift: float = 0.0) -> Tuple[Field, SolitonSpec]:
    """
    Apply one symmetry of the travelling-wave equation.

        G1: w -> -w,      β -> -β   (c, κ) -> (-c, -κ)
        G2: α -> -α
        G3: z -> z + shift
        G4: z -> -z
    """
    which = which.upper()
    if which == "G1":
        return Field(w.grid, -w.values), spec.reflected()
    if which == "G2":
        return w.copy(), spec.flipped_alpha()
    if which == "G3":
        return w.shift(shift), spec
    if which == "G4":
        return w.reflect(), spec
    raise ValidationError(f"unknown symmetry {which!r}; choose one of {SYMMETRIES}")


def travelling_pde_residual(point: GammaPoint, spec: SolitonSpec, grid: Grid) -> float:
    """
    sup-norm residual of the slow-variable equation for ξ(X, T) = f(X - cT), f' = W.

    Time derivatives follow the chain rule (ξ_T = -cW, ξ_TT = c²W'); the
    equation itself is evaluated by `boussinesq_rhs_long3` with κ, σ̂ and the
    cubic coefficient of the SolitonSpec.

    Raises:
        BlowUpError: the point lies on a blow-up branch
    """
    w = profile(grid, point, spec)
    xi = antiderivative(w)
    xi_T = Field(grid, -spec.c * w.values)
    params = DimensionlessParams(sigma_hat=spec.sigma_hat, kappa_vort=spec.kappa, cubic=spec.cubic)
    _, xi_TT = boussinesq_rhs_long3(xi, xi_T, params)
    expected = spec.c ** 2 * _d(w)
    res = norm_linf(xi_TT.values - expected)
    logger.debug(f"📊 travelling-wave residual {res:.3e} for Γ = ({point.gamma1:.6g}, {point.gamma2:.6g})")
    return res


def tail_bound(z: Union[float, np.ndarray], point: GammaPoint, spec: SolitonSpec) -> np.ndarray:
    """
    Sharp cosh tail bound 2|Γ₁|e^{-α|z|} / (|Γ₂| - 2e^{-α|z|}); infinite where
    |Γ₂| <= 2e^{-α|z|}.
    """
    alpha = spec.require_alpha()
    decay = np.exp(-alpha * np.abs(np.asarray(z, dtype=float)))
    gap = abs(point.gamma2) - 2.0 * decay
    with np.errstate(divide="ignore"):
        return np.where(gap > 0.0, 2.0 * abs(point.gamma1) * decay / np.where(gap > 0.0, gap, 1.0), np.inf)


def soliton_grid(spec: SolitonSpec, N: int = 1024, widths: float = 40.0) -> Grid:
    """Grid over [-widths/α, widths/α)"""
    return make_grid(1, widths / spec.require_alpha(), N)
