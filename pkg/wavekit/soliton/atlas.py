"""
Geometry of the Γ manifold Γ₂² - (μ/α²)Γ₁² = 1 and parameter-sweep atlases

For σ̂ > ⅓ the manifold is a hyperbola with sheets Γ₂ >= 1 and Γ₂ <= -1; the
only special points are Γ₁ = 0, Γ₂ = ±1, the trivial solution. For σ̂ < ⅓ it is
an ellipse with four bifurcations: Γ₂ = 0 (constant solutions) and Γ₁ = 0
(blow-up boundary). Elevated and depression labels follow the sign rules of
each topology.
"""

import logging
import math
from enum import Enum
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import Field

from ..models.base import BaseWaveModel, DegenerateCoefficientError, ValidationError
from ..relation.residuals import map_ordered
from .profiles import GammaPoint
from .spec import Regime, SolitonSpec, classify

logger = logging.getLogger(__name__)

LABEL_TOL = 1e-12

ATLAS_COLUMNS = ("c", "kappa", "sigma_hat", "topology", "elevated_exists", "depression_exists", "Gamma1", "Gamma2")


class Topology(str, Enum):
    HYPERBOLA = "hyperbola"
    CIRCLE = "circle"
    NONE = "none"


def manifold_topology(spec: SolitonSpec) -> Topology:
    """Sign of μ/α²: positive is a hyperbola, negative an ellipse (≃ S¹)"""
    if spec.regime == Regime.NO_REAL_ALPHA:
        return Topology.NONE
    return Topology.HYPERBOLA if spec.mu_over_alpha2 > 0.0 else Topology.CIRCLE


def bifurcation_points(spec: SolitonSpec) -> List[Tuple[float, float]]:
    """Special points (Γ₁, Γ₂) of the manifold"""
    topology = manifold_topology(spec)
    if topology == Topology.NONE:
        return []
    points = [(0.0, 1.0), (0.0, -1.0)]
    if topology == Topology.CIRCLE:
        g1 = math.sqrt(spec.alpha2 / (-spec.mu))
        points += [(g1, 0.0), (-g1, 0.0)]
    return points


def component_label(gamma1: float, gamma2: float, spec: SolitonSpec) -> str:
    """
    elevated | depression | unphysical | bifurcation for a manifold point.

    Hyperbola: Γ₁Γ₂ > 0 is elevated, Γ₁Γ₂ < 0 depression. Ellipse: Γ₂ > 0 is
    physical with the family given by the sign of Γ₁; Γ₂ < 0 blows up.
    """
    topology = manifold_topology(spec)
    if topology == Topology.NONE:
        raise ValidationError("no manifold without a real soliton scale")
    if abs(gamma1) < LABEL_TOL or (topology == Topology.CIRCLE and abs(gamma2) < LABEL_TOL):
        return "bifurcation"
    if topology == Topology.HYPERBOLA:
        return "elevated" if gamma1 * gamma2 > 0.0 else "depression"
    if gamma2 < 0.0:
        return "unphysical"
    return "elevated" if gamma1 > 0.0 else "depression"


class ManifoldSample(BaseWaveModel):
    parameter: float = Field(..., description="Curve parameter (sheet parameter t or angle θ)")
    gamma1: float = Field(..., description="Γ₁")
    gamma2: float = Field(..., description="Γ₂")
    label: str = Field(..., description="Component label")

    def point(self) -> GammaPoint:
        return GammaPoint(gamma1=self.gamma1, gamma2=self.gamma2, constant=self.gamma2 == 0.0)


def sample_manifold(spec: SolitonSpec, count: int = 64, extent: float = 3.0) -> List[ManifoldSample]:
    """
    Parametrised points of Γ.

    Hyperbola: (±sinh t/√m, ±cosh t) on both sheets, t in [-extent, extent],
    m = μ/α². Ellipse: (sin θ/√-m, cos θ), θ in [0, 2π).
    """
    if count < 2:
        raise ValidationError(f"count must be >= 2, got {count}")
    topology = manifold_topology(spec)
    if topology == Topology.NONE:
        raise ValidationError("no manifold without a real soliton scale")
    m = spec.mu_over_alpha2
    samples: List[ManifoldSample] = []
    if topology == Topology.HYPERBOLA:
        per_sheet = count // 2
        ts = np.linspace(-extent, extent, per_sheet)
        for sheet in (1.0, -1.0):
            for t in ts:
                g1 = float(np.sinh(t) / math.sqrt(m))
                g2 = float(sheet * np.cosh(t))
                samples.append(ManifoldSample(parameter=float(t), gamma1=g1, gamma2=g2,
                                              label=component_label(g1, g2, spec)))
    else:
        for theta in np.linspace(0.0, 2.0 * np.pi, count, endpoint=False):
            g1 = float(np.sin(theta) / math.sqrt(-m))
            g2 = float(np.cos(theta))
            samples.append(ManifoldSample(parameter=float(theta), gamma1=g1, gamma2=g2,
                                          label=component_label(g1, g2, spec)))
    return samples


class AtlasRow(BaseWaveModel):
    """One parameter triple of an atlas sweep"""

    c: float = Field(..., description="Wave speed")
    kappa: float = Field(..., description="Vorticity product")
    sigma_hat: float = Field(..., description="Dimensionless surface tension")
    topology: Topology = Field(..., description="Manifold topology")
    regime: Regime = Field(..., description="Sign regime of α²")
    elevated_exists: bool = Field(..., description="Elevated family admitted")
    depression_exists: bool = Field(..., description="Depression family admitted")
    gamma1: Optional[float] = Field(None, description="Γ₁ = -2α²/β")
    gamma2: Optional[float] = Field(None, description="+√Δ/β, the positive-root branch value")
    bifurcations: List[Tuple[float, float]] = Field(default_factory=list, description="Special manifold points")

    @property
    def verdict(self) -> str:
        if self.elevated_exists and self.depression_exists:
            return "both exist"
        if self.elevated_exists:
            return "elevated only"
        if self.depression_exists:
            return "depression only"
        return "neither exists"

    def to_row(self) -> Tuple:
        nan = float("nan")
        return (self.c, self.kappa, self.sigma_hat, self.topology, self.elevated_exists, self.depression_exists,
                nan if self.gamma1 is None else self.gamma1, nan if self.gamma2 is None else self.gamma2)


def atlas_row(spec: SolitonSpec) -> AtlasRow:
    verdict = classify(spec.c, spec.kappa, spec.sigma_hat, spec.cubic)
    topology = manifold_topology(spec)
    gamma1 = gamma2 = None
    if topology != Topology.NONE:
        try:
            beta = spec.beta
            if abs(beta) > LABEL_TOL:
                gamma1 = -2.0 * spec.alpha2 / beta
                if spec.discriminant >= 0.0:
                    gamma2 = math.sqrt(spec.discriminant) / beta
        except DegenerateCoefficientError:
            pass
    return AtlasRow(
        c=spec.c, kappa=spec.kappa, sigma_hat=spec.sigma_hat, topology=topology, regime=verdict.regime,
        elevated_exists=verdict.elevated_exists, depression_exists=verdict.depression_exists,
        gamma1=gamma1, gamma2=gamma2, bifurcations=bifurcation_points(spec),
    )


def speed_sweep(c_min: float, c_max: float, count: int, kappa: float, sigma_hat: float,
                cubic: float = 3.0) -> List[SolitonSpec]:
    """Specs with c evenly spaced in [c_min, c_max]"""
    if count < 1:
        raise ValidationError(f"count must be >= 1, got {count}")
    return [SolitonSpec(c=float(c), kappa=kappa, sigma_hat=sigma_hat, cubic=cubic)
            for c in np.linspace(c_min, c_max, count)]


def gamma_manifold_atlas(specs: Iterable[SolitonSpec], workers: int = 1) -> List[AtlasRow]:
    """
    Classify every spec: topology, admitted families, Γ values and bifurcations.

    Args:
        specs: parameter triples to classify
        workers: thread count; rows keep the input order

    Returns:
        one AtlasRow per spec
    """
    spec_list: Sequence[SolitonSpec] = list(specs)
    logger.info(f"🚀 building Γ atlas over {len(spec_list)} parameter triples")
    rows = map_ordered(atlas_row, spec_list, workers)
    admitted = sum(1 for r in rows if r.elevated_exists or r.depression_exists)
    logger.info(f"✅ atlas done: {admitted}/{len(rows)} triples admit a soliton")
    return rows
