"""
Travelling-wave coefficients of the slow-variable equation and soliton existence

A travelling wave ξ(X, T) = f(X - cT) with w = f' reduces the large-vorticity
equation to

    (w')² = α²w² + βw³ - μw⁴,
    α² = (1-c²)/(σ̂-⅓),  β = c(1-κc)/(σ̂-⅓),  μ = cubic/(6(σ̂-⅓)).

Solitary waves exist when the profile denominator never vanishes; that is the
admission test used by `classify` in every regime.
"""

import logging
import math
from enum import Enum
from typing import Dict, List, Optional, Tuple

import numpy as np
from pydantic import Field
from scipy.optimize import brentq

from ..models.base import BaseWaveModel, DegenerateCoefficientError, ValidationError

logger = logging.getLogger(__name__)

DEGENERACY = 1e-12
THRESHOLD_XTOL = 1e-14


class SolitonFamily(str, Enum):
    ELEVATED = "elevated"
    DEPRESSION = "depression"


class Regime(str, Enum):
    """Which sign combination makes α² positive"""

    SUBCRITICAL_HIGH_TENSION = "subcritical_high_tension"    # |c| < 1, σ̂ > ⅓
    SUPERCRITICAL_LOW_TENSION = "supercritical_low_tension"  # |c| > 1, σ̂ < ⅓
    NO_REAL_ALPHA = "no_real_alpha"


class SolitonSpec(BaseWaveModel):
    """Speed, vorticity product and surface tension of a travelling wave"""

    c: float = Field(..., description="Wave speed in the slow variables")
    kappa: float = Field(0.0, description="Vorticity product κ = γδ")
    sigma_hat: float = Field(..., ge=0, description="Dimensionless surface tension σ̂")
    cubic: float = Field(3.0, gt=0, description="Coefficient K of the cubic term; μ = K/(6(σ̂-⅓))")
    alpha_sign: int = Field(1, description="Branch of α = ±√α², flipped by the G2 symmetry")

    class Config:
        frozen = True

    @property
    def dispersion(self) -> float:
        """σ̂ - ⅓"""
        s = self.sigma_hat - 1.0 / 3.0
        if abs(s) < DEGENERACY:
            raise DegenerateCoefficientError("σ̂ = ⅓: the fourth-derivative term vanishes and no soliton scale exists")
        return s

    @property
    def alpha2(self) -> float:
        return (1.0 - self.c ** 2) / self.dispersion

    @property
    def beta(self) -> float:
        return self.c * (1.0 - self.kappa * self.c) / self.dispersion

    @property
    def mu(self) -> float:
        return self.cubic / (6.0 * self.dispersion)

    @property
    def alpha(self) -> Optional[float]:
        """Signed α when α² > 0, otherwise None"""
        a2 = self.alpha2
        if a2 <= 0.0:
            return None
        return math.copysign(math.sqrt(a2), self.alpha_sign)

    @property
    def discriminant(self) -> float:
        """Δ = 4μα² + β²"""
        return 4.0 * self.mu * self.alpha2 + self.beta ** 2

    @property
    def mu_over_alpha2(self) -> float:
        return self.mu / self.alpha2

    @property
    def regime(self) -> Regime:
        try:
            a2 = self.alpha2
        except DegenerateCoefficientError:
            return Regime.NO_REAL_ALPHA
        if a2 <= 0.0:
            return Regime.NO_REAL_ALPHA
        return Regime.SUBCRITICAL_HIGH_TENSION if self.sigma_hat > 1.0 / 3.0 else Regime.SUPERCRITICAL_LOW_TENSION

    def require_alpha(self) -> float:
        """|α|, or ValidationError when α² <= 0"""
        a = self.alpha
        if a is None:
            raise ValidationError(
                "no real soliton scale: α² <= 0",
                [{"c": self.c, "sigma_hat": self.sigma_hat, "alpha2": self.alpha2}],
            )
        return abs(a)

    def derived(self) -> Dict[str, float]:
        """α², β, μ, Δ as a flat mapping for reports"""
        return {"alpha2": self.alpha2, "beta": self.beta, "mu": self.mu, "discriminant": self.discriminant}

    def reflected(self) -> "SolitonSpec":
        """(c, κ) -> (-c, -κ): β changes sign, α² and μ do not"""
        return self.model_copy(update={"c": -self.c, "kappa": -self.kappa})

    def flipped_alpha(self) -> "SolitonSpec":
        return self.model_copy(update={"alpha_sign": -self.alpha_sign})


class ExistenceVerdict(BaseWaveModel):
    """Which soliton families a parameter triple admits"""

    elevated_exists: bool = Field(..., description="Elevated (w > 0) family admitted")
    depression_exists: bool = Field(..., description="Depression (w < 0) family admitted")
    regime: Regime = Field(..., description="Sign regime of α²")
    binding_inequalities: Dict[str, float] = Field(
        default_factory=dict, description="Evaluated admission margins and κ thresholds"
    )

    def exists(self, family: SolitonFamily) -> bool:
        family = SolitonFamily(family)
        return self.elevated_exists if family == SolitonFamily.ELEVATED else self.depression_exists

    @property
    def summary(self) -> str:
        if self.elevated_exists and self.depression_exists:
            return "both exist"
        if self.elevated_exists:
            return "elevated only"
        if self.depression_exists:
            return "depression only"
        return "neither exists"


def coefficients(c: float, kappa: float, sigma_hat: float, cubic: float = 3.0) -> SolitonSpec:
    """
    Build a SolitonSpec and check it is not dispersionless.

    Raises:
        DegenerateCoefficientError: σ̂ = ⅓
    """
    spec = SolitonSpec(c=c, kappa=kappa, sigma_hat=sigma_hat, cubic=cubic)
    _ = spec.dispersion
    return spec


def admission_margins(spec: SolitonSpec) -> Dict[str, float]:
    """
    Margins whose positivity admits each family.

    The elevated profile -2α²/(β - √Δ cosh αz) has a sign-definite denominator
    iff √Δ > β; the depression profile -2α²/(β + √Δ cosh αz) iff √Δ > -β.
    """
    delta = spec.discriminant
    root = math.sqrt(delta) if delta > 0.0 else float("nan")
    return {
        "alpha2": spec.alpha2,
        "discriminant": delta,
        "elevated_margin": root - spec.beta,
        "depression_margin": root + spec.beta,
    }


def kappa_threshold(c: float, sigma_hat: float, family: SolitonFamily, cubic: float = 3.0) -> float:
    """
    Closed-form κ threshold in the low-tension regime (c > 1, σ̂ < ⅓).

    Elevated solitons need κ below 1/c - √(2K/3)·√(1-1/c²)/c, depression
    solitons need κ above 1/c + √(2K/3)·√(1-1/c²)/c.
    """
    if c <= 1.0 or sigma_hat >= 1.0 / 3.0:
        raise ValidationError(
            "κ thresholds are defined for c > 1 and σ̂ < ⅓", [{"c": c, "sigma_hat": sigma_hat}]
        )
    width = math.sqrt(2.0 * cubic / 3.0) * math.sqrt(1.0 - 1.0 / c ** 2) / c
    if SolitonFamily(family) == SolitonFamily.ELEVATED:
        return 1.0 / c - width
    return 1.0 / c + width


def solve_kappa_threshold(c: float, sigma_hat: float, family: SolitonFamily, cubic: float = 3.0) -> float:
    """
    The same threshold found numerically: the root of Δ(κ) = 0 on the side of
    κ = 1/c belonging to the family, by brentq.
    """
    if c <= 1.0 or sigma_hat >= 1.0 / 3.0:
        raise ValidationError(
            "κ thresholds are defined for c > 1 and σ̂ < ⅓", [{"c": c, "sigma_hat": sigma_hat}]
        )

    def discriminant(kappa: float) -> float:
        spec = SolitonSpec(c=c, kappa=kappa, sigma_hat=sigma_hat, cubic=cubic)
        # Δ·(σ̂-⅓)² keeps the bracket values O(1)
        return spec.discriminant * spec.dispersion ** 2

    reach = 1.0 + 2.0 * math.sqrt(2.0 * cubic / 3.0)
    centre = 1.0 / c
    if SolitonFamily(family) == SolitonFamily.ELEVATED:
        return float(brentq(discriminant, centre - reach, centre, xtol=THRESHOLD_XTOL, rtol=4 * np.finfo(float).eps))
    return float(brentq(discriminant, centre, centre + reach, xtol=THRESHOLD_XTOL, rtol=4 * np.finfo(float).eps))


def classify(c: float, kappa: float, sigma_hat: float, cubic: float = 3.0) -> ExistenceVerdict:
    """
    Existence of elevated and depression solitons for (c, κ, σ̂).

    High tension with |c| < 1 admits both families for any κ; low tension with
    |c| > 1 admits at most one, decided by the κ thresholds. σ̂ = ⅓ or α² <= 0
    admits neither.
    """
    spec = SolitonSpec(c=c, kappa=kappa, sigma_hat=sigma_hat, cubic=cubic)
    regime = spec.regime
    if regime == Regime.NO_REAL_ALPHA:
        return ExistenceVerdict(elevated_exists=False, depression_exists=False, regime=regime)
    margins = admission_margins(spec)
    admitted = margins["discriminant"] > 0.0
    elevated = bool(admitted and margins["elevated_margin"] > 0.0)
    depression = bool(admitted and margins["depression_margin"] > 0.0)
    if regime == Regime.SUPERCRITICAL_LOW_TENSION and c > 1.0:
        margins["kappa_elevated_max"] = kappa_threshold(c, sigma_hat, SolitonFamily.ELEVATED, cubic)
        margins["kappa_depression_min"] = kappa_threshold(c, sigma_hat, SolitonFamily.DEPRESSION, cubic)
    verdict = ExistenceVerdict(
        elevated_exists=elevated, depression_exists=depression, regime=regime, binding_inequalities=margins
    )
    logger.debug(f"📊 classify c={c}, κ={kappa}, σ̂={sigma_hat}: {verdict.summary}")
    return verdict


def admissible_speed_interval(kappa: float, sigma_hat: float, family: SolitonFamily, c_max: float = 10.0,
                              cubic: float = 3.0, samples: int = 2000) -> List[Tuple[float, float]]:
    """
    Speeds c in (1, c_max] at which the family exists for fixed κ and σ̂ < ⅓.

    Sign changes of κ - threshold(c) on a fine scan are refined with brentq.

    Returns:
        list of (c_low, c_high) intervals, empty when no speed is admitted
    """
    family = SolitonFamily(family)
    if sigma_hat >= 1.0 / 3.0:
        raise ValidationError("speed intervals are computed in the low-tension regime σ̂ < ⅓")
    if c_max <= 1.0:
        raise ValidationError(f"c_max must exceed 1, got {c_max}")
    sign = 1.0 if family == SolitonFamily.DEPRESSION else -1.0

    def margin(c: float) -> float:
        return sign * (kappa - kappa_threshold(c, sigma_hat, family, cubic))

    cs = np.linspace(1.0 + 1e-9, c_max, samples)
    values = np.array([margin(c) for c in cs])
    intervals: List[Tuple[float, float]] = []
    start = cs[0] if values[0] > 0 else None
    for i in range(1, len(cs)):
        if (values[i - 1] > 0) != (values[i] > 0):
            root = float(brentq(margin, cs[i - 1], cs[i], xtol=THRESHOLD_XTOL))
            if values[i] > 0:
                start = root
            else:
                intervals.append((float(start), root))
                start = None
    if start is not None:
        intervals.append((float(start), float(c_max)))
    return intervals
