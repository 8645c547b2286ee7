"""
Run configuration models, one block per CLI subcommand

A YAML run file holds one mapping per subcommand, keyed by the subcommand name:

    dispersion:
      h0: 1.0
      kmax: 10
    evolve:
      order: "11"
      steps: 2000

Every block inherits the shared run options (output directory, seed). Values
are merged as defaults < file section < command-line flags by the lab
ConfigManager.
"""

import math
from enum import Enum
from typing import Annotated, ClassVar, List, Optional

from pydantic import AfterValidator, Field, field_validator, model_validator

from .base import BaseWaveModel

DEFAULT_OUTPUT_DIR = "results"


def _power_of_two(n: int) -> int:
    if n < 8 or n & (n - 1):
        raise ValueError(f"N must be a power of two and >= 8, got {n}")
    return n


GridSize = Annotated[int, AfterValidator(_power_of_two)]


def _family_name(v: str) -> str:
    if v not in {"elevated", "depression"}:
        raise ValueError(f"family must be elevated or depression, got {v!r}")
    return v


FamilyName = Annotated[str, AfterValidator(_family_name)]


class ResidualMode(str, Enum):
    IRROTATIONAL = "irrotational"
    FLAT = "flat"
    ROTATIONAL = "rotational"
    MULTIVALUED = "multivalued"


class SweepMeasure(str, Enum):
    RELATION = "relation"
    BERNOULLI = "bernoulli"


class BoussinesqMode(str, Enum):
    SOLITON = "soliton"
    GROWTH = "growth"


class RunConfig(BaseWaveModel):
    """Options shared by every subcommand"""

    command: ClassVar[str] = ""

    output_dir: str = Field(DEFAULT_OUTPUT_DIR, description="Directory receiving run folders and metadata.json")
    seed: int = Field(0, ge=0, description="Random seed recorded in the manifest")
    workers: int = Field(1, ge=1, description="Thread count for sweeps over wavenumbers, ε or specs")


class DispersionConfig(RunConfig):
    """Linear dispersion relation ω²(κ) on a uniform κ grid"""

    command: ClassVar[str] = "dispersion"

    g: float = Field(9.81, gt=0, description="Gravitational acceleration")
    h0: float = Field(1.0, gt=0, description="Mean depth")
    sigma: float = Field(0.0, ge=0, description="Surface tension")
    rho: float = Field(1.0, gt=0, description="Density")
    kmax: float = Field(10.0, gt=0, description="Largest wavenumber modulus")
    n: int = Field(200, ge=2, description="Number of κ samples on [0, kmax]")


class GlobalResidualConfig(RunConfig):
    """Residuals of the nonlocal relations on a manufactured harmonic flow"""

    command: ClassVar[str] = "global-residual"

    mode: ResidualMode = Field(ResidualMode.FLAT, description="Which relation to evaluate")
    k0: float = Field(1.0, gt=0, description="Wavenumber of the harmonic mode")
    amplitude: float = Field(1.0, description="Amplitude of the harmonic potential")
    eta_amp: float = Field(0.05, description="Amplitude of η = eta_amp·cos(2πx/L)")
    gamma: float = Field(0.0, description="Constant vorticity for the rotational relations")
    h0: float = Field(1.0, gt=0, description="Mean depth")
    L: float = Field(math.pi, gt=0, description="Box half-period")
    N: GridSize = Field(256, description="Samples on the box")
    m_max: int = Field(8, ge=0, description="Lattice modes |m| <= m_max are evaluated")
    bump: float = Field(0.0, description="Standing-mode amplitude of a streamline bottom (irrotational mode)")


class LinearSweepConfig(RunConfig):
    """O(ε²) estimate sweep of the linear limit"""

    command: ClassVar[str] = "linear-sweep"

    measure: SweepMeasure = Field(SweepMeasure.RELATION, description="Measured quantity")
    epsilons: List[float] = Field([0.02, 0.01, 0.005, 0.0025], description="Strictly decreasing amplitudes")
    N: GridSize = Field(512, description="Samples on the box")
    L: float = Field(8.0 * math.pi, gt=0, description="Box half-period")
    h0: float = Field(1.0, gt=0, description="Mean depth")
    g: float = Field(9.81, gt=0, description="Gravitational acceleration")

    @field_validator("epsilons")
    @classmethod
    def _decreasing(cls, v: List[float]) -> List[float]:
        if len(v) < 2:
            raise ValueError("at least two epsilons are needed for a slope fit")
        if any(e <= 0 for e in v) or any(b >= a for a, b in zip(v, v[1:])):
            raise ValueError(f"epsilons must be positive and strictly decreasing, got {v}")
        return v


class EvolveConfig(RunConfig):
    """Implicit midpoint run of one hierarchy order"""

    command: ClassVar[str] = "evolve"

    order: str = Field("11", description="Hierarchy order nm: 00, 10, 11, 02 or 12")
    eps: float = Field(0.1, gt=0, lt=1, description="Amplitude ratio ε")
    delta: float = Field(0.1, gt=0, lt=1, description="Depth ratio δ")
    gamma: float = Field(0.0, description="Dimensionless vorticity")
    sigma_hat: float = Field(0.0, ge=0, description="Dimensionless surface tension")
    N: GridSize = Field(256, description="Samples on the box")
    L: float = Field(8.0 * math.pi, gt=0, description="Box half-period")
    dt: float = Field(0.01, description="Time step, nonzero")
    steps: int = Field(1000, ge=1, description="Number of steps")
    snapshot_every: int = Field(0, ge=0, description="Snapshot interval in steps; 0 keeps first and last")
    amplitude: float = Field(1.0, description="Amplitude of the initial sech² hump")
    noise: float = Field(0.0, ge=0, description="Amplitude of seeded smooth noise added to η")

    @field_validator("order")
    @classmethod
    def _order_digits(cls, v: str) -> str:
        digits = v.replace(",", "").strip()
        if digits not in {"00", "10", "11", "02", "12"}:
            raise ValueError(f"order must be one of 00, 10, 11, 02, 12, got {v!r}")
        return digits

    @field_validator("dt")
    @classmethod
    def _nonzero_dt(cls, v: float) -> float:
        if v == 0.0:
            raise ValueError("dt must be nonzero")
        return v


class SolitonConfig(RunConfig):
    """Shared (c, κ, σ̂, cubic) block"""

    c: float = Field(0.95, description="Wave speed")
    kappa: float = Field(0.5, description="Vorticity product κ = γδ")
    sigma_hat: float = Field(0.4, ge=0, description="Dimensionless surface tension")
    cubic: float = Field(3.0, gt=0, description="Cubic coefficient K of the slow-variable equation")


class BoussinesqConfig(SolitonConfig):
    """Time stepping of the slow-variable equation"""

    command: ClassVar[str] = "boussinesq"

    N: GridSize = Field(1024, description="Samples on the box")
    dt: float = Field(0.005, description="Time step, nonzero")
    steps: int = Field(200, ge=1, description="Number of steps")
    mode: BoussinesqMode = Field(BoussinesqMode.SOLITON, description="Translate a soliton or grow unstable modes")
    family: FamilyName = Field("elevated", description="Soliton family for mode=soliton")
    wavenumber: float = Field(4.0, gt=0, description="Target perturbation wavenumber for mode=growth")


class SolitonProfileConfig(SolitonConfig):
    """Closed-form profile on a grid of half-width 40/α"""

    command: ClassVar[str] = "soliton-profile"

    family: FamilyName = Field("elevated", description="elevated or depression")
    N: GridSize = Field(1024, description="Samples on the box")


class SolitonAtlasConfig(SolitonConfig):
    """Existence classification for one spec or a speed sweep"""

    command: ClassVar[str] = "soliton-atlas"

    c: Optional[float] = Field(None, description="Single speed; omit to sweep [c_min, c_max]")
    c_min: float = Field(0.05, description="Sweep start")
    c_max: float = Field(2.0, description="Sweep end")
    count: int = Field(100, ge=1, description="Sweep length")

    @model_validator(mode="after")
    def _range(self) -> "SolitonAtlasConfig":
        if self.c is None and self.c_max < self.c_min:
            raise ValueError(f"c_max must be >= c_min, got [{self.c_min}, {self.c_max}]")
        return self


class ManifoldConfig(SolitonConfig):
    """Sampled points of the Γ manifold with component labels"""

    command: ClassVar[str] = "manifold"

    count: int = Field(64, ge=2, description="Number of manifold samples")


COMMAND_MODELS = {
    model.command: model
    for model in (DispersionConfig, GlobalResidualConfig, LinearSweepConfig, EvolveConfig,
                  BoussinesqConfig, SolitonProfileConfig, SolitonAtlasConfig, ManifoldConfig)
}


class ConfigFile(BaseWaveModel):
    """Top-level YAML run file: one optional section per subcommand"""

    dispersion: Optional[DispersionConfig] = Field(None, description="dispersion section")
    global_residual: Optional[GlobalResidualConfig] = Field(None, alias="global-residual",
                                                            description="global-residual section")
    linear_sweep: Optional[LinearSweepConfig] = Field(None, alias="linear-sweep", description="linear-sweep section")
    evolve: Optional[EvolveConfig] = Field(None, description="evolve section")
    boussinesq: Optional[BoussinesqConfig] = Field(None, description="boussinesq section")
    soliton_profile: Optional[SolitonProfileConfig] = Field(None, alias="soliton-profile",
                                                            description="soliton-profile section")
    soliton_atlas: Optional[SolitonAtlasConfig] = Field(None, alias="soliton-atlas",
                                                        description="soliton-atlas section")
    manifold: Optional[ManifoldConfig] = Field(None, description="manifold section")

    class Config:
        populate_by_name = True
        json_schema_extra = {
            "example": {
                "dispersion": {"h0": 1.0, "g": 9.81, "kmax": 10, "n": 200},
                "soliton-atlas": {"c": 0.95, "kappa": 0.5, "sigma_hat": 0.4},
            }
        }

    def section(self, command: str) -> Optional[RunConfig]:
        return getattr(self, command.replace("-", "_"))
