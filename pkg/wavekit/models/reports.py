"""
Report models: per-wavenumber residuals and O(ε^p) estimate sweeps
"""

from typing import Dict, List, Sequence

import numpy as np
from pydantic import Field, model_validator

from .base import BaseWaveModel, NumericalError


class ResidualReport(BaseWaveModel):
    """Residual of one nonlocal equation evaluated over a list of lattice wavenumbers"""

    name: str = Field("residual", description="Which equation produced the residuals")
    k_values: List[List[float]] = Field(default_factory=list, description="Lattice wavevectors, one row per k")
    real: List[float] = Field(default_factory=list, description="Re(residual) per k")
    imag: List[float] = Field(default_factory=list, description="Im(residual) per k")

    @model_validator(mode="after")
    def _lengths_match(self) -> "ResidualReport":
        if not (len(self.k_values) == len(self.real) == len(self.imag)):
            raise ValueError("k_values, real and imag must have the same length")
        return self

    @classmethod
    def from_arrays(cls, name: str, ks: Sequence, values: Sequence[complex]) -> "ResidualReport":
        vals = np.asarray(values, dtype=complex)
        rows = [list(np.atleast_1d(np.asarray(k, dtype=float))) for k in ks]
        return cls(name=name, k_values=rows, real=vals.real.tolist(), imag=vals.imag.tolist())

    @property
    def residuals(self) -> np.ndarray:
        return np.asarray(self.real) + 1j * np.asarray(self.imag)

    @property
    def sup_norm(self) -> float:
        if not self.real:
            return 0.0
        return float(np.max(np.abs(self.residuals)))

    @property
    def l2_norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.residuals) ** 2)))

    @property
    def k_max(self) -> float:
        if not self.k_values:
            return 0.0
        return float(np.max(np.linalg.norm(np.asarray(self.k_values), axis=1)))

    def value_at(self, k) -> complex:
        target = np.atleast_1d(np.asarray(k, dtype=float))
        for row, re, im in zip(self.k_values, self.real, self.imag):
            if np.allclose(row, target, rtol=0.0, atol=1e-12):
                return complex(re, im)
        raise KeyError(f"k = {target.tolist()} not in report")

    def summary(self) -> Dict[str, float]:
        return {"sup_norm": self.sup_norm, "l2_norm": self.l2_norm, "k_max": self.k_max}

    def to_rows(self) -> np.ndarray:
        """Columns k_1..k_dim, Re, Im"""
        if not self.k_values:
            return np.zeros((0, 3))
        return np.column_stack([np.asarray(self.k_values), self.real, self.imag])


class EstimateSweep(BaseWaveModel):
    """Measured error norms over a decreasing list of amplitudes, with a log-log fit"""

    name: str = Field("sweep", description="Measure that produced the errors")
    epsilons: List[float] = Field(..., min_length=2, description="Strictly decreasing amplitudes")
    errors: List[float] = Field(..., description="Nonnegative error per amplitude")

    @model_validator(mode="after")
    def _check(self) -> "EstimateSweep":
        if len(self.epsilons) != len(self.errors):
            raise ValueError("epsilons and errors must have the same length")
        if any(b >= a for a, b in zip(self.epsilons, self.epsilons[1:])):
            raise ValueError(f"epsilons must be strictly decreasing, got {self.epsilons}")
        if any(e < 0 or not np.isfinite(e) for e in self.errors):
            raise ValueError(f"errors must be finite and nonnegative, got {self.errors}")
        return self

    def _fit(self) -> np.ndarray:
        errors = np.asarray(self.errors)
        if np.any(errors == 0.0):
            raise NumericalError("cannot fit a log-log slope through a zero error (degenerate family)")
        return np.polyfit(np.log(self.epsilons), np.log(errors), 1)

    @property
    def fitted_slope(self) -> float:
        return float(self._fit()[0])

    @property
    def fitted_constant(self) -> float:
        """exp(intercept): error ≈ C·ε^slope"""
        return float(np.exp(self._fit()[1]))

    def summary(self) -> Dict[str, float]:
        return {"fitted_slope": self.fitted_slope, "fitted_constant": self.fitted_constant}

    def to_rows(self) -> np.ndarray:
        return np.column_stack([self.epsilons, self.errors])
