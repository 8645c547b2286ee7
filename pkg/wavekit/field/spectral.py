"""
Sampled fields with cached spectra, spectral derivatives, Fourier-integral
quadrature over the periodic box and box norms.

A Field may carry a secular part: values = periodic(x) + Σ_a drift_a·x_a/(2L_a).
Antiderivatives of non-zero-mean functions and graph parameterizations
X(λ) = λ + periodic(λ) are represented this way. The spectrum always refers to
the periodic part.
"""

import logging
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from ..models.base import ValidationError
from .grid import Grid

logger = logging.getLogger(__name__)


def secular_part(grid: Grid, drift: Optional[Sequence[float]]) -> np.ndarray:
    """Σ drift_a·x_a/(2L_a) over the grid"""
    out = np.zeros(grid.shape)
    for a, d in enumerate(drift or ()):
        if d != 0.0:
            out = out + d * grid.nodes[a] / (2.0 * grid.L[a])
    return out


class Field:
    """Samples of a function on the nodes of a Grid"""

    def __init__(self, grid: Grid, values, drift: Optional[Sequence[float]] = None):
        arr = np.asarray(values)
        if arr.shape != grid.shape:
            raise ValidationError(f"field shape {arr.shape} does not match grid shape {grid.shape}")
        if not (np.isrealobj(arr) or np.iscomplexobj(arr)):
            raise ValidationError(f"field values must be numeric, got dtype {arr.dtype}")
        self.grid = grid
        self._values = arr.astype(complex if np.iscomplexobj(arr) else float, copy=True)
        self._drift = tuple(float(d) for d in (drift if drift is not None else (0.0,) * grid.dim))
        if len(self._drift) != grid.dim:
            raise ValidationError(f"drift needs {grid.dim} entries, got {self._drift}")
        self._spectrum: Optional[np.ndarray] = None

    # ---- construction helpers ----

    @classmethod
    def from_function(cls, grid: Grid, func, drift: Optional[Sequence[float]] = None) -> "Field":
        return cls(grid, func(*grid.nodes), drift)

    @classmethod
    def from_spectrum(cls, grid: Grid, spectrum: np.ndarray, real: bool = True,
                      drift: Optional[Sequence[float]] = None) -> "Field":
        periodic = np.fft.ifftn(spectrum)
        if real:
            periodic = periodic.real
        return cls(grid, periodic + secular_part(grid, drift), drift)

    @classmethod
    def zeros(cls, grid: Grid) -> "Field":
        return cls(grid, np.zeros(grid.shape))

    def like(self, values, drift: Optional[Sequence[float]] = None) -> "Field":
        return Field(self.grid, values, drift)

    def copy(self) -> "Field":
        return Field(self.grid, self._values, self._drift)

    # ---- state ----

    @property
    def values(self) -> np.ndarray:
        return self._values

    @values.setter
    def values(self, new_values) -> None:
        arr = np.asarray(new_values)
        if arr.shape != self.grid.shape:
            raise ValidationError(f"field shape {arr.shape} does not match grid shape {self.grid.shape}")
        self._values = arr.astype(complex if np.iscomplexobj(arr) else float, copy=True)
        self._spectrum = None

    @property
    def drift(self) -> Tuple[float, ...]:
        return self._drift

    @property
    def is_real(self) -> bool:
        return not np.iscomplexobj(self._values)

    @property
    def secular(self) -> np.ndarray:
        return secular_part(self.grid, self._drift)

    @property
    def periodic(self) -> np.ndarray:
        if not any(self._drift):
            return self._values
        return self._values - self.secular

    @property
    def spectrum(self) -> np.ndarray:
        """Unnormalised DFT of the periodic part (cached)"""
        if self._spectrum is None:
            self._spectrum = np.fft.fftn(self.periodic)
        return self._spectrum

    def parseval_coefficients(self) -> np.ndarray:
        """Spectrum scaled so that Σ|c|² = Σ|values|²·ΔV"""
        return self.spectrum * np.sqrt(self.grid.cell_volume / self.grid.size)

    def roundtrip(self) -> np.ndarray:
        out = np.fft.ifftn(self.spectrum)
        return (out.real if self.is_real else out) + (self.secular if any(self._drift) else 0.0)

    # ---- symmetry operations ----

    def shift(self, offset: Union[float, Sequence[float]]) -> "Field":
        """Exact spectral translation: returns f(x - offset)"""
        off = np.broadcast_to(np.asarray(offset, dtype=float), (self.grid.dim,))
        phase = np.exp(-1j * sum(k * o for k, o in zip(self.grid.wavevectors, off)))
        periodic = np.fft.ifftn(self.spectrum * phase)
        if self.is_real:
            periodic = periodic.real
        const = -sum(d * o / (2.0 * l) for d, o, l in zip(self._drift, off, self.grid.L))
        return Field(self.grid, periodic + self.secular + const, self._drift)

    def reflect(self) -> "Field":
        """Returns f(-x) sampled on the same nodes"""
        periodic = self.periodic
        for a in range(self.grid.dim):
            periodic = np.roll(np.flip(periodic, axis=a), 1, axis=a)
        flipped = tuple(-d for d in self._drift)
        return Field(self.grid, periodic + secular_part(self.grid, flipped), flipped)

    def __repr__(self) -> str:
        kind = "real" if self.is_real else "complex"
        return f"Field({kind}, shape={self.grid.shape}, drift={self._drift})"


def spectral_derivative(f: Field, axis: int = 0, order: int = 1) -> Field:
    """
    Derivative by multiplication with (ik)^order in the spectrum.

    Odd orders drop the Nyquist mode so real input stays real. The secular
    part contributes drift/(2L) to first derivatives only.
    """
    if order < 1:
        raise ValidationError(f"derivative order must be >= 1, got {order}")
    if not 0 <= axis < f.grid.dim:
        raise ValidationError(f"axis {axis} out of range for dim {f.grid.dim}")
    k = f.grid.wavevectors[axis]
    mult = (1j * k) ** order
    if order % 2 == 1:
        n = f.grid.N[axis]
        nyquist = np.isclose(np.abs(k), np.pi * n / (2.0 * f.grid.L[axis]))
        mult = np.where(nyquist, 0.0, mult)
    out = np.fft.ifftn(mult * f.spectrum)
    if f.is_real:
        out = out.real
    if order == 1 and f.drift[axis] != 0.0:
        out = out + f.drift[axis] / (2.0 * f.grid.L[axis])
    return Field(f.grid, out)


def gradient(f: Field) -> Tuple[Field, ...]:
    return tuple(spectral_derivative(f, a, 1) for a in range(f.grid.dim))


def divergence(components: Sequence[Field]) -> Field:
    grid = components[0].grid
    total = sum(spectral_derivative(c, a, 1).values for a, c in enumerate(components))
    return Field(grid, total)


def laplacian(f: Field) -> Field:
    return Field(f.grid, sum(spectral_derivative(f, a, 2).values for a in range(f.grid.dim)))


def fourier_integral(f: Field, k: Union[float, Sequence[float]]) -> complex:
    """
    Trapezoidal quadrature of ∫ e^{ik·x} f(x) dx over the box.

    Raises:
        ValidationError: k off the dual lattice of f.grid
    """
    f.grid.lattice_index(k)
    return box_exponential_sum(f.values, f.grid, k)


def box_exponential_sum(values: np.ndarray, grid: Grid, k: Union[float, Sequence[float]]) -> complex:
    """ΔV·Σ values·e^{ik·x} for an already validated lattice k"""
    kv = np.atleast_1d(np.asarray(k, dtype=float))
    phase = np.exp(1j * sum(kc * x for kc, x in zip(kv, grid.nodes)))
    return complex(np.sum(values * phase) * grid.cell_volume)


def antiderivative(f: Field) -> Field:
    """
    Spectral antiderivative along axis 0 of a 1-D field.

    The periodic part has zero mean; the drift equals the box integral of f.
    """
    if f.grid.dim != 1:
        raise ValidationError("antiderivative is defined for 1-D fields")
    if any(f.drift):
        raise ValidationError("antiderivative of a field with secular part is not periodic")
    k = f.grid.wavenumbers(0)
    n = f.grid.N[0]
    spec = f.spectrum.copy()
    mean = spec[0] / n
    spec[0] = 0.0
    spec[n // 2] = 0.0
    with np.errstate(divide="ignore", invalid="ignore"):
        integ = np.where(k == 0.0, 0.0, spec / (1j * np.where(k == 0.0, 1.0, k)))
    periodic = np.fft.ifft(integ)
    if f.is_real:
        periodic = periodic.real
        mean = mean.real
    total = mean * 2.0 * f.grid.L[0]
    return Field(f.grid, periodic + secular_part(f.grid, (total,)), (total,))


# ---- box norms ----

def norm_l1(f: Union[Field, np.ndarray], grid: Optional[Grid] = None) -> float:
    values, g = _unpack(f, grid)
    return float(np.sum(np.abs(values)) * g.cell_volume)


def norm_l2(f: Union[Field, np.ndarray], grid: Optional[Grid] = None) -> float:
    values, g = _unpack(f, grid)
    return float(np.sqrt(np.sum(np.abs(values) ** 2) * g.cell_volume))


def norm_linf(f: Union[Field, np.ndarray], grid: Optional[Grid] = None) -> float:
    """sup |f|; raw arrays need no grid"""
    values = f.values if isinstance(f, Field) else np.asarray(f)
    return float(np.max(np.abs(values)))


def norm_hs(f: Field, s: float = 2.0) -> float:
    """Sobolev box norm (Σ (1+|k|²)^s |c_k|²)^½ with Parseval-normalised c_k"""
    weight = (1.0 + f.grid.kappa ** 2) ** s
    return float(np.sqrt(np.sum(weight * np.abs(f.parseval_coefficients()) ** 2)))


def _unpack(f, grid):
    if isinstance(f, Field):
        return f.values, f.grid
    if grid is None:
        raise ValidationError("a grid is required when passing raw arrays")
    return np.asarray(f), grid


def interpolate(f: Field, points) -> np.ndarray:
    """
    Evaluate a 1-D field at arbitrary points by summing its Fourier series.

    The secular part is added back exactly, so fields with drift interpolate
    consistently with their derivatives.
    """
    if f.grid.dim != 1:
        raise ValidationError("interpolation is implemented for 1-D fields")
    pts = np.asarray(points, dtype=float)
    n = f.grid.N[0]
    k = f.grid.wavenumbers(0)
    coeffs = f.spectrum / n
    # symmetric Nyquist split keeps real fields real
    weights = np.where(np.isclose(np.abs(k), np.pi * n / (2.0 * f.grid.L[0])), 0.5, 1.0)
    shift = pts[..., None] + f.grid.L[0]
    series = np.sum(coeffs * weights * np.exp(1j * k * shift), axis=-1)
    series = series + np.sum(coeffs * (1.0 - weights) * np.exp(-1j * k * shift), axis=-1)
    out = series.real if f.is_real else series
    if f.drift[0] != 0.0:
        out = out + f.drift[0] * pts / (2.0 * f.grid.L[0])
    return out
