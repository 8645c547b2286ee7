"""
Uniform periodic grids over the box [-L, L)^dim and their dual wavenumber lattice.

A wavenumber k lies on the dual lattice when every component equals π·m/L_axis
for an integer m with |m| <= N_axis/2. The FFT ordering used by numpy covers
m = -N/2 .. N/2-1; the Nyquist pair ±N/2 is the same discrete mode, so the
lattice test accepts both signs and the lattice is closed under negation.
"""

import logging
from typing import List, Sequence, Tuple, Union

import numpy as np
from pydantic import Field, field_validator, model_validator

from ..models.base import BaseWaveModel, ValidationError

logger = logging.getLogger(__name__)

LATTICE_TOL = 1e-9


def is_power_of_two(n: int) -> bool:
    return n > 0 and (n & (n - 1)) == 0


class Grid(BaseWaveModel):
    """Uniform periodic sampling of the horizontal coordinate(s)"""

    dim: int = Field(..., ge=1, le=2, description="Horizontal dimensions (fluid dimension n = dim + 1)")
    L: Tuple[float, ...] = Field(..., description="Box half-period per axis")
    N: Tuple[int, ...] = Field(..., description="Samples per axis, power of two, at least 8")

    class Config:
        frozen = True

    @field_validator("L")
    @classmethod
    def _positive_half_period(cls, v: Tuple[float, ...]) -> Tuple[float, ...]:
        if any(not np.isfinite(x) or x <= 0 for x in v):
            raise ValueError(f"box half-period must be positive, got {v}")
        return v

    @field_validator("N")
    @classmethod
    def _power_of_two(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        for n in v:
            if n < 8 or not is_power_of_two(n):
                raise ValueError(f"N must be a power of two and >= 8, got {n}")
        return v

    @model_validator(mode="after")
    def _axes_match(self) -> "Grid":
        if len(self.L) != self.dim or len(self.N) != self.dim:
            raise ValueError(f"L and N need {self.dim} entries, got L={self.L}, N={self.N}")
        return self

    # ---- geometry ----

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(self.N)

    @property
    def size(self) -> int:
        return int(np.prod(self.N))

    @property
    def spacing(self) -> Tuple[float, ...]:
        """Δx = 2L/N per axis"""
        return tuple(2.0 * l / n for l, n in zip(self.L, self.N))

    @property
    def cell_volume(self) -> float:
        return float(np.prod(self.spacing))

    @property
    def box_volume(self) -> float:
        return float(np.prod([2.0 * l for l in self.L]))

    def axis(self, axis: int = 0) -> np.ndarray:
        """1-D node coordinates x_j = -L + jΔx"""
        return -self.L[axis] + self.spacing[axis] * np.arange(self.N[axis])

    @property
    def nodes(self) -> Tuple[np.ndarray, ...]:
        """Node coordinates broadcast to the full grid shape"""
        return tuple(np.meshgrid(*[self.axis(a) for a in range(self.dim)], indexing="ij"))

    # ---- dual lattice ----

    def wavenumbers(self, axis: int = 0) -> np.ndarray:
        """Wavenumbers π·m/L in FFT order, m = -N/2 .. N/2-1"""
        return 2.0 * np.pi * np.fft.fftfreq(self.N[axis], d=self.spacing[axis])

    @property
    def wavevectors(self) -> Tuple[np.ndarray, ...]:
        """Wavenumber components broadcast to the spectral grid shape"""
        return tuple(np.meshgrid(*[self.wavenumbers(a) for a in range(self.dim)], indexing="ij"))

    @property
    def kappa(self) -> np.ndarray:
        """|k| over the spectral grid"""
        return np.sqrt(sum(k ** 2 for k in self.wavevectors))

    @property
    def dual_lattice(self) -> np.ndarray:
        """All lattice wavevectors in FFT order, shape (size, dim)"""
        return np.stack([k.ravel() for k in self.wavevectors], axis=-1)

    def lattice_index(self, k: Union[float, Sequence[float]]) -> Tuple[int, ...]:
        """Integer lattice coordinates m of a wavevector; rejects off-lattice k"""
        kv = np.atleast_1d(np.asarray(k, dtype=float))
        if kv.shape != (self.dim,):
            raise ValidationError(f"wavevector needs {self.dim} components, got {kv.tolist()}")
        m = kv * np.asarray(self.L) / np.pi
        mi = np.rint(m)
        if np.any(np.abs(m - mi) > LATTICE_TOL) or np.any(np.abs(mi) > np.asarray(self.N) // 2):
            raise ValidationError(
                "wavevector is off the dual lattice",
                [{"k": kv.tolist(), "m": m.tolist(), "N": list(self.N)}],
            )
        return tuple(int(x) for x in mi)

    def contains(self, k: Union[float, Sequence[float]]) -> bool:
        try:
            self.lattice_index(k)
        except ValidationError:
            return False
        return True

    def lattice_modes(self, m_max: int) -> List[Tuple[float, ...]]:
        """Symmetric lattice sweep |m_axis| <= m_max in lexicographic order"""
        m_max = min(m_max, min(self.N) // 2 - 1)
        ranges = [np.arange(-m_max, m_max + 1)] * self.dim
        mesh = np.meshgrid(*ranges, indexing="ij")
        scale = np.pi / np.asarray(self.L)
        return [tuple(float(v) for v in np.asarray(m) * scale) for m in zip(*[a.ravel() for a in mesh])]


def make_grid(dim: int, L: Union[float, Sequence[float]], N: Union[int, Sequence[int]]) -> Grid:
    """
    Build a uniform periodic grid.

    Args:
        dim: 1 or 2 horizontal dimensions
        L: half-period, scalar (same on every axis) or per axis
        N: samples per axis, scalar or per axis

    Returns:
        Grid with spacing 2L/N and its dual lattice

    Raises:
        ValidationError: N not a power of two, nonpositive L or mismatched axes
    """
    Ls = tuple(float(x) for x in np.broadcast_to(np.asarray(L, dtype=float), (dim,)))
    Ns = tuple(int(x) for x in np.broadcast_to(np.asarray(N), (dim,)))
    if any(float(n) != float(int(n)) for n in np.atleast_1d(N)):
        raise ValidationError(f"N must be an integer, got {N}")
    try:
        grid = Grid(dim=dim, L=Ls, N=Ns)
    except Exception as e:
        raise ValidationError(f"invalid grid (dim={dim}, L={L}, N={N})", [{"detail": str(e)}]) from e
    logger.debug(f"🔧 grid dim={dim} L={Ls} N={Ns}")
    return grid
