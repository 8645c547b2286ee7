"""Periodic grids, spectral fields and box quadrature"""

from .grid import Grid, make_grid
from .spectral import (
    Field,
    antiderivative,
    fourier_integral,
    norm_hs,
    norm_l1,
    norm_l2,
    norm_linf,
    spectral_derivative,
)
