"""
Amplitude sweeps: evaluate a measure over a scaled family and fit the log-log slope
"""

import logging
from typing import Any, Callable, Optional, Sequence

import numpy as np

from ..field.grid import Grid, make_grid
from ..models.base import ValidationError
from ..models.params import PhysicalParams
from ..models.reports import EstimateSweep
from ..relation.residuals import map_ordered
from ..surface.manufactured import wave_packet_state
from ..surface.state import SurfaceState
from .limit import linear_relation_residual, nonlinear_bernoulli_norm

logger = logging.getLogger(__name__)

MIN_POINTS = 4
SWEEP_EPSILONS = (0.02, 0.01, 0.005, 0.0025)


def estimate_sweep(state_family: Callable[[float], Any], measure: Callable[[Any], float],
                   epsilons: Sequence[float], name: str = "sweep", workers: int = 1) -> EstimateSweep:
    """
    Measure each member of a scaled family and fit error ≈ C·ε^slope.

    Args:
        state_family: ε -> state
        measure: state -> nonnegative error
        epsilons: strictly decreasing amplitudes, at least four
        name: label stored on the sweep
        workers: thread count; members are independent

    Returns:
        EstimateSweep with the fitted slope available

    Raises:
        ValidationError: fewer than four amplitudes or not strictly decreasing
        NumericalError: a measured error is zero (degenerate family)
    """
    eps = [float(e) for e in epsilons]
    if len(eps) < MIN_POINTS:
        raise ValidationError(f"a sweep needs at least {MIN_POINTS} amplitudes, got {len(eps)}")

    def member(e: float) -> float:
        return float(measure(state_family(e)))

    logger.info(f"🚀 sweep '{name}' over ε = {eps}")
    errors = map_ordered(member, eps, workers)
    try:
        sweep = EstimateSweep(name=name, epsilons=eps, errors=errors)
    except Exception as e:
        raise ValidationError(f"invalid sweep '{name}'", [{"detail": str(e)}]) from e
    slope = sweep.fitted_slope
    logger.info(f"✅ sweep '{name}' fitted slope {slope:.4f}")
    return sweep


def packet_family(grid: Optional[Grid] = None, h0: float = 1.0) -> Callable[[float], SurfaceState]:
    """ε -> wave_packet_state(ε) on a shared grid, default L = 8π, N = 512"""
    grid = grid if grid is not None else make_grid(1, 8.0 * np.pi, 512)
    return lambda eps: wave_packet_state(eps, grid, h0=h0)


MEASURES = {
    "relation": linear_relation_residual,
    "bernoulli": nonlinear_bernoulli_norm,
}


def linear_limit_sweep(measure: str, p: PhysicalParams, epsilons: Sequence[float] = SWEEP_EPSILONS,
                       grid: Optional[Grid] = None, workers: int = 1) -> EstimateSweep:
    """
    O(ε²) check of one linear-limit measure on the packet family.

    Args:
        measure: "relation" or "bernoulli"
        p: flat-bottom parameters
    """
    if measure not in MEASURES:
        raise ValidationError(f"unknown measure '{measure}'", [{"choices": sorted(MEASURES)}])
    p.require_flat_bottom("linear_limit_sweep")
    fn = MEASURES[measure]
    return estimate_sweep(packet_family(grid, p.h0), lambda s: fn(s, p), epsilons, name=measure, workers=workers)
