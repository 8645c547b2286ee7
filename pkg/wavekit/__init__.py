"""
wavekit - nonlocal global relations for water waves with constant vorticity

Spectral residuals of the global relations, their linear limit, the graded
long-wave hierarchy with its implicit midpoint integrator, and the closed-form
soliton families of the large-vorticity Boussinesq-type equation.
"""

__version__ = "0.1.0"

from .field.grid import Grid, make_grid
from .field.spectral import Field, antiderivative, fourier_integral, spectral_derivative
from .hierarchy.integrator import evolve, step
from .hierarchy.order import HierarchyState, OrderTag
from .hierarchy.systems import functional_gradient_check, hamiltonian, hierarchy_rhs
from .linear.limit import dispersion_omega2, linear_evolve, linear_relation_residual, nonlinear_bernoulli_norm
from .linear.sweep import estimate_sweep
from .models.base import (
    AdmissionError,
    BlowUpError,
    ConvergenceError,
    CuspError,
    DegenerateCoefficientError,
    NumericalError,
    OverflowGuardError,
    ValidationError,
    WavekitError,
)
from .models.params import DimensionlessParams, PhysicalParams, nondimensionalize
from .models.reports import EstimateSweep, ResidualReport
from .relation.bernoulli import (
    bernoulli_residual_irrotational,
    bernoulli_residual_multivalued,
    bernoulli_residual_rotational,
)
from .relation.residuals import flat_bottom_residual, irrotational_residuals, multivalued_residual, rotational_residual
from .soliton.atlas import gamma_manifold_atlas
from .soliton.profiles import GammaPoint, gamma_point, ode_residual, profile, travelling_pde_residual
from .soliton.spec import ExistenceVerdict, SolitonFamily, SolitonSpec, classify
from .surface.state import ParametricSurface, SurfaceState

__all__ = [
    # Grids and fields
    "Grid", "make_grid", "Field", "spectral_derivative", "fourier_integral", "antiderivative",
    # Parameters and reports
    "PhysicalParams", "DimensionlessParams", "nondimensionalize", "ResidualReport", "EstimateSweep",
    # Surfaces
    "SurfaceState", "ParametricSurface",
    # Global relations
    "irrotational_residuals", "flat_bottom_residual", "rotational_residual", "multivalued_residual",
    "bernoulli_residual_irrotational", "bernoulli_residual_rotational", "bernoulli_residual_multivalued",
    # Linear limit
    "dispersion_omega2", "linear_evolve", "linear_relation_residual", "nonlinear_bernoulli_norm", "estimate_sweep",
    # Hierarchy
    "OrderTag", "HierarchyState", "hierarchy_rhs", "hamiltonian", "functional_gradient_check", "step", "evolve",
    # Solitons
    "SolitonSpec", "SolitonFamily", "ExistenceVerdict", "GammaPoint", "classify", "gamma_point", "profile",
    "ode_residual", "travelling_pde_residual", "gamma_manifold_atlas",
    # Errors
    "WavekitError", "ValidationError", "AdmissionError", "NumericalError", "CuspError", "BlowUpError",
    "ConvergenceError", "OverflowGuardError", "DegenerateCoefficientError",
]
