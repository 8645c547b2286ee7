from .atlas import AtlasRow, Topology, gamma_manifold_atlas, sample_manifold
from .profiles import GammaPoint, gamma_point, ode_residual, profile, travelling_pde_residual
from .spec import ExistenceVerdict, Regime, SolitonFamily, SolitonSpec, classify
