from .limit import dispersion_omega2, linear_evolve, linear_relation_residual, nonlinear_bernoulli_norm
from .sweep import estimate_sweep, linear_limit_sweep
