"""Graded Hamiltonian long-wave hierarchy and its long-wave reductions"""

from .integrator import ImplicitMidpoint, Trajectory, evolve, step
from .order import HierarchyState, OrderTag
from .systems import functional_gradient_check, hamiltonian, hierarchy_rhs
