from .kinematics import recover_gradient_irrotational, recover_gradient_rotational, recover_multivalued
from .state import ParametricSurface, SurfaceState
