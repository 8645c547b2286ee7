"""
Coefficient matrices A and B of the expanded global relation and Bernoulli condition

The kinematic relation expands as η_t + Σ εⁿδᵐ A_nm = 0 with
A_nm = P_nm + L_nm[η_t], where P_nm collects the terms free of η_t and L_nm
is linear in η_t. The dynamic condition expands as ξ_t + Σ εⁿδᵐ B_nm = 0.
Solving the first for η_t grade by grade (substituting lower-grade η_t into
L_nm) rebuilds the evolution systems.
"""

import logging
from typing import Dict, Optional, Tuple, Union

import numpy as np

from ..field.spectral import Field, spectral_derivative
from ..models.params import DimensionlessParams
from .order import HierarchyState, OrderTag

logger = logging.getLogger(__name__)

Grade = Tuple[int, int]

# grades displayed in the expansion, beyond the implemented orders
DISPLAYED: Tuple[Grade, ...] = ((0, 0), (0, 2), (1, 0), (1, 1), (1, 2), (2, 2))


def _d(values: np.ndarray, grid, order: int = 1) -> np.ndarray:
    return spectral_derivative(Field(grid, values), 0, order).values


def _xi_d(s: HierarchyState, order: int) -> np.ndarray:
    return spectral_derivative(s.xi, 0, order).values


def eta_t_free_part(s: HierarchyState, grade: Grade, p: DimensionlessParams) -> np.ndarray:
    """P_nm: the part of A_nm without η_t"""
    grid, eta = s.grid, s.eta.values
    if grade == (0, 0):
        return _xi_d(s, 2)
    if grade == (0, 2):
        return -_xi_d(s, 4) / 6.0
    if grade == (1, 0):
        return _d(eta * _xi_d(s, 1), grid)
    if grade == (1, 1):
        # γ factored out
        return -eta * _d(eta, grid)
    if grade == (1, 2):
        return -0.5 * _d(eta * _xi_d(s, 1), grid, 3)
    if grade == (2, 2):
        return -0.5 * _d(eta ** 2 * _xi_d(s, 1), grid, 3)
    return np.zeros(grid.shape)


def eta_t_linear_part(s: HierarchyState, grade: Grade, v: np.ndarray) -> np.ndarray:
    """L_nm[v]: the part of A_nm linear in η_t, applied to v"""
    grid, eta = s.grid, s.eta.values
    if grade == (0, 2):
        return -0.5 * _d(v, grid, 2)
    if grade == (1, 2):
        return -_d(eta * v, grid, 2)
    if grade == (2, 2):
        return -0.5 * _d(eta ** 2 * v, grid, 2)
    return np.zeros(grid.shape)


def dynamic_part(s: HierarchyState, grade: Grade, p: DimensionlessParams,
                 eta_t: Optional[np.ndarray] = None, eta_t_00: Optional[np.ndarray] = None) -> np.ndarray:
    """
    B_nm. Grades that involve η_t take the full η_t (for (2,2)) or its
    lowest-grade part (for (1,2)).
    """
    grid, eta = s.grid, s.eta.values
    if grade == (0, 0):
        return eta.copy()
    if grade == (0, 2):
        return -p.sigma_hat * _d(eta, grid, 2)
    if grade == (1, 0):
        return 0.5 * _xi_d(s, 1) ** 2
    if grade == (1, 1):
        return -eta * _xi_d(s, 1)
    if grade == (1, 2):
        lead = eta_t_00 if eta_t_00 is not None else -_xi_d(s, 2)
        return 0.5 * p.gamma * eta ** 2 - 0.5 * lead ** 2
    if grade == (2, 2):
        full = eta_t if eta_t is not None else -_xi_d(s, 2)
        return -full * _d(eta, grid) * _xi_d(s, 1)
    return np.zeros(grid.shape)


def coefficient_matrices(s: HierarchyState, eta_t: Field,
                         p: DimensionlessParams) -> Tuple[Dict[Grade, Field], Dict[Grade, Field]]:
    """
    Evaluate the displayed entries A_nm = P_nm + L_nm[η_t] and B_nm.

    The (1,1) entries carry their factor γ, so the grade weight is εⁿδᵐ only.

    Returns:
        (A by grade, B by grade)
    """
    A, B = {}, {}
    for grade in DISPLAYED:
        a = eta_t_free_part(s, grade, p) + eta_t_linear_part(s, grade, eta_t.values)
        if grade == (1, 1):
            a = p.gamma * a
            b = p.gamma * dynamic_part(s, grade, p)
        else:
            b = dynamic_part(s, grade, p, eta_t=eta_t.values)
        A[grade] = Field(s.grid, a)
        B[grade] = Field(s.grid, b)
    return A, B


def graded_eta_t(s: HierarchyState, order: Union[OrderTag, str], p: DimensionlessParams) -> Dict[Grade, Field]:
    """
    Grade-by-grade solution of η_t + Σ εⁿδᵐ A_nm = 0.

    η_t^[n,m] = -P_nm - Σ L_ab[η_t^[n-a, m-b]], the sum running over the
    η_t-linear grades (a,b) with a lower grade (n-a, m-b) already known.
    Terms are unweighted; the (1,1) term includes its factor γ.

    Returns:
        mapping grade -> η_t^[n,m]
    """
    order = OrderTag.parse(order)
    out: Dict[Grade, np.ndarray] = {}
    for grade in order.grades:
        n, m = grade
        term = -eta_t_free_part(s, grade, p)
        if grade == (1, 1):
            term = p.gamma * term
        for sub in ((0, 2), (1, 2), (2, 2)):
            lower = (n - sub[0], m - sub[1])
            if lower in out:
                term = term - eta_t_linear_part(s, sub, out[lower])
        out[grade] = term
        logger.debug(f"🔧 η_t grade {grade} assembled")
    return {g: Field(s.grid, v) for g, v in out.items()}


def recursive_rhs(s: HierarchyState, order: Union[OrderTag, str], p: DimensionlessParams) -> Tuple[Field, Field]:
    """
    Evolution equations rebuilt from the A and B expansions.

    η_t = Σ εⁿδᵐ η_t^[n,m] and ξ_t = -Σ εⁿδᵐ B_nm over the grades of `order`.
    The η-equation reproduces the displayed systems; the ξ-equation at (1,2)
    carries ½γη² where the displayed system has -γ²η².
    """
    order = OrderTag.parse(order)
    graded = graded_eta_t(s, order, p)
    eta_t = np.zeros(s.grid.shape)
    xi_t = np.zeros(s.grid.shape)
    lead = graded[(0, 0)].values
    for grade in order.grades:
        w = p.eps ** grade[0] * p.delta ** grade[1]
        eta_t = eta_t + w * graded[grade].values
        b = dynamic_part(s, grade, p, eta_t_00=lead)
        if grade == (1, 1):
            b = p.gamma * b
        xi_t = xi_t - w * b
    return Field(s.grid, eta_t), Field(s.grid, xi_t)
