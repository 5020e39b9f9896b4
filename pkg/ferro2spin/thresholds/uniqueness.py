"""
Uniqueness Module - Boundary-field curves g_0, g_1 and per-degree verdicts
"""
import math
from typing import Dict, List

from ferro2spin.errors import DBelowCritical, SpinSystemError
from ferro2spin.spin_core.system import SpinParams
from ferro2spin.thresholds.critical import critical_x_pair, delta_c

UNIQUE = 'unique'
NON_UNIQUE = 'non-unique'
BOUNDARY = 'boundary'

BRANCHES = ('lower', 'upper')


def _branch_x(params: SpinParams, d: float, branch: str) -> float:
    if branch not in BRANCHES:
        raise SpinSystemError(f"branch must be one of {BRANCHES}, got '{branch}'")
    pair = critical_x_pair(params, d)
    if pair is None:
        raise DBelowCritical(f"d = {d} is below Delta_c = {delta_c(params)}")
    return pair[0] if branch == 'lower' else pair[1]


def boundary_field(params: SpinParams, d: float, branch: str) -> float:
    """
    g_i(d) = x_i ((x_i + gamma)/(beta x_i + 1))^d: the field at which f_d is
    tangent to the diagonal at x_i. 'lower' gives g_0 (root x_0), 'upper' g_1.
    """
    x = _branch_x(params, d, branch)
    log_g = math.log(x) + d * (math.log(x + params.gamma) - math.log(params.beta * x + 1))
    return math.inf if log_g > 709 else math.exp(log_g)


def boundary_log_derivative(params: SpinParams, d: float, branch: str) -> float:
    """g_i'(d) / g_i(d) = log((x_i + gamma)/(beta x_i + 1))."""
    x = _branch_x(params, d, branch)
    return math.log((x + params.gamma) / (params.beta * x + 1))


def uniqueness_at_degree(params: SpinParams, lam: float, d: int) -> str:
    """
    Verdict for the infinite d-regular tree, whose recursion runs at degree d-1:
    unique when d-1 < Delta_c, otherwise unique iff lambda > g_0(d-1) or lambda < g_1(d-1).
    """
    params.require_beta_le_gamma()
    if d < 2 or int(d) != d:
        raise SpinSystemError(f"tree degree must be an integer >= 2, got {d}")
    k = d - 1
    if critical_x_pair(params, k) is None:
        return UNIQUE
    g0 = boundary_field(params, k, 'lower')
    g1 = boundary_field(params, k, 'upper')
    if math.isclose(lam, g0, rel_tol=1e-12) or math.isclose(lam, g1, rel_tol=1e-12):
        return BOUNDARY
    if lam > g0 or lam < g1:
        return UNIQUE
    return NON_UNIQUE


def nonunique_windows(params: SpinParams, d_max: int) -> List[Dict]:
    """[g_1(k), g_0(k)] for every integer recursion degree k from ceil(Delta_c) to d_max."""
    params.require_beta_le_gamma()
    windows = []
    for k in range(max(1, math.ceil(delta_c(params) - 1e-9)), d_max + 1):
        if critical_x_pair(params, k) is None:
            continue
        windows.append({
            'recursion_degree': k,
            'tree_degree': k + 1,
            'g1': boundary_field(params, k, 'upper'),
            'g0': boundary_field(params, k, 'lower'),
        })
    return windows
