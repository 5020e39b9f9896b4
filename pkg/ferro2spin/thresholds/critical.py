"""
Critical Quantities Module - Delta_c, lambda_c and its integral variants, tangency pairs
"""
import logging
import math
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from ferro2spin.spin_core.system import SpinParams
from ferro2spin.tree_engine.recursion import eval_f, eval_f_prime, eval_f_second

logger = logging.getLogger(__name__)

INTEGER_TOL = 1e-9


@dataclass(frozen=True)
class ThresholdReport:
    beta: float
    gamma: float
    delta_c: float
    lambda_c: float
    lambda_c_int: float
    lambda_c_int_prime: float
    delta_c_is_integer: bool
    # g_1(ceil(Delta_c)): below it every integer-degree tree is unique
    uniqueness_bound: float
    first_nonunique_window: Tuple[float, float]

    def to_dict(self) -> Dict:
        return {
            'beta': self.beta,
            'gamma': self.gamma,
            'delta_c': self.delta_c,
            'lambda_c': self.lambda_c,
            'lambda_c_int': self.lambda_c_int,
            'lambda_c_int_prime': self.lambda_c_int_prime,
            'delta_c_is_integer': self.delta_c_is_integer,
            'uniqueness_bound': self.uniqueness_bound,
            'first_nonunique_window': list(self.first_nonunique_window),
        }


def delta_c(params: SpinParams) -> float:
    s = math.sqrt(params.bg)
    return (s + 1) / (s - 1)


def lambda_c(params: SpinParams) -> float:
    return (params.gamma / params.beta) ** ((delta_c(params) + 1) / 2)


def integer_delta_c(params: SpinParams) -> Tuple[bool, int, int]:
    """(is integer, ceil(Delta_c), floor(Delta_c + 1)) with a tolerance for integer inputs."""
    dc = delta_c(params)
    nearest = round(dc)
    if abs(dc - nearest) < INTEGER_TOL:
        return True, nearest, nearest + 1
    return False, math.ceil(dc), math.floor(dc + 1)


def compute_thresholds(params: SpinParams) -> ThresholdReport:
    from ferro2spin.thresholds.uniqueness import boundary_field

    params.require_beta_le_gamma()
    dc = delta_c(params)
    ratio = params.gamma / params.beta
    is_int, ceil_dc, floor_dc1 = integer_delta_c(params)
    if is_int:
        logger.info(f"Delta_c = {dc} is an integer; lambda_c_int and lambda_c_int_prime differ")
    g1 = boundary_field(params, ceil_dc, 'upper')
    g0 = boundary_field(params, ceil_dc, 'lower')
    return ThresholdReport(
        beta=params.beta,
        gamma=params.gamma,
        delta_c=dc,
        lambda_c=ratio ** ((dc + 1) / 2),
        lambda_c_int=ratio ** ((ceil_dc + 1) / 2),
        lambda_c_int_prime=ratio ** ((floor_dc1 + 1) / 2),
        delta_c_is_integer=is_int,
        uniqueness_bound=g1,
        first_nonunique_window=(g1, g0),
    )


def inflection_point(params: SpinParams, d: float) -> float:
    """x* where f_d'' changes sign: (d(bg-1) - (bg+1)) / (2 beta)."""
    return (d * (params.bg - 1) - (params.bg + 1)) / (2 * params.beta)


def critical_x_pair(params: SpinParams, d: float) -> Optional[Tuple[float, float]]:
    """
    Roots of (beta x + 1)(x + gamma) = d (bg - 1) x, the points where f_d' = 1.
    None below Delta_c; a double root sqrt(gamma/beta) at Delta_c; x0 * x1 = gamma/beta.
    """
    beta, gamma, bg = params.beta, params.gamma, params.bg
    dc = delta_c(params)
    if d < dc and not math.isclose(d, dc, rel_tol=1e-12):
        return None
    b = (bg + 1) - d * (bg - 1)
    disc = b * b - 4 * bg
    if disc < 0 or math.isclose(d, dc, rel_tol=1e-12):
        disc = 0.0
    root = math.sqrt(disc)
    x1 = (-b + root) / (2 * beta)
    # product form keeps x0 accurate when the roots are far apart
    x0 = gamma / (beta * x1)
    return x0, x1


def criticality_check(params: SpinParams) -> Dict:
    """f, f', f'' of f_{Delta_c} at sqrt(gamma/beta) with lambda = lambda_c; expected x_hat, 1, 0."""
    dc, lc = delta_c(params), lambda_c(params)
    x_hat = math.sqrt(params.gamma / params.beta)
    return {
        'x_hat': x_hat,
        'f': eval_f(params, lc, dc, x_hat),
        'f_prime': eval_f_prime(params, lc, dc, x_hat),
        'f_second': eval_f_second(params, lc, dc, x_hat),
    }
