"""
Alternating 5-7 Tree Module - Spatial mixing failure below lambda_c^int

Even levels have 5 children and odd levels 7, at beta = 1, gamma = 2. The root
ratio of the depth-2l truncation follows x -> f_5(f_7(x)) from the leaves, so
both sequences below are plain iterations of that map.
"""
import logging
import math
from typing import Dict

from ferro2spin.spin_core.system import SpinParams
from ferro2spin.thresholds.critical import lambda_c
from ferro2spin.thresholds.fixed_points import composite_fixed_points, composite_map
from ferro2spin.tree_engine.recursion import eval_f

logger = logging.getLogger(__name__)

FIVE_SEVEN_PARAMS = (1.0, 2.0)
THREE_FIXED_POINT_INTERVAL = (10.9759, 10.9965)
EXTRA_LAYER_CHILDREN = 50
MATCH_TOL = 1e-6


def _converge(g, x: float, tol: float, max_steps: int):
    movement = math.inf
    steps = 0
    while movement >= tol and steps < max_steps:
        nxt = g(x)
        movement = abs(nxt - x)
        x = nxt
        steps += 1
    return x, movement, steps


def five_seven_demo(lam: float = 10.98, ell_max: int = 30, tol: float = 1e-13, max_steps: int = 100000) -> Dict:
    """
    Root ratios of T (depth 2l, free leaves) and T' (T plus a layer of 50
    children under every leaf) for l = 1..ell_max, their limits, and the fixed
    points of f_5 o f_7 the limits are matched against.
    """
    lo, hi = THREE_FIXED_POINT_INTERVAL
    if not lo <= lam <= hi:
        logger.warning(f"lambda {lam} is outside [{lo}, {hi}]; f_5 o f_7 may not have three fixed points")
    params = SpinParams(*FIVE_SEVEN_PARAMS)
    g = composite_map(params, lam, [5, 7])
    points = composite_fixed_points(params, lam, [5, 7])
    lc = lambda_c(params)

    start_t = lam
    start_t_prime = eval_f(params, lam, EXTRA_LAYER_CHILDREN, lam)
    seq_t, seq_t_prime = [], []
    x, y = start_t, start_t_prime
    for _ in range(ell_max):
        x, y = g(x), g(y)
        seq_t.append(x)
        seq_t_prime.append(y)

    limit_t, move_t, steps_t = _converge(g, start_t, tol, max_steps)
    limit_t_prime, move_t_prime, steps_t_prime = _converge(g, start_t_prime, tol, max_steps)
    separation = abs(limit_t - limit_t_prime)

    report = {
        'beta': params.beta,
        'gamma': params.gamma,
        'lambda': lam,
        'lambda_c': lc,
        'fixed_points': points,
        'fixed_point_count': len(points),
        'all_below_lambda_c': all(p < lc for p in points),
        'ell': list(range(1, ell_max + 1)),
        'sequence_t': seq_t,
        'sequence_t_prime': seq_t_prime,
        'limit_t': limit_t,
        'limit_t_prime': limit_t_prime,
        'steps_t': steps_t,
        'steps_t_prime': steps_t_prime,
        'final_movement': max(move_t, move_t_prime),
        'limit_gap': separation,
        'separated': separation > 10 * max(move_t, move_t_prime),
    }
    if points:
        report['matches_largest'] = abs(limit_t - points[-1]) < MATCH_TOL
        report['matches_smallest'] = abs(limit_t_prime - points[0]) < MATCH_TOL
    logger.info(f"5-7 tree at lambda={lam}: {len(points)} fixed points, limits {limit_t:.6f} / {limit_t_prime:.6f}")
    return report
