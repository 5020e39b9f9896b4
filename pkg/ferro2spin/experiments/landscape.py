"""
Threshold Landscape Module - Uniqueness verdicts over a (lambda, d) grid
"""
import logging
from typing import Dict, List, Sequence

from ferro2spin.spin_core.system import SpinParams
from ferro2spin.thresholds.critical import critical_x_pair
from ferro2spin.thresholds.fixed_points import fixed_points
from ferro2spin.thresholds.uniqueness import boundary_field, uniqueness_at_degree

logger = logging.getLogger(__name__)

LANDSCAPE_COLUMNS = ['lambda', 'd', 'verdict', 'fixed_points', 'g0', 'g1']


def landscape_row_cell(beta: float, gamma: float, lam: float, degrees: Sequence[int]) -> List[Dict]:
    """One lambda across every tree degree d; g0/g1 are taken at recursion degree d - 1."""
    params = SpinParams(beta, gamma)
    rows = []
    for d in degrees:
        k = d - 1
        has_pair = critical_x_pair(params, k) is not None
        rows.append({
            'lambda': lam,
            'd': d,
            'verdict': uniqueness_at_degree(params, lam, d),
            'fixed_points': fixed_points(params, lam, k).count,
            'g0': boundary_field(params, k, 'lower') if has_pair else None,
            'g1': boundary_field(params, k, 'upper') if has_pair else None,
        })
    return rows


def threshold_landscape(params: SpinParams, lambdas: Sequence[float], degrees: Sequence[int],
                        jobs: int = 1) -> List[Dict]:
    from ferro2spin.experiments.tasks import dispatch, landscape_row

    params.require_beta_le_gamma()
    payloads = [{'beta': params.beta, 'gamma': params.gamma, 'lam': float(lam), 'degrees': [int(d) for d in degrees]}
                for lam in lambdas]
    rows = [row for chunk in dispatch(landscape_row, payloads, jobs) for row in chunk]
    logger.info(f"Landscape: {len(rows)} cells over {len(payloads)} fields")
    return rows
