"""
Accuracy Module - approx_partition against the brute-force oracle
"""
import logging
import math
from typing import Dict, List, Optional, Tuple

import numpy as np

from ferro2spin.fptas import AUTO, ApproxRequest, approx_partition_report
from ferro2spin.spin_core.generators import random_system
from ferro2spin.spin_core.io import system_from_dict, system_to_dict
from ferro2spin.spin_core.oracle import exact_partition
from ferro2spin.spin_core.system import SpinParams

logger = logging.getLogger(__name__)


def approx_instance_cell(payload: Dict) -> Dict:
    system = system_from_dict(payload['system'])
    eps = payload['epsilon']
    result = approx_partition_report(ApproxRequest(system, eps, payload.get('mode', AUTO)))
    exact = exact_partition(system)
    error = abs(result.log_z - exact)
    return {
        'n': system.n,
        'edges': len(system.edges),
        'mode': result.mode,
        'log_z': result.log_z,
        'log_z_exact': exact,
        'error': error,
        'within': error <= math.log1p(eps) + 1e-12,
    }


def accuracy_sweep(params: SpinParams, instances: int, n_max: int, epsilon: float,
                   field_range: Tuple[float, float], mode: str = AUTO, p: float = 0.4,
                   max_degree: Optional[int] = None, seed: int = 0, jobs: int = 1) -> Dict:
    """approx_partition on seeded random systems with 1..n_max vertices, each compared to the oracle."""
    from ferro2spin.experiments.tasks import approx_instance, dispatch

    rng = np.random.default_rng(seed)
    payloads = []
    for _ in range(instances):
        n = int(rng.integers(1, n_max + 1))
        system = random_system(params, n, rng, p=p, field_range=field_range, max_degree=max_degree)
        payloads.append({'system': system_to_dict(system), 'epsilon': epsilon, 'mode': mode})
    rows: List[Dict] = dispatch(approx_instance, payloads, jobs)
    failures = sum(1 for r in rows if not r['within'])
    logger.info(f"Accuracy sweep: {instances} instances, {failures} outside log(1 + {epsilon})")
    return {
        'beta': params.beta,
        'gamma': params.gamma,
        'epsilon': epsilon,
        'instances': instances,
        'max_error': max((r['error'] for r in rows), default=0.0),
        'failures': failures,
        'rows': rows,
    }
