"""
Beyond lambda_c Module - Universal approximation with the chopped Phi_3 at beta = 0.6, gamma = 2
"""
import logging
import math
from typing import Dict

import numpy as np

from ferro2spin.fptas import UNIVERSAL, ApproxRequest, approx_partition_report
from ferro2spin.potentials import make_phi3, make_phi3_certificate
from ferro2spin.spin_core.generators import random_graph, system_from_graph
from ferro2spin.spin_core.oracle import exact_partition
from ferro2spin.spin_core.system import SpinParams
from ferro2spin.thresholds.critical import lambda_c

logger = logging.getLogger(__name__)

BEYOND_PARAMS = (0.6, 2.0)
BEYOND_LAMBDA = 1002762.0
MIN_EPSILON = 0.1
MAX_VERTICES = 14


def beyond_lambda_c_demo(graphs: int = 3, n: int = 10, epsilon: float = MIN_EPSILON, p: float = 0.3,
                         max_degree: int = 3, seed: int = 0, lam: float = BEYOND_LAMBDA) -> Dict:
    """
    Certificate for Phi_3 at lambda, then approx_partition in universal mode
    with the chopped potential on random graphs, each checked against the oracle.
    """
    if epsilon < MIN_EPSILON:
        logger.warning(f"epsilon {epsilon} raised to {MIN_EPSILON}; alpha this close to 1 makes depths large")
        epsilon = MIN_EPSILON
    if n > MAX_VERTICES:
        logger.warning(f"n {n} capped at {MAX_VERTICES} for the oracle comparison")
        n = MAX_VERTICES
    params = SpinParams(*BEYOND_PARAMS)
    certificate = make_phi3_certificate(params, lam)
    potential = make_phi3(params, lam, certificate=certificate)

    rng = np.random.default_rng(seed)
    instances = []
    for _ in range(graphs):
        system = system_from_graph(params, random_graph(n, p, rng, max_degree=max_degree), lam)
        result = approx_partition_report(ApproxRequest(system, epsilon, UNIVERSAL, potential=potential))
        exact = exact_partition(system)
        error = abs(result.log_z - exact)
        instances.append({
            'n': system.n,
            'edges': len(system.edges),
            'log_z': result.log_z,
            'log_z_exact': exact,
            'error': error,
            'within': error <= math.log1p(epsilon) + 1e-12,
            'nodes_expanded': result.nodes_expanded,
        })
    return {
        'lambda': lam,
        'lambda_c': lambda_c(params),
        'epsilon': epsilon,
        'certificate': certificate.to_dict(),
        'potential': potential.summary(),
        'instances': instances,
        'all_within': all(i['within'] for i in instances),
    }
