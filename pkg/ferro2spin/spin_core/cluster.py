"""
Random-Cluster Module - Edge deletion/contraction identity and the marginal upper bound
"""
import logging
import math
from typing import Dict, Optional, Tuple, Union

import numpy as np

from config import get_config
from ferro2spin.errors import GammaEqualsOne, ParametersOutOfRange, SpinSystemError
from ferro2spin.spin_core.generators import random_graph, system_from_graph
from ferro2spin.spin_core.oracle import exact_marginal, exact_partition
from ferro2spin.spin_core.system import SpinParams, SpinSystem

logger = logging.getLogger(__name__)

Edge = Union[int, Tuple[int, int]]


def _edge_index(system: SpinSystem, e: Edge) -> int:
    if isinstance(e, int):
        if not 0 <= e < len(system.edges):
            raise SpinSystemError(f"edge index {e} out of range")
        return e
    a, b = e
    for idx, (u, v) in enumerate(system.edges):
        if {u, v} == {a, b}:
            return idx
    raise SpinSystemError(f"edge ({a}, {b}) is not present")


def random_cluster_split(system: SpinSystem, e: Edge) -> Tuple[SpinSystem, SpinSystem, int]:
    """
    Split on edge e: Z(G) = Z(G-) + (gamma - 1) Z(G+).

    G- deletes e. G+ merges its endpoints into the lower-id endpoint, whose field
    becomes lambda_a * lambda_b * (beta - 1) / (gamma - 1).
    Returns (G-, G+, merged vertex id).
    """
    params = system.params
    if params.gamma == 1:
        raise GammaEqualsOne("gamma must differ from 1 for the random-cluster split")
    idx = _edge_index(system, e)
    a, b = sorted(system.edges[idx])
    if a in system.pin_map or b in system.pin_map:
        raise SpinSystemError(f"edge ({a}, {b}) has a pinned endpoint")

    merged_field = system.fields[a] * system.fields[b] * (params.beta - 1) / (params.gamma - 1)
    if merged_field < 0:
        raise ParametersOutOfRange(
            f"contracted field {merged_field} is negative; needs (beta - 1)/(gamma - 1) >= 0"
        )

    g_minus = SpinSystem(params, system.vertices,
                         system.edges[:idx] + system.edges[idx + 1:], system.pins)

    contracted_edges = []
    for j, (u, v) in enumerate(system.edges):
        if j == idx:
            continue
        u, v = (a if u == b else u), (a if v == b else v)
        if u == v:
            raise ParametersOutOfRange(f"edge ({a}, {b}) has a parallel copy; contraction would leave a self-loop")
        contracted_edges.append((u, v))
    vertices = tuple((v, merged_field if v == a else lam) for v, lam in system.vertices if v != b)
    g_plus = SpinSystem(params, vertices, tuple(contracted_edges), system.pins)
    return g_minus, g_plus, a


def _check_bound_regime(params: SpinParams, lam: float) -> float:
    beta, gamma = params.beta, params.gamma
    if not (1 <= beta <= gamma):
        raise ParametersOutOfRange(f"marginal bound needs 1 <= beta <= gamma, got beta={beta}, gamma={gamma}")
    # beta = 1 leaves the field unconstrained
    limit = math.inf if beta == 1 else (gamma - 1) / (beta - 1)
    if lam > limit:
        raise ParametersOutOfRange(f"lambda {lam} > (gamma-1)/(beta-1) = {limit}")
    return limit


def marginal_bound_instance(params: SpinParams, lam: float, n: int, p: float, seed: int,
                            uniform_field: bool = True) -> Dict:
    """All vertex marginals of one random graph, against the bound lambda/(lambda+1)."""
    rng = np.random.default_rng(seed)
    graph = random_graph(n, p, rng)
    fields = lam if uniform_field else rng.uniform(0.5 * lam, lam, size=n)
    system = system_from_graph(params, graph, fields)
    bound = lam / (lam + 1)
    marginals = [exact_marginal(system, v) for v in system.vertex_ids]
    max_p = max(marginals)
    return {
        'n': n,
        'edges': len(system.edges),
        'max_p': max_p,
        'violations': sum(1 for x in marginals if x > bound + 1e-12),
    }


def marginal_bound_sweep(params: SpinParams, lam: float, trials: int, size_bound: int,
                         seed: Optional[int] = None, jobs: int = 1) -> Dict:
    """
    Check p_v <= lambda/(lambda+1) over random unpinned instances with
    1 <= beta <= gamma and lambda <= (gamma-1)/(beta-1).
    """
    from ferro2spin.experiments.tasks import dispatch, marginal_bound_instance as instance_task

    _check_bound_regime(params, lam)
    guard = get_config().ORACLE_MAX_FREE_VERTICES
    if size_bound > guard:
        raise ParametersOutOfRange(f"size bound {size_bound} exceeds the oracle guard {guard}")

    rng = np.random.default_rng(get_config().DEFAULT_SEED if seed is None else seed)
    payloads = []
    for trial in range(trials):
        n = int(rng.integers(1, size_bound + 1))
        p = float(rng.uniform(0.2, 0.8))
        payloads.append({'beta': params.beta, 'gamma': params.gamma, 'lam': lam, 'n': n, 'p': p,
                         'seed': int(rng.integers(0, 2**31 - 1)), 'uniform_field': trial % 2 == 0})
    results = dispatch(instance_task, payloads, jobs)
    report = summarize_marginal_bound(params, lam, results)
    logger.info(f"Marginal bound sweep: {trials} graphs, max p_v {report['max_p']:.6g}, "
                f"violations {report['violations']}")
    return report


def summarize_marginal_bound(params: SpinParams, lam: float, results) -> Dict:
    bound = lam / (lam + 1)
    violations = sum(r['violations'] for r in results)
    return {
        'beta': params.beta,
        'gamma': params.gamma,
        'lambda': lam,
        'bound': bound,
        'instances': len(results),
        'vertices_checked': sum(r['n'] for r in results),
        'max_p': max((r['max_p'] for r in results), default=0.0),
        'violations': violations,
        'passed': violations == 0,
    }


def random_cluster_check(params: SpinParams, trials: int, n_max: int = 8, seed: Optional[int] = None,
                         rel_tol: float = 1e-12) -> Dict:
    """
    Z(G) against Z(G-) + (gamma - 1) Z(G+) on random (graph, edge) pairs with
    unit-scale random fields, compared in log space.
    """
    if n_max < 2:
        raise SpinSystemError(f"graphs need at least 2 vertices, got n_max={n_max}")
    rng = np.random.default_rng(get_config().DEFAULT_SEED if seed is None else seed)
    log_gm1 = math.log(abs(params.gamma - 1)) if params.gamma != 1 else -math.inf
    worst, checked, violations = 0.0, 0, 0
    while checked < trials:
        n = int(rng.integers(2, n_max + 1))
        graph = random_graph(n, float(rng.uniform(0.3, 0.9)), rng)
        if graph.number_of_edges() == 0:
            continue
        system = system_from_graph(params, graph, rng.uniform(0.2, 3.0, size=n))
        g_minus, g_plus, _ = random_cluster_split(system, int(rng.integers(0, len(system.edges))))
        lhs = exact_partition(system)
        rhs = float(np.logaddexp(exact_partition(g_minus), log_gm1 + exact_partition(g_plus)))
        rel = abs(math.expm1(lhs - rhs))
        worst = max(worst, rel)
        violations += rel > rel_tol
        checked += 1
    logger.info(f"Random-cluster identity: {trials} splits, max relative error {worst:.3g}")
    return {
        'beta': params.beta,
        'gamma': params.gamma,
        'trials': trials,
        'max_rel_error': worst,
        'tolerance': rel_tol,
        'violations': int(violations),
        'passed': violations == 0,
    }
