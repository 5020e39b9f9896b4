"""
Marginal Approximation Module - Truncated SAW-tree bounds on a single marginal
"""
import logging
import math
from typing import Dict, List, Optional, Sequence

from ferro2spin.errors import SpinSystemError, VertexPinned
from ferro2spin.fptas.request import MarginalBounds, depth_constant
from ferro2spin.potentials import Potential
from ferro2spin.saw.builder import build_saw
from ferro2spin.spin_core.system import SpinSystem
from ferro2spin.tree_engine.bounds import bounds_recursion
from ferro2spin.tree_engine.depth import DepthHorizon, Horizon, MDepthHorizon
from ferro2spin.tree_engine.recursion import absorb_pins

logger = logging.getLogger(__name__)


def select_depth(potential: Potential, lam: float, eps_additive: float, degree_hint: int) -> int:
    """
    Smallest depth with C_total lam alpha^t <= eps_additive. Plain depth for a
    good potential (one extra level for the root step), M-based depth for a universal one.
    """
    if eps_additive <= 0:
        raise SpinSystemError(f"additive error must be positive, got {eps_additive}")
    scale = depth_constant(potential, degree_hint) * lam
    if eps_additive >= scale:
        return 0
    if potential.alpha <= 0:
        return 1
    t = math.ceil(math.log(eps_additive / scale) / math.log(potential.alpha))
    return t if potential.is_universal else t + 1


def horizon_for(potential: Potential, depth: int) -> Horizon:
    if potential.is_universal:
        return MDepthHorizon(potential.base_m, depth)
    return DepthHorizon(depth)


def bound_marginal_at_depth(system: SpinSystem, v: int, potential: Potential, depth: int,
                            node_budget: Optional[int] = None) -> MarginalBounds:
    horizon = horizon_for(potential, depth)
    tree = build_saw(system, v, horizon, node_budget)
    if potential.is_universal:
        # pinned copies fold into their parents' fields, which keeps every field <= lambda when beta <= 1
        tree = absorb_pins(tree, system.params)
    ratio = bounds_recursion(tree, system.params, horizon)
    p_lower, p_upper = ratio.probabilities()
    return MarginalBounds(p_lower, p_upper, depth, len(tree), ratio, tree.is_complete)


def approx_marginal(system: SpinSystem, v: int, eps_additive: float, potential: Potential,
                    node_budget: Optional[int] = None) -> MarginalBounds:
    """
    Bounds [p_lower, p_upper] on P(sigma_v = 0) with gap <= eps_additive.

    Starts at the certified depth and deepens one level at a time while the
    realized gap is still too wide and the SAW tree is not yet complete.
    """
    if v not in system.fields:
        raise SpinSystemError(f"vertex {v} does not exist")
    if v in system.pin_map:
        raise VertexPinned(f"vertex {v} is pinned to {system.pin_map[v]}")
    depth = select_depth(potential, potential.lam, eps_additive, len(system.incidence[v]))
    while True:
        marginal = bound_marginal_at_depth(system, v, potential, depth, node_budget)
        if marginal.gap <= eps_additive or marginal.complete:
            return marginal
        logger.warning(f"gap {marginal.gap:.3g} at depth {depth} exceeds {eps_additive:.3g} "
                       f"for vertex {v}; deepening")
        depth += 1


def gap_profile(system: SpinSystem, v: int, potential: Potential, depths: Sequence[int],
                node_budget: Optional[int] = None) -> List[Dict]:
    """Realized probability gap at each requested depth, for decay-rate measurements."""
    if v in system.pin_map:
        raise VertexPinned(f"vertex {v} is pinned to {system.pin_map[v]}")
    rows = []
    for depth in depths:
        marginal = bound_marginal_at_depth(system, v, potential, depth, node_budget)
        rows.append({'depth': depth, **marginal.to_dict()})
    return rows
