"""
Bounds Recursion Module - Interval bounds [R_v, R^v] on truncated trees
"""
import math
from dataclasses import dataclass
from typing import List

from ferro2spin.spin_core.system import SpinParams
from ferro2spin.tree_engine.depth import FullHorizon, Horizon
from ferro2spin.tree_engine.recursion import PIN_RATIO, Ratio, eval_F, ratio_to_probability
from ferro2spin.tree_engine.tree import RootedTree


@dataclass(frozen=True)
class BoundsPair:
    lower: Ratio
    upper: Ratio

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"lower bound {self.lower} exceeds upper bound {self.upper}")

    @property
    def gap(self) -> float:
        if self.lower == self.upper:
            return 0.0
        return self.upper - self.lower

    def contains(self, r: Ratio, rel_tol: float = 0.0) -> bool:
        slack_lo = rel_tol * abs(self.lower) if math.isfinite(self.lower) else 0.0
        slack_hi = rel_tol * abs(self.upper) if math.isfinite(self.upper) else 0.0
        return self.lower - slack_lo <= r <= self.upper + slack_hi

    def probabilities(self):
        """(p_lower, p_upper) for spin 0; p = R/(1+R) is increasing in R."""
        return ratio_to_probability(self.lower), ratio_to_probability(self.upper)


TRIVIAL = BoundsPair(0.0, math.inf)


def node_bounds(tree: RootedTree, params: SpinParams, horizon: Horizon = None) -> List[BoundsPair]:
    """
    Bounds at every node. Pinned nodes are exact; nodes the horizon rejects,
    and truncated nodes, get [0, inf]; everything else propagates endpoints
    through F (increasing in each child when beta*gamma > 1).
    """
    horizon = horizon or FullHorizon()
    bounds: List[BoundsPair] = [TRIVIAL] * len(tree)
    for i in tree.bottom_up():
        node = tree.nodes[i]
        if node.pin is not None:
            r = PIN_RATIO[node.pin]
            bounds[i] = BoundsPair(r, r)
        elif node.truncated or not horizon.admits(tree, i):
            bounds[i] = TRIVIAL
        else:
            lower = eval_F(params, node.lam, (bounds[c].lower for c in node.children))
            upper = eval_F(params, node.lam, (bounds[c].upper for c in node.children))
            # rounding can cross the endpoints by an ulp when children are nearly equal
            bounds[i] = BoundsPair(min(lower, upper), max(lower, upper))
    return bounds


def bounds_recursion(tree: RootedTree, params: SpinParams, horizon: Horizon = None) -> BoundsPair:
    return node_bounds(tree, params, horizon)[0]
