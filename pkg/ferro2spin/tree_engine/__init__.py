"""
Tree engine: explicit rooted trees, exact ratio recursion, pin absorption and interval bounds.
"""
from ferro2spin.tree_engine.tree import RootedTree, TreeNode
from ferro2spin.tree_engine.recursion import (
    Ratio, absorb_pins, eval_F, eval_f, eval_f_prime, eval_f_second, exact_tree_marginal,
    level_symmetric_ratio, ratio_to_probability,
)
from ferro2spin.tree_engine.bounds import BoundsPair, bounds_recursion, node_bounds
from ferro2spin.tree_engine.depth import DepthHorizon, FullHorizon, Horizon, MDepthHorizon, ceil_log, m_based_depth

__all__ = [
    'RootedTree', 'TreeNode', 'Ratio',
    'absorb_pins', 'eval_F', 'eval_f', 'eval_f_prime', 'eval_f_second', 'exact_tree_marginal',
    'level_symmetric_ratio', 'ratio_to_probability',
    'BoundsPair', 'bounds_recursion', 'node_bounds',
    'DepthHorizon', 'FullHorizon', 'Horizon', 'MDepthHorizon', 'ceil_log', 'm_based_depth',
]
