"""
Tree Recursion Module - F_d / f_d evaluation, exact root ratios and pin absorption
"""
import math
from typing import Iterable, List, Sequence

from ferro2spin.spin_core.system import SpinParams
from ferro2spin.tree_engine.tree import RootedTree

# Ratio is P(spin 0)/P(spin 1) as a float in [0, inf]; math.inf is a real value here.
Ratio = float

PIN_RATIO = {0: math.inf, 1: 0.0}


def child_factor(params: SpinParams, x: Ratio) -> float:
    """(beta x + 1)/(x + gamma), with its limits beta at infinity and 1/gamma at 0."""
    if math.isinf(x):
        return params.beta
    return (params.beta * x + 1.0) / (x + params.gamma)


def eval_F(params: SpinParams, lambda_v: float, children: Iterable[Ratio]) -> Ratio:
    """F_d(x_1..x_d) = lambda_v * prod (beta x_i + 1)/(x_i + gamma); lambda_v for a leaf."""
    value = lambda_v
    for x in children:
        value *= child_factor(params, x)
    return value


def eval_f(params: SpinParams, lam: float, d: float, x: float) -> float:
    """Symmetric map f_d(x) = lambda ((beta x + 1)/(x + gamma))^d, real d allowed."""
    return lam * child_factor(params, x) ** d


def eval_f_prime(params: SpinParams, lam: float, d: float, x: float) -> float:
    beta, gamma = params.beta, params.gamma
    return d * (params.bg - 1) * eval_f(params, lam, d, x) / ((beta * x + 1) * (x + gamma))


def eval_f_second(params: SpinParams, lam: float, d: float, x: float) -> float:
    """f_d'' = d(bg-1) f (d(bg-1) - bg - 1 - 2 beta x) / ((beta x + 1)(x + gamma))^2."""
    beta, gamma, bg = params.beta, params.gamma, params.bg
    den = (beta * x + 1) * (x + gamma)
    return d * (bg - 1) * eval_f(params, lam, d, x) * (d * (bg - 1) - bg - 1 - 2 * beta * x) / den ** 2


def ratio_to_probability(r: Ratio) -> float:
    """p = R/(1+R), the probability of spin 0."""
    if math.isinf(r):
        return 1.0
    return r / (1.0 + r)


def node_ratios(tree: RootedTree, params: SpinParams) -> List[Ratio]:
    """Exact ratio at every node, bottom-up."""
    values: List[Ratio] = [0.0] * len(tree)
    for i in tree.bottom_up():
        node = tree.nodes[i]
        if node.pin is not None:
            values[i] = PIN_RATIO[node.pin]
        elif node.truncated:
            raise ValueError(f"node {i} is truncated; exact recursion needs a finite complete tree")
        else:
            values[i] = eval_F(params, node.lam, (values[c] for c in node.children))
    return values


def exact_tree_marginal(tree: RootedTree, params: SpinParams) -> Ratio:
    """Root ratio R_T by the exact bottom-up recursion."""
    return node_ratios(tree, params)[0]


def absorb_pins(tree: RootedTree, params: SpinParams) -> RootedTree:
    """
    Remove pinned children, multiplying the parent field by beta (pinned 0) or
    1/gamma (pinned 1). A pinned root is returned unchanged.
    """
    if tree.root.pin is not None:
        return tree.copy()
    result = RootedTree()
    # (source index, new parent index)
    stack = [(0, None)]
    while stack:
        i, new_parent = stack.pop()
        node = tree.nodes[i]
        lam = node.lam
        free_children = []
        for c in node.children:
            pin = tree.nodes[c].pin
            if pin == 0:
                lam *= params.beta
            elif pin == 1:
                lam /= params.gamma
            else:
                free_children.append(c)
        idx = result.add_node(node.vertex, lam, parent=new_parent, truncated=node.truncated)
        result.nodes[idx].m_depth = node.m_depth
        for c in reversed(free_children):
            stack.append((c, idx))
    return result


def level_symmetric_ratio(params: SpinParams, lam: float, degrees: Sequence[float], leaf_ratio: float = None) -> Ratio:
    """
    Root ratio of a tree whose level-k vertices all have degrees[k] children,
    found by iterating f from the leaves (ratio `leaf_ratio`, default lam).
    """
    x = lam if leaf_ratio is None else leaf_ratio
    for d in reversed(degrees):
        x = eval_f(params, lam, d, x)
    return x
