"""
Depth Module - Plain and M-based depth, and the horizon predicates used for truncation
"""
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List

from ferro2spin.tree_engine.tree import RootedTree


def ceil_log(n: int, m: float) -> int:
    """Smallest k >= 0 with m**k >= n (exact for integer m)."""
    if m <= 1:
        raise ValueError(f"base M must exceed 1, got {m}")
    k, power = 0, 1
    while power < n:
        power *= m
        k += 1
    return k


def m_step(d: int, m: float) -> int:
    """Depth charged for stepping below a parent with d children."""
    return ceil_log(d + 1, m)


def m_based_depth(tree: RootedTree, m: float) -> List[int]:
    """
    l_M(root) = 0, l_M(child) = l_M(parent) + ceil(log_M(d + 1)) where d is the
    parent's child count. Stores the result on the nodes and checks |B(l)| <= M^l.
    """
    depths = [0] * len(tree)
    for i, node in enumerate(tree.nodes):
        if node.parent is not None:
            parent = tree.nodes[node.parent]
            depths[i] = depths[node.parent] + m_step(len(parent.children), m)
        node.m_depth = depths[i]
    check_ball_sizes(depths, m)
    return depths


def ball_sizes(depths: List[int]) -> Dict[int, int]:
    """|B(l)| = number of nodes with M-based depth <= l, for l up to the max depth."""
    counts = Counter(depths)
    sizes, running = {}, 0
    for level in range(max(depths, default=0) + 1):
        running += counts.get(level, 0)
        sizes[level] = running
    return sizes


def check_ball_sizes(depths: List[int], m: float):
    for level, size in ball_sizes(depths).items():
        assert size <= m ** level + 1e-9, f"|B({level})| = {size} exceeds M^{level} = {m ** level}"


class Horizon:
    """Decides which nodes are evaluated; the rest get the trivial bounds [0, inf]."""

    def admits(self, tree: RootedTree, idx: int) -> bool:
        raise NotImplementedError


class FullHorizon(Horizon):
    def admits(self, tree, idx):
        return True


@dataclass(frozen=True)
class DepthHorizon(Horizon):
    """Nodes at plain depth <= t are evaluated."""
    t: int

    def admits(self, tree, idx):
        return tree.nodes[idx].depth <= self.t


@dataclass(frozen=True)
class MDepthHorizon(Horizon):
    """
    Evaluates the ball B(l) of M-based depth <= l plus one extra level, so only
    nodes at distance > 1 from the ball get trivial bounds.
    """
    m: float
    ell: int

    def in_ball(self, tree, idx):
        return tree.nodes[idx].m_depth <= self.ell

    def admits(self, tree, idx):
        node = tree.nodes[idx]
        if node.m_depth <= self.ell:
            return True
        return node.parent is not None and self.in_ball(tree, node.parent)
