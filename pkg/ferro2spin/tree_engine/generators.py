"""
Random Tree Generators - Tree pairs sharing their first levels
"""
from typing import List, Tuple

import numpy as np

from ferro2spin.tree_engine.tree import RootedTree


def grow(tree: RootedTree, frontier: List[int], levels: int, rng: np.random.Generator, d_max: int,
         lam: float, width_cap: int, keep_alive: bool = False) -> List[int]:
    """
    Add `levels` levels below `frontier`. Each level, at most `width_cap`
    frontier nodes (a random subset) draw a degree uniform in [0, d_max]; the
    rest stay leaves. With keep_alive, a level never dies out.
    Returns the final frontier.
    """
    for _ in range(levels):
        if not frontier:
            break
        order = rng.permutation(len(frontier))[:width_cap]
        chosen = [frontier[i] for i in sorted(order)]
        degrees = rng.integers(0, d_max + 1, size=len(chosen))
        if keep_alive and degrees.sum() == 0:
            degrees[int(rng.integers(0, len(chosen)))] = int(rng.integers(1, d_max + 1))
        nxt = []
        for parent, d in zip(chosen, degrees):
            for _ in range(int(d)):
                nxt.append(tree.add_node(len(tree), lam, parent=parent))
        frontier = nxt
    return frontier


def random_tree_pair(rng: np.random.Generator, ell: int, lam: float, d_max: int = 8, suffix_depth: int = 3,
                     width_cap: int = 16, extreme: bool = False) -> Tuple[RootedTree, RootedTree]:
    """
    Two trees that agree on their first `ell` levels (structure and fields) and
    differ below. With `extreme`, one tree's level-ell vertices get d_max leaf
    children and the other's stay leaves; otherwise both suffixes are random.
    """
    prefix = RootedTree.single(lam)
    boundary = grow(prefix, [0], ell, rng, d_max, lam, width_cap, keep_alive=True)
    first, second = prefix.copy(), prefix.copy()
    if extreme:
        for b in boundary:
            for _ in range(d_max):
                first.add_node(len(first), lam, parent=b)
        return first, second
    grow(first, list(boundary), suffix_depth, rng, d_max, lam, width_cap)
    grow(second, list(boundary), suffix_depth, rng, d_max, lam, width_cap)
    return first, second
