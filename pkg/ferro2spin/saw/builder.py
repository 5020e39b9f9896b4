"""
SAW Tree Builder - Self-avoiding-walk trees rooted at a graph vertex
"""
import logging
from typing import Dict, Optional, Tuple

from config import get_config
from ferro2spin.errors import BudgetExceeded, SpinSystemError
from ferro2spin.spin_core.system import SpinSystem
from ferro2spin.tree_engine.depth import FullHorizon, Horizon, MDepthHorizon, m_step
from ferro2spin.tree_engine.recursion import Ratio, exact_tree_marginal
from ferro2spin.tree_engine.tree import RootedTree

logger = logging.getLogger(__name__)


class _SawExpansion:
    """
    Depth-first walk enumeration. `on_path` maps every vertex of the current
    walk to its departure (next vertex, edge index); comparing that against the
    closing (vertex, edge) pair in the ascending incidence order at w decides
    the pin of a cycle-closing leaf.
    """

    def __init__(self, system: SpinSystem, horizon: Horizon, node_budget: int):
        self.system = system
        self.horizon = horizon
        self.node_budget = node_budget
        self.tree = RootedTree()
        self.in_edge: Dict[int, Optional[int]] = {}
        self.on_path: Dict[int, Tuple[int, int]] = {}

    def _add(self, vertex, parent=None, pin=None, edge=None, step=1):
        if len(self.tree) >= self.node_budget:
            raise BudgetExceeded(f"SAW tree exceeds the node budget of {self.node_budget}")
        idx = self.tree.add_node(vertex, self.system.fields[vertex], parent=parent, pin=pin, m_step=step)
        self.in_edge[idx] = edge
        return idx

    def build(self, v: int) -> RootedTree:
        root = self._add(v, pin=self.system.pin_map.get(v))
        if self.tree.nodes[root].pin is None:
            self._expand(root)
        return self.tree

    def _plan(self, idx: int):
        """Add every child of `idx`; the path state must already include the walk to it."""
        tree, system = self.tree, self.system
        x = tree.nodes[idx].vertex
        entry = self.in_edge[idx]

        planned = []
        for w, e in system.incidence[x]:
            if e == entry:
                continue
            if w in self.on_path:
                # closing edge ranked above the departure edge at w -> spin 0
                pin = 0 if (x, e) > self.on_path[w] else 1
                planned.append((w, e, pin))
            else:
                planned.append((w, e, system.pin_map.get(w)))

        # pinned children are absorbed into the parent field, so only free ones cost M-based depth
        free_count = sum(1 for _, _, pin in planned if pin is None)
        step = m_step(free_count, self.horizon.m) if isinstance(self.horizon, MDepthHorizon) else 1

        return iter([(self._add(w, parent=idx, pin=pin, edge=e, step=step), w, e)
                     for w, e, pin in planned])

    def _expand(self, root: int):
        tree = self.tree
        # frames of (node, vertex, children not yet visited); walks can be as long as the graph
        stack = [(root, tree.nodes[root].vertex, self._plan(root))]
        while stack:
            _, x, pending = stack[-1]
            for c, w, e in pending:
                node = tree.nodes[c]
                if node.pin is not None:
                    continue
                if not self.horizon.admits(tree, c):
                    node.truncated = True
                    continue
                self.on_path[x] = (w, e)
                stack.append((c, w, self._plan(c)))
                break
            else:
                stack.pop()
                self.on_path.pop(x, None)


def build_saw(system: SpinSystem, v: int, horizon: Horizon = None, node_budget: Optional[int] = None) -> RootedTree:
    """
    T_SAW(G, v) expanded as far as `horizon` admits. Vertices pinned in the
    system stay pinned on every copy; nodes the horizon rejects are kept as
    truncated placeholders so their parents know their degree.
    """
    if v not in system.fields:
        raise SpinSystemError(f"vertex {v} does not exist")
    horizon = horizon or FullHorizon()
    budget = get_config().SAW_NODE_BUDGET if node_budget is None else node_budget
    tree = _SawExpansion(system, horizon, budget).build(v)
    logger.debug(f"SAW tree at vertex {v}: {len(tree)} nodes, height {tree.height}")
    return tree


def saw_ratio_exact(system: SpinSystem, v: int, node_budget: Optional[int] = None) -> Ratio:
    """R_{G,v} from the fully expanded SAW tree."""
    return exact_tree_marginal(build_saw(system, v, FullHorizon(), node_budget), system.params)
