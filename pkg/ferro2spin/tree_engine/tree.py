"""
Rooted Tree Module - Arena representation shared by explicit trees and SAW trees
"""
from dataclasses import dataclass, field
from typing import Iterator, List, Optional


@dataclass
class TreeNode:
    vertex: int
    lam: float
    pin: Optional[int] = None
    parent: Optional[int] = None
    depth: int = 0
    m_depth: int = 0
    # expansion stopped here: the subtree below is unknown, not empty
    truncated: bool = False
    children: List[int] = field(default_factory=list)


class RootedTree:
    """
    Arena of nodes; index 0 is the root and every child index exceeds its
    parent's, so reversed index order is a valid bottom-up order.
    Children keep insertion order.
    """

    def __init__(self):
        self.nodes: List[TreeNode] = []

    @classmethod
    def single(cls, lam: float, vertex: int = 0, pin: Optional[int] = None) -> 'RootedTree':
        tree = cls()
        tree.add_node(vertex, lam, pin=pin)
        return tree

    def add_node(self, vertex: int, lam: float, parent: Optional[int] = None, pin: Optional[int] = None,
                 truncated: bool = False, m_step: int = 1) -> int:
        idx = len(self.nodes)
        if parent is None:
            if self.nodes:
                raise ValueError("tree already has a root")
            node = TreeNode(vertex, lam, pin=pin, truncated=truncated)
        else:
            p = self.nodes[parent]
            node = TreeNode(vertex, lam, pin=pin, parent=parent, depth=p.depth + 1,
                            m_depth=p.m_depth + m_step, truncated=truncated)
            p.children.append(idx)
        self.nodes.append(node)
        return idx

    @property
    def root(self) -> TreeNode:
        return self.nodes[0]

    def __len__(self) -> int:
        return len(self.nodes)

    def bottom_up(self) -> Iterator[int]:
        return iter(range(len(self.nodes) - 1, -1, -1))

    @property
    def height(self) -> int:
        return max((n.depth for n in self.nodes), default=0)

    @property
    def max_children(self) -> int:
        return max((len(n.children) for n in self.nodes), default=0)

    @property
    def is_complete(self) -> bool:
        return not any(n.truncated for n in self.nodes)

    def copy(self) -> 'RootedTree':
        clone = RootedTree()
        clone.nodes = [TreeNode(n.vertex, n.lam, n.pin, n.parent, n.depth, n.m_depth, n.truncated, list(n.children))
                       for n in self.nodes]
        return clone

    def graft(self, parent: int, subtree: 'RootedTree'):
        """Attach a copy of `subtree` (root included) below `parent`."""
        mapping = {}
        for i, node in enumerate(subtree.nodes):
            new_parent = parent if node.parent is None else mapping[node.parent]
            mapping[i] = self.add_node(node.vertex, node.lam, parent=new_parent, pin=node.pin,
                                       truncated=node.truncated)
