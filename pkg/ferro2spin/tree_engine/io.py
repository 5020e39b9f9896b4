"""
Tree Parser Module - Nested tree JSON and the generator spec grammar
"""
import json
import re
from typing import Dict, List, Optional, Tuple

from ferro2spin.errors import BudgetExceeded, SpinSystemError
from ferro2spin.spin_core.system import SpinParams
from ferro2spin.tree_engine.tree import RootedTree
from utils.schemas import validate_document

SPEC_PATTERNS = {
    'regular': re.compile(r'^regular:(?P<d>\d+):depth=(?P<depth>\d+)$'),
    'alt': re.compile(r'^alt:(?P<ds>\d+(?:,\d+)+):depth=(?P<depth>\d+)$'),
    'path': re.compile(r'^path:depth=(?P<depth>\d+)$'),
    'star': re.compile(r'^star:(?P<k>\d+)$'),
}

DEFAULT_MAX_NODES = 200000


def tree_from_nested(root: Dict) -> RootedTree:
    tree = RootedTree()
    stack: List[Tuple[Dict, Optional[int]]] = [(root, None)]
    counter = 0
    while stack:
        doc, parent = stack.pop()
        vertex = doc.get('vertex', counter)
        counter += 1
        idx = tree.add_node(vertex, float(doc['lambda']), parent=parent, pin=doc.get('pin'))
        for child in reversed(doc.get('children', [])):
            stack.append((child, idx))
    return tree


def tree_to_nested(tree: RootedTree, idx: int = 0) -> Dict:
    docs: Dict[int, Dict] = {}
    stack = [idx]
    while stack:
        i = stack.pop()
        node = tree.nodes[i]
        doc = {'vertex': node.vertex, 'lambda': node.lam}
        if node.pin is not None:
            doc['pin'] = node.pin
        if node.children:
            doc['children'] = []
        docs[i] = doc
        if i != idx:
            docs[node.parent]['children'].append(doc)
        stack.extend(reversed(node.children))
    return docs[idx]


def load_tree(path) -> Tuple[SpinParams, RootedTree]:
    with open(path) as f:
        document = json.load(f)
    validate_document(document, 'tree')
    return SpinParams(float(document['beta']), float(document['gamma'])), tree_from_nested(document['root'])


def dump_tree(params: SpinParams, tree: RootedTree, path):
    with open(path, 'w') as f:
        json.dump({'beta': params.beta, 'gamma': params.gamma, 'root': tree_to_nested(tree)}, f, indent=2)


def parse_tree_spec(spec: str) -> List[int]:
    """
    Degree-by-level list for a generator spec:
      regular:<d>:depth=<n>, alt:<d1>,<d2>[,...]:depth=<n>, path:depth=<n>, star:<k>
    Level k vertices get degrees[k] children; leaves sit at depth len(degrees).
    """
    spec = spec.strip()
    for kind, pattern in SPEC_PATTERNS.items():
        match = pattern.match(spec)
        if not match:
            continue
        if kind == 'regular':
            return [int(match['d'])] * int(match['depth'])
        if kind == 'alt':
            ds = [int(x) for x in match['ds'].split(',')]
            return [ds[k % len(ds)] for k in range(int(match['depth']))]
        if kind == 'path':
            return [1] * int(match['depth'])
        return [int(match['k'])]
    raise SpinSystemError(f"unrecognized tree spec '{spec}'")


def build_level_tree(degrees: List[int], lam: float, max_nodes: int = DEFAULT_MAX_NODES) -> RootedTree:
    """Explicit tree with degrees[k] children under every level-k vertex."""
    total, width = 1, 1
    for d in degrees:
        width *= d
        total += width
    if total > max_nodes:
        raise BudgetExceeded(f"level tree would have {total} nodes (limit {max_nodes})")
    tree = RootedTree.single(lam, vertex=0)
    frontier = [0]
    for d in degrees:
        nxt = []
        for parent in frontier:
            for _ in range(d):
                nxt.append(tree.add_node(len(tree), lam, parent=parent))
        frontier = nxt
    return tree


def tree_from_spec(spec: str, lam: float, max_nodes: int = DEFAULT_MAX_NODES) -> RootedTree:
    return build_level_tree(parse_tree_spec(spec), lam, max_nodes)
