"""
Graph Generators - Seeded random instances and a fixed corpus of small graphs
"""
from typing import Dict, Iterable, Optional, Tuple

import networkx as nx
import numpy as np

from ferro2spin.spin_core.system import SpinParams, SpinSystem


def _seed(rng: np.random.Generator) -> int:
    return int(rng.integers(0, 2**31 - 1))


def cap_degree(graph: nx.Graph, max_degree: int) -> nx.Graph:
    """Drop edges (in sorted order) until no vertex exceeds max_degree."""
    capped = graph.copy()
    for u, v in sorted(graph.edges()):
        if capped.degree(u) > max_degree or capped.degree(v) > max_degree:
            capped.remove_edge(u, v)
    return capped


def random_graph(n: int, p: float, rng: np.random.Generator, max_degree: Optional[int] = None) -> nx.Graph:
    """Erdos-Renyi G(n, p), optionally degree-capped."""
    graph = nx.gnp_random_graph(n, p, seed=_seed(rng))
    if max_degree is not None:
        graph = cap_degree(graph, max_degree)
    return graph


def random_regular_graph(d: int, n: int, rng: np.random.Generator) -> nx.Graph:
    return nx.random_regular_graph(d, n, seed=_seed(rng))


def random_fields(n: int, low: float, high: float, rng: np.random.Generator) -> np.ndarray:
    return rng.uniform(low, high, size=n)


def system_from_graph(params: SpinParams, graph: nx.Graph, fields, pins: Optional[Dict[int, int]] = None) -> SpinSystem:
    """
    Build a SpinSystem from a networkx (multi)graph. `fields` is a scalar, a
    mapping vertex -> field, or a sequence aligned with sorted vertices.
    """
    nodes = sorted(graph.nodes())
    if np.isscalar(fields):
        lam = {v: float(fields) for v in nodes}
    elif isinstance(fields, dict):
        lam = {v: float(fields[v]) for v in nodes}
    else:
        lam = {v: float(x) for v, x in zip(nodes, fields)}
    edges = [(int(u), int(v)) for u, v in graph.edges()]
    return SpinSystem(params, tuple((int(v), lam[v]) for v in nodes), tuple(edges), tuple((pins or {}).items()))


def random_system(params: SpinParams, n: int, rng: np.random.Generator, p: float = 0.4,
                  field_range: Tuple[float, float] = (1.0, 1.0),
                  max_degree: Optional[int] = None) -> SpinSystem:
    graph = random_graph(n, p, rng, max_degree=max_degree)
    fields = random_fields(n, field_range[0], field_range[1], rng)
    return system_from_graph(params, graph, fields)


def _multigraph(edges: Iterable[Tuple[int, int]]) -> nx.MultiGraph:
    graph = nx.MultiGraph()
    graph.add_edges_from(edges)
    return graph


def graph_corpus() -> Dict[str, nx.Graph]:
    """Small graphs with cycles, cliques and parallel edges (all at most 10 vertices)."""
    theta = nx.Graph([(0, 1), (1, 2), (0, 3), (3, 2), (0, 4), (4, 5), (5, 2)])
    return {
        'single_edge': nx.path_graph(2),
        'path5': nx.path_graph(5),
        'star4': nx.star_graph(4),
        'triangle': nx.cycle_graph(3),
        'cycle4': nx.cycle_graph(4),
        'cycle5': nx.cycle_graph(5),
        'k4': nx.complete_graph(4),
        'k5': nx.complete_graph(5),
        'petersen': nx.petersen_graph(),
        'theta': theta,
        'ladder': nx.ladder_graph(4),
        'double_edge': _multigraph([(0, 1), (0, 1)]),
        'multi_triangle': _multigraph([(0, 1), (0, 1), (1, 2), (2, 0)]),
        'multi_square': _multigraph([(0, 1), (1, 2), (2, 3), (3, 0), (1, 2), (0, 2)]),
    }
