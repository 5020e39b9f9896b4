"""
Spin System Module - Instances, configurations and configuration weights
"""
import logging
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Mapping, Optional, Tuple

from ferro2spin.errors import ParametersOutOfRange, SpinSystemError

logger = logging.getLogger(__name__)

SPINS = (0, 1)


@dataclass(frozen=True)
class SpinParams:
    """Edge weights: beta on a (0,0) edge, gamma on a (1,1) edge, 1 on a mixed edge."""
    beta: float
    gamma: float

    def __post_init__(self):
        if not (self.beta >= 0 and self.gamma >= 0):
            raise ParametersOutOfRange(f"beta {self.beta} and gamma {self.gamma} must be nonnegative")
        if not self.beta * self.gamma > 1:
            raise ParametersOutOfRange(
                f"beta*gamma = {self.beta * self.gamma} must exceed 1 (ferromagnetic regime)"
            )

    @property
    def bg(self) -> float:
        return self.beta * self.gamma

    def require_beta_le_gamma(self):
        if self.beta > self.gamma:
            raise ParametersOutOfRange(f"beta {self.beta} > gamma {self.gamma}; operation needs beta <= gamma")


@dataclass(frozen=True)
class SpinSystem:
    """
    A 2-spin instance: graph, edge weights, per-vertex field on spin 0 and pins.

    Edges are unordered pairs kept in input order; multi-edges are allowed.
    """
    params: SpinParams
    vertices: Tuple[Tuple[int, float], ...]
    edges: Tuple[Tuple[int, int], ...] = ()
    pins: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'vertices', tuple((int(v), float(lam)) for v, lam in self.vertices))
        object.__setattr__(self, 'edges', tuple((int(a), int(b)) for a, b in self.edges))
        pins = self.pins.items() if isinstance(self.pins, Mapping) else self.pins
        object.__setattr__(self, 'pins', tuple(sorted((int(v), int(s)) for v, s in pins)))

        ids = [v for v, _ in self.vertices]
        if len(set(ids)) != len(ids):
            raise SpinSystemError("vertex ids must be unique")
        for v, lam in self.vertices:
            if not (lam >= 0 and math.isfinite(lam)):
                raise SpinSystemError(f"field of vertex {v} must be a finite nonnegative real, got {lam}")
        known = set(ids)
        for a, b in self.edges:
            if a not in known or b not in known:
                raise SpinSystemError(f"edge ({a}, {b}) references a missing vertex")
            if a == b:
                raise SpinSystemError(f"self-loop at vertex {a} is not allowed")
        seen = set()
        for v, s in self.pins:
            if v not in known:
                raise SpinSystemError(f"pin references missing vertex {v}")
            if s not in SPINS:
                raise SpinSystemError(f"pin spin for vertex {v} must be 0 or 1, got {s}")
            if v in seen:
                raise SpinSystemError(f"vertex {v} pinned twice")
            seen.add(v)

    @cached_property
    def vertex_ids(self) -> List[int]:
        return [v for v, _ in self.vertices]

    @cached_property
    def fields(self) -> Dict[int, float]:
        return dict(self.vertices)

    @cached_property
    def pin_map(self) -> Dict[int, int]:
        return dict(self.pins)

    @cached_property
    def free_vertices(self) -> List[int]:
        return [v for v in self.vertex_ids if v not in self.pin_map]

    @cached_property
    def incidence(self) -> Dict[int, List[Tuple[int, int]]]:
        """Per vertex: (neighbor, edge index) sorted ascending, the local edge ranking used by SAW trees."""
        inc: Dict[int, List[Tuple[int, int]]] = {v: [] for v in self.vertex_ids}
        for idx, (a, b) in enumerate(self.edges):
            inc[a].append((b, idx))
            inc[b].append((a, idx))
        for v in inc:
            inc[v].sort()
        return inc

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def max_degree(self) -> int:
        return max((len(nb) for nb in self.incidence.values()), default=0)

    @property
    def max_field(self) -> float:
        return max((lam for _, lam in self.vertices), default=0.0)

    def with_pins(self, extra: Mapping[int, int]) -> 'SpinSystem':
        merged = dict(self.pins)
        for v, s in extra.items():
            if v in merged and merged[v] != s:
                raise SpinSystemError(f"vertex {v} already pinned to {merged[v]}")
            merged[v] = s
        return SpinSystem(self.params, self.vertices, self.edges, tuple(merged.items()))


@dataclass(frozen=True)
class Configuration:
    """Total assignment vertex-id -> spin."""
    assignment: Mapping[int, int] = field(default_factory=dict)


@dataclass(frozen=True)
class WeightAccumulator:
    """Natural-log weight with an exact-zero flag."""
    log_weight: float
    zero_flag: bool = False

    @property
    def value(self) -> float:
        return 0.0 if self.zero_flag else math.exp(self.log_weight)


def weight(system: SpinSystem, sigma: Configuration) -> WeightAccumulator:
    """
    w(sigma) = beta^m0 * gamma^m1 * prod of fields over vertices at spin 0.
    Returns the log weight; pins are not checked here.
    """
    assignment = sigma.assignment
    missing = [v for v in system.vertex_ids if v not in assignment]
    if missing:
        raise SpinSystemError(f"configuration is not total; missing vertices {missing[:5]}")

    factors = []
    for v, lam in system.vertices:
        if assignment[v] == 0:
            factors.append(lam)
    beta, gamma = system.params.beta, system.params.gamma
    for a, b in system.edges:
        sa, sb = assignment[a], assignment[b]
        if sa == sb == 0:
            factors.append(beta)
        elif sa == sb == 1:
            factors.append(gamma)

    if any(f == 0 for f in factors):
        return WeightAccumulator(log_weight=-math.inf, zero_flag=True)
    return WeightAccumulator(log_weight=math.fsum(math.log(f) for f in factors))
