"""
Approximation requests, marginal bounds and mode resolution
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ferro2spin.errors import (
    DegreeTooLarge, LambdaAtOrAboveCritical, ParametersOutOfRange, RegimeViolation, SpinSystemError,
)
from ferro2spin.potentials import Potential, make_phi1, make_phi2
from ferro2spin.spin_core.system import SpinSystem
from ferro2spin.thresholds.critical import delta_c, lambda_c
from ferro2spin.tree_engine.bounds import BoundsPair

logger = logging.getLogger(__name__)

BOUNDED = 'bounded'
UNIVERSAL = 'universal'
AUTO = 'auto'
MODES = (BOUNDED, UNIVERSAL, AUTO)


@dataclass(frozen=True)
class ApproxRequest:
    """
    A partition-function query. `potential` overrides the one the mode would
    build; its field bound must then cover every field of the system.
    """
    system: SpinSystem
    epsilon: float
    mode: str = AUTO
    potential: Optional[Potential] = None

    def __post_init__(self):
        if not 0 < self.epsilon < 1:
            raise SpinSystemError(f"epsilon must lie in (0, 1), got {self.epsilon}")
        if self.mode not in MODES:
            raise SpinSystemError(f"mode must be one of {MODES}, got '{self.mode}'")


@dataclass(frozen=True)
class MarginalBounds:
    p_lower: float
    p_upper: float
    depth_used: int
    nodes_expanded: int
    ratio: Optional[BoundsPair] = None
    complete: bool = False

    def __post_init__(self):
        if self.p_lower > self.p_upper:
            raise ValueError(f"p_lower {self.p_lower} exceeds p_upper {self.p_upper}")

    @property
    def gap(self) -> float:
        return self.p_upper - self.p_lower

    @property
    def midpoint(self) -> float:
        return (self.p_lower + self.p_upper) / 2

    def to_dict(self) -> Dict:
        return {
            'p_lower': self.p_lower,
            'p_upper': self.p_upper,
            'gap': self.gap,
            'depth_used': self.depth_used,
            'nodes_expanded': self.nodes_expanded,
            'complete': self.complete,
        }


@dataclass
class ApproxResult:
    log_z: float
    epsilon: float
    mode: str
    depths: List[int] = field(default_factory=list)
    nodes_expanded: int = 0
    potential: Optional[Dict] = None

    def to_dict(self) -> Dict:
        return {
            'logZ': self.log_z,
            'eps': self.epsilon,
            'mode': self.mode,
            'depths': self.depths,
            'nodes_expanded': self.nodes_expanded,
            'potential': self.potential,
        }


def _field_range(system: SpinSystem) -> Tuple[float, float]:
    free = [system.fields[v] for v in system.free_vertices] or [lam for _, lam in system.vertices]
    positive = [lam for lam in free if lam > 0]
    if not positive:
        return 1.0, 1.0
    return min(positive), max(positive)


def bounded_violation(system: SpinSystem) -> Optional[RegimeViolation]:
    dc = delta_c(system.params)
    if system.max_degree - 1 >= dc:
        return DegreeTooLarge(f"max degree {system.max_degree} >= Delta_c + 1 = {dc + 1}: bounded mode unavailable")
    return None


def universal_violation(system: SpinSystem) -> Optional[RegimeViolation]:
    params = system.params
    if not params.beta <= 1 < params.gamma:
        return ParametersOutOfRange(f"universal mode needs beta <= 1 < gamma, got beta={params.beta}, gamma={params.gamma}")
    lc = lambda_c(params)
    if system.max_field >= lc:
        return LambdaAtOrAboveCritical(f"lambda {system.max_field} >= lambda_c {lc}: universal mode unavailable")
    return None


def bounded_potential(system: SpinSystem) -> Potential:
    lam_min, lam_max = _field_range(system)
    return make_phi1(system.params, system.max_degree, lam_max, lam_min=lam_min)


def universal_potential(system: SpinSystem) -> Potential:
    lam = system.max_field
    if lam <= 0:
        lam = min(1.0, lambda_c(system.params) / 2)
    return make_phi2(system.params, lam)


def resolve_mode(request: ApproxRequest) -> Tuple[str, Potential]:
    return select_potential(request.system, request.mode, request.potential)


def select_potential(system: SpinSystem, mode: str = AUTO,
                     potential: Optional[Potential] = None) -> Tuple[str, Potential]:
    """(mode, potential) for a system; auto prefers bounded, then universal."""
    if potential is not None:
        return _check_override(system, potential)
    if mode not in MODES:
        raise SpinSystemError(f"mode must be one of {MODES}, got '{mode}'")

    if mode == BOUNDED:
        problem = bounded_violation(system)
        if problem:
            raise problem
        return BOUNDED, bounded_potential(system)
    if mode == UNIVERSAL:
        problem = universal_violation(system)
        if problem:
            raise problem
        return UNIVERSAL, universal_potential(system)

    bounded_problem = bounded_violation(system)
    if bounded_problem is None:
        return BOUNDED, bounded_potential(system)
    universal_problem = universal_violation(system)
    if universal_problem is None:
        logger.info(f"auto mode: {bounded_problem}; using universal mode")
        return UNIVERSAL, universal_potential(system)
    raise RegimeViolation(f"{bounded_problem}; {universal_problem}")


def _check_override(system: SpinSystem, potential: Potential) -> Tuple[str, Potential]:
    if system.max_field > potential.lam * (1 + 1e-12):
        raise RegimeViolation(f"field {system.max_field} exceeds the potential's field bound {potential.lam}")
    if potential.is_universal:
        return UNIVERSAL, potential
    if system.max_degree - 1 > potential.max_children:
        raise DegreeTooLarge(
            f"max degree {system.max_degree} exceeds the degree {potential.max_children + 1} "
            f"the potential was built for"
        )
    return BOUNDED, potential


def depth_constant(potential: Potential, degree_hint: int) -> float:
    """
    C_total in C_total lam alpha^t <= eps. Universal: c2/c1. Good: c2/c1 times the
    root correction d0 (bg-1)/gamma max(1, beta)^d0 and the spread max(1, beta)^(D-1).
    """
    ratio = potential.c2 / potential.c1
    if potential.is_universal:
        return ratio
    params = potential.params
    d0 = max(degree_hint, 1)
    lift = max(1.0, params.beta)
    root = d0 * (params.bg - 1) / params.gamma * lift ** d0
    return root * ratio * lift ** (potential.max_children or 0)