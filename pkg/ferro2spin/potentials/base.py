"""
Potential Module - Potential functions, amortized decay rates and their verification
"""
import logging
import math
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Sequence

import numpy as np

from ferro2spin.errors import ContractionError, DomainViolation
from ferro2spin.spin_core.system import SpinParams
from ferro2spin.tree_engine.depth import ceil_log
from ferro2spin.tree_engine.recursion import eval_F

logger = logging.getLogger(__name__)

GOOD = 'good'
UNIVERSAL = 'universal'


@dataclass
class Potential:
    """
    phi = Phi' on a declared domain with c1 <= phi <= c2 there.

    Good potentials contract by alpha for every d up to max_children; universal
    ones by alpha^ceil(log_M(d+1)) for every d, on (0, lam].
    """
    name: str
    kind: str
    phi: Callable[[np.ndarray], np.ndarray]
    lo: float
    hi: float
    c1: float
    c2: float
    alpha: float
    lam: float
    params: Optional[SpinParams] = None
    base_m: Optional[int] = None
    max_children: Optional[int] = None
    details: Optional[Dict] = None

    def __post_init__(self):
        if not self.alpha < 1:
            raise ContractionError(f"{self.name}: contraction ratio {self.alpha} is not below 1")
        self.verify_bounds()

    @property
    def is_universal(self) -> bool:
        return self.kind == UNIVERSAL

    def in_domain(self, x: float) -> bool:
        tol = 1e-12 * max(1.0, abs(self.hi))
        if self.is_universal:
            return 0 < x <= self.hi + tol
        return self.lo * (1 - 1e-12) <= x <= self.hi + tol

    def rate_bound(self, d: int) -> float:
        if d == 0:
            return 0.0
        if self.is_universal:
            return self.alpha ** ceil_log(d + 1, self.base_m)
        return self.alpha

    def domain_grid(self, samples: int) -> np.ndarray:
        lo = self.lo if self.lo > 0 else self.hi * 1e-12
        return np.geomspace(lo, self.hi, samples)

    def verify_bounds(self, samples: int = 10000):
        values = np.asarray(self.phi(self.domain_grid(samples)), dtype=float)
        if values.min() < self.c1 * (1 - 1e-9) or values.max() > self.c2 * (1 + 1e-9):
            raise ContractionError(
                f"{self.name}: phi ranges over [{values.min()}, {values.max()}], "
                f"outside the declared [{self.c1}, {self.c2}]"
            )

    def summary(self) -> Dict:
        report = {
            'name': self.name,
            'kind': self.kind,
            'domain': [self.lo, self.hi],
            'c1': self.c1,
            'c2': self.c2,
            'alpha': self.alpha,
            'lambda': self.lam,
            'base_m': self.base_m,
            'max_children': self.max_children,
        }
        if self.details:
            report.update(self.details)
        return report


def decay_rate(potential: Potential, params: SpinParams, lambda_v: float, xs: Sequence[float]) -> float:
    """
    C^phi_d(x) = phi(F) * sum_i (dF/dx_i) / phi(x_i),
    with dF/dx_i = F (bg - 1) / ((beta x_i + 1)(x_i + gamma)).
    """
    xs = [float(x) for x in xs]
    if not xs:
        return 0.0
    for x in xs:
        if not potential.in_domain(x):
            raise DomainViolation(f"{potential.name}: child ratio {x} outside [{potential.lo}, {potential.hi}]")
    beta, gamma, bg = params.beta, params.gamma, params.bg
    f_value = eval_F(params, lambda_v, xs)
    arr = np.asarray(xs)
    partials = f_value * (bg - 1) / ((beta * arr + 1) * (arr + gamma))
    phi_root = float(np.asarray(potential.phi(np.array([f_value])))[0])
    return float(phi_root * np.sum(partials / np.asarray(potential.phi(arr))))


def verify_contraction(potential: Potential, params: SpinParams, samples: int, rng: np.random.Generator,
                       d_max: Optional[int] = None, lambda_v: Optional[float] = None) -> Dict:
    """
    Stress the declared rate bound on random child vectors drawn log-uniformly
    over the domain. Returns the worst observed rate/bound ratio and the violation count.
    """
    if d_max is None:
        d_max = potential.max_children if potential.max_children is not None else 50
    lam = potential.lam if lambda_v is None else lambda_v
    lo = potential.lo if potential.lo > 0 else potential.hi * 1e-12
    worst, worst_case, violations = 0.0, None, 0
    if d_max < 1:
        return {'samples': 0, 'worst_ratio': 0.0, 'worst_case': None, 'violations': 0}
    for _ in range(samples):
        d = int(rng.integers(1, d_max + 1))
        xs = np.exp(rng.uniform(math.log(lo), math.log(potential.hi), size=d))
        rate = decay_rate(potential, params, lam, xs)
        bound = potential.rate_bound(d)
        ratio = rate / bound if bound > 0 else math.inf
        if ratio > worst:
            worst, worst_case = ratio, {'d': d, 'rate': rate, 'bound': bound}
        if rate > bound * (1 + 1e-9):
            violations += 1
    return {'samples': samples, 'worst_ratio': worst, 'worst_case': worst_case, 'violations': violations}
