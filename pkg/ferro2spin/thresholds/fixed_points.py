"""
Fixed Point Module - Solutions of f_d(x) = x and of composed level maps
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np
from scipy.optimize import brentq

from ferro2spin.spin_core.system import SpinParams
from ferro2spin.thresholds.critical import critical_x_pair, inflection_point
from ferro2spin.tree_engine.recursion import eval_f, eval_f_prime, level_symmetric_ratio

logger = logging.getLogger(__name__)

TANGENCY_TOL = 1e-8
ROOT_TOL = 1e-12


@dataclass(frozen=True)
class FixedPointSet:
    points: List[float]
    derivatives: List[float]
    inflection: float
    tangency: List[bool] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.points)

    @property
    def has_tangency(self) -> bool:
        return any(self.tangency)

    def to_dict(self) -> Dict:
        return {
            'points': self.points,
            'derivatives': self.derivatives,
            'inflection': self.inflection,
            'tangency': self.tangency,
        }


def _dedupe(points: Sequence[float]) -> List[float]:
    merged: List[float] = []
    for x in sorted(points):
        if merged and math.isclose(x, merged[-1], rel_tol=1e-9, abs_tol=1e-15):
            continue
        merged.append(x)
    return merged


def _roots_on_regions(h: Callable[[float], float], breaks: Sequence[float]) -> List[float]:
    """One root at most per region, where h is monotone: endpoint zeros or a sign change."""
    roots = []
    for a, b in zip(breaks[:-1], breaks[1:]):
        if not a < b:
            continue
        ha, hb = h(a), h(b)
        if abs(ha) <= ROOT_TOL * max(1.0, a):
            roots.append(a)
        if abs(hb) <= ROOT_TOL * max(1.0, b):
            roots.append(b)
        elif ha * hb < 0 and abs(ha) > ROOT_TOL * max(1.0, a):
            roots.append(brentq(h, a, b, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=500))
    return roots


def fixed_points(params: SpinParams, lam: float, d: float) -> FixedPointSet:
    """
    All fixed points of f_d in [lambda gamma^-d, lambda beta^d]. The tangency
    pair x0 <= x1 (when d >= Delta_c) splits the range into regions where
    h = f_d - x is monotone.
    """
    lo, hi = eval_f(params, lam, d, 0.0), eval_f(params, lam, d, math.inf)
    breaks = [lo]
    pair = critical_x_pair(params, d)
    if pair is not None:
        breaks.extend(x for x in pair if lo < x < hi)
    breaks.append(hi)

    def h(x):
        return eval_f(params, lam, d, x) - x

    points = _dedupe(_roots_on_regions(h, breaks))
    derivatives = [eval_f_prime(params, lam, d, x) for x in points]
    return FixedPointSet(
        points=points,
        derivatives=derivatives,
        inflection=inflection_point(params, d),
        tangency=[abs(fp - 1) < TANGENCY_TOL for fp in derivatives],
    )


def composite_map(params: SpinParams, lam: float, degrees: Sequence[float]) -> Callable[[float], float]:
    """x -> f_{degrees[0]}(f_{degrees[1]}(... f_{degrees[-1]}(x)))."""
    return lambda x: level_symmetric_ratio(params, lam, degrees, leaf_ratio=x)


def scan_fixed_points(g: Callable[[float], float], lo: float, hi: float, samples: int = 4000) -> List[float]:
    """Fixed points of g on [lo, hi] by a log-spaced sign scan refined with brentq."""
    grid = np.geomspace(lo, hi, samples)
    values = np.array([g(x) - x for x in grid])
    roots = []
    for i in range(samples - 1):
        a, b = grid[i], grid[i + 1]
        va, vb = values[i], values[i + 1]
        if va == 0:
            roots.append(float(a))
        elif va * vb < 0:
            roots.append(brentq(lambda x: g(x) - x, a, b, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=500))
    if values[-1] == 0:
        roots.append(float(grid[-1]))
    return _dedupe(roots)


def composite_fixed_points(params: SpinParams, lam: float, degrees: Sequence[float],
                           samples: int = 4000) -> List[float]:
    g = composite_map(params, lam, degrees)
    return scan_fixed_points(g, g(0.0), g(math.inf), samples)
