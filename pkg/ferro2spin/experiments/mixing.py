"""
Spatial Mixing Module - Marginal discrepancy between trees sharing their first levels
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np
from scipy.stats import linregress

from ferro2spin.errors import LambdaAtOrAboveCritical
from ferro2spin.potentials import make_phi2
from ferro2spin.spin_core.system import SpinParams
from ferro2spin.thresholds.critical import lambda_c
from ferro2spin.tree_engine.depth import ceil_log
from ferro2spin.tree_engine.generators import random_tree_pair
from ferro2spin.tree_engine.recursion import exact_tree_marginal, ratio_to_probability

logger = logging.getLogger(__name__)

# discrepancies below this are rounding noise and stay out of the fit
FIT_FLOOR = 1e-13
R_SQUARED_TARGET = 0.95


@dataclass
class MixingRun:
    beta: float
    gamma: float
    lam: float
    d_max: int
    suffix_depth: int
    trials: int
    ells: List[int] = field(default_factory=list)
    discrepancies: List[float] = field(default_factory=list)
    slope: Optional[float] = None
    intercept: Optional[float] = None
    r_squared: Optional[float] = None
    certified_slope: Optional[float] = None

    @property
    def fit_ok(self) -> bool:
        return self.r_squared is not None and self.r_squared >= R_SQUARED_TARGET

    def to_dict(self) -> Dict:
        return {
            'beta': self.beta,
            'gamma': self.gamma,
            'lambda': self.lam,
            'd_max': self.d_max,
            'suffix_depth': self.suffix_depth,
            'trials': self.trials,
            'ells': self.ells,
            'discrepancies': self.discrepancies,
            'slope': self.slope,
            'intercept': self.intercept,
            'r_squared': self.r_squared,
            'certified_slope': self.certified_slope,
            'fit_ok': self.fit_ok,
        }

    def rows(self) -> List[Dict]:
        return [{'ell': ell, 'discrepancy': d} for ell, d in zip(self.ells, self.discrepancies)]


def mixing_trial_cell(beta: float, gamma: float, lam: float, ell: int, seed: int, trial: int,
                      d_max: int = 8, suffix_depth: int = 3, width_cap: int = 16) -> float:
    """|p_v - p_v'| for one random tree pair; trial 0 uses the extreme suffixes."""
    params = SpinParams(beta, gamma)
    rng = np.random.default_rng([seed, ell, trial])
    first, second = random_tree_pair(rng, ell, lam, d_max=d_max, suffix_depth=suffix_depth,
                                     width_cap=width_cap, extreme=(trial == 0))
    p1 = ratio_to_probability(exact_tree_marginal(first, params))
    p2 = ratio_to_probability(exact_tree_marginal(second, params))
    return abs(p1 - p2)


def certified_mixing_slope(params: SpinParams, lam: float, d_max: int) -> float:
    """log alpha_lambda per plain level, charging ceil(log_M(d_max + 1)) M-levels per step."""
    potential = make_phi2(params, lam)
    return math.log(potential.alpha) / ceil_log(d_max + 1, potential.base_m)


def fit_decay(ells: Sequence[int], discrepancies: Sequence[float]) -> Optional[Dict]:
    points = [(ell, math.log(d)) for ell, d in zip(ells, discrepancies) if d > FIT_FLOOR]
    if len(points) < 3:
        return None
    xs, ys = zip(*points)
    fit = linregress(xs, ys)
    return {'slope': float(fit.slope), 'intercept': float(fit.intercept), 'r_squared': float(fit.rvalue ** 2)}


def mixing_decay(params: SpinParams, lam: float, ells: Sequence[int] = range(1, 15), trials: int = 32,
                 d_max: int = 8, suffix_depth: int = 3, width_cap: int = 16, seed: int = 0,
                 jobs: int = 1) -> MixingRun:
    """
    Max discrepancy over `trials` random tree pairs for each shared depth ell,
    with a log-linear fit of the decay.
    """
    from ferro2spin.experiments.tasks import dispatch, mixing_trial

    params.require_beta_le_gamma()
    lc = lambda_c(params)
    if not 0 < lam < lc:
        raise LambdaAtOrAboveCritical(f"lambda {lam} must lie in (0, lambda_c = {lc})")

    ells = list(ells)
    payloads = [
        {'beta': params.beta, 'gamma': params.gamma, 'lam': lam, 'ell': ell, 'seed': seed, 'trial': trial,
         'd_max': d_max, 'suffix_depth': suffix_depth, 'width_cap': width_cap}
        for ell in ells for trial in range(trials)
    ]
    values = dispatch(mixing_trial, payloads, jobs)
    discrepancies = [max(values[i * trials:(i + 1) * trials]) for i in range(len(ells))]

    run = MixingRun(params.beta, params.gamma, lam, d_max, suffix_depth, trials, ells, discrepancies,
                    certified_slope=certified_mixing_slope(params, lam, d_max))
    fit = fit_decay(ells, discrepancies)
    if fit:
        run.slope, run.intercept, run.r_squared = fit['slope'], fit['intercept'], fit['r_squared']
    logger.info(f"Mixing at lambda={lam}: slope {run.slope}, R^2 {run.r_squared}, certified {run.certified_slope:.4g}")
    return run
