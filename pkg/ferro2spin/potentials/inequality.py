"""
Inequalities behind the lambda_c analysis, checked on sampled ratios
"""
import math
from typing import Dict

import numpy as np

from ferro2spin.spin_core.system import SpinParams
from ferro2spin.thresholds.critical import lambda_c

REL_TOL = 1e-9


def key_inequality_check(params: SpinParams, samples: int = 10000) -> Dict:
    """
    On x in (0, lambda_c], including x_hat = sqrt(gamma/beta):
      (beta x + 1)/(x + gamma) <= 1, and
      (bg-1) x log(lambda_c/x) <= (beta x + 1)(x + gamma) log((x + gamma)/(beta x + 1)),
    the latter holding with equality at x_hat.
    """
    params.require_beta_le_gamma()
    beta, gamma, bg = params.beta, params.gamma, params.bg
    lc = lambda_c(params)
    x_hat = math.sqrt(gamma / beta)
    xs = np.unique(np.append(np.geomspace(lc * 1e-9, lc, samples), x_hat))

    ratio = (beta * xs + 1) / (xs + gamma)
    lhs = (bg - 1) * xs * np.log(lc / xs)
    rhs = (beta * xs + 1) * (xs + gamma) * np.log((xs + gamma) / (beta * xs + 1))
    slack = (lhs - rhs) / np.maximum(np.abs(rhs), 1e-300)

    hat_lhs = (bg - 1) * x_hat * math.log(lc / x_hat)
    hat_rhs = (beta * x_hat + 1) * (x_hat + gamma) * math.log((x_hat + gamma) / (beta * x_hat + 1))
    return {
        'beta': beta,
        'gamma': gamma,
        'lambda_c': lc,
        'samples': int(xs.size),
        'max_ratio': float(ratio.max()),
        'ratio_violations': int(np.sum(ratio > 1 + REL_TOL)),
        'max_relative_slack': float(slack.max()),
        'inequality_violations': int(np.sum(slack > REL_TOL)),
        'x_hat': x_hat,
        'x_hat_lhs': hat_lhs,
        'x_hat_rhs': hat_rhs,
        'passed': bool(np.all(ratio <= 1 + REL_TOL) and np.all(slack <= REL_TOL)),
    }
