"""
Universal potential Phi_2 for beta <= 1 < gamma below lambda_c
"""
import logging
import math
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from ferro2spin.errors import ContractionError, LambdaAtOrAboveCritical, SpinSystemError
from ferro2spin.potentials.base import UNIVERSAL, Potential
from ferro2spin.spin_core.system import SpinParams
from ferro2spin.thresholds.critical import lambda_c

logger = logging.getLogger(__name__)

ALPHA_MARGIN = 1e-6
GRID_POINTS = 1000
MAX_BASE_M = 100000
MAX_TAIL_D = 1 << 22


@dataclass(frozen=True)
class Phi2Config:
    alpha_lambda: float
    t: float
    knots: Optional[Tuple[float, float]] = None

    def to_dict(self) -> Dict:
        return {
            'alpha_lambda': self.alpha_lambda,
            't': self.t,
            'knots': list(self.knots) if self.knots else None,
        }


def _check_regime(params: SpinParams, lam: float) -> float:
    params.require_beta_le_gamma()
    if lam <= 0:
        raise SpinSystemError(f"lambda must be positive, got {lam}")
    lc = lambda_c(params)
    if lam >= lc:
        raise LambdaAtOrAboveCritical(f"lambda {lam} >= lambda_c {lc}")
    return lc


def g_lambda(params: SpinParams, lam: float, x):
    """(bg-1) x log(lam/x) / ((beta x + 1)(x + gamma) log((x + gamma)/(beta x + 1)))."""
    beta, gamma, bg = params.beta, params.gamma, params.bg
    x = np.asarray(x, dtype=float)
    num = (bg - 1) * x * np.log(lam / x)
    den = (beta * x + 1) * (x + gamma) * np.log((x + gamma) / (beta * x + 1))
    return num / den


def compute_alpha_lambda(params: SpinParams, lam: float) -> float:
    """
    sup of g_lambda over (0, lam], located on a log-grid and refined with a
    bounded scalar search, then inflated by a relative margin.
    """
    _check_regime(params, lam)
    grid = np.geomspace(lam * 1e-12, lam, GRID_POINTS)
    values = g_lambda(params, lam, grid)
    i = int(np.argmax(values))
    a, b = grid[max(i - 1, 0)], grid[min(i + 1, GRID_POINTS - 1)]
    res = minimize_scalar(lambda x: -float(g_lambda(params, lam, x)), bounds=(a, b),
                          method='bounded', options={'xatol': lam * 1e-12})
    sup = max(float(values[i]), -float(res.fun))
    alpha = (1 + ALPHA_MARGIN) * sup
    if not alpha < 1:
        raise ContractionError(f"alpha_lambda = {alpha} at lambda {lam} is not below 1")
    return alpha


def phi2_threshold(params: SpinParams, lam: float, alpha_lambda: float) -> float:
    """t = alpha_lambda gamma / (bg - 1) * log((lam + gamma)/(beta lam + 1))."""
    return alpha_lambda * params.gamma / (params.bg - 1) * math.log((lam + params.gamma) / (params.beta * lam + 1))


def phi2_config(params: SpinParams, lam: float) -> Phi2Config:
    alpha = compute_alpha_lambda(params, lam)
    t = phi2_threshold(params, lam, alpha)
    if t >= lam / math.e:
        return Phi2Config(alpha_lambda=alpha, t=t)

    def h(x):
        return x * math.log(lam / x) - t

    peak = lam / math.e
    kappa0 = brentq(h, lam * 1e-300, peak, xtol=1e-300, rtol=1e-12, maxiter=1000)
    kappa1 = brentq(h, peak, lam, rtol=1e-12, maxiter=1000)
    return Phi2Config(alpha_lambda=alpha, t=t, knots=(kappa0, kappa1))


def select_base_m(params: SpinParams, lam: float, alpha: float) -> Tuple[int, int, int]:
    """
    Smallest M >= max(2, d0) such that
    B(d) = (alpha lam / t) r^d d log(1/r) <= alpha^ceil(log_M(d+1))
    for every d >= M, with r = (beta lam + 1)/(lam + gamma) and r^d0 < 1/e.

    The range [M, D] is checked directly; past D the bound follows from
    h(d) = log B(d) - (1 + log_M(d+1)) log alpha being negative and decreasing at D.
    Returns (M, d0, D).
    """
    _check_regime(params, lam)
    r = (params.beta * lam + 1) / (lam + params.gamma)
    log_r = math.log(r)
    d0 = max(1, math.floor(-1 / log_r) + 1)
    while d0 * log_r >= -1:
        d0 += 1
    t = phi2_threshold(params, lam, alpha)
    log_scale = math.log(alpha * lam / t) + math.log(-log_r)
    log_alpha = math.log(alpha)

    def log_b(d):
        return log_scale + d * log_r + np.log(d)

    for m in range(max(2, d0), MAX_BASE_M + 1):
        big_d = max(1000, m * m)
        while big_d <= MAX_TAIL_D:
            ds = np.arange(m, big_d + 1, dtype=float)
            powers = [1]
            while powers[-1] < big_d + 1:
                powers.append(powers[-1] * m)
            exponents = np.searchsorted(np.array(powers, dtype=float), ds + 1, side='left')
            if np.any(log_b(ds) > exponents * log_alpha + 1e-12):
                break
            ln_m = math.log(m)
            h = log_b(big_d) - (1 + math.log(big_d + 1) / ln_m) * log_alpha
            h_prime = log_r + 1 / big_d - log_alpha / ((big_d + 1) * ln_m)
            if h < 0 and h_prime < 0:
                logger.debug(f"base M = {m} (d0 = {d0}) verified up to {big_d}")
                return m, d0, big_d
            big_d *= 2
    raise ContractionError(f"no base M <= {MAX_BASE_M} satisfies the tail bound at lambda {lam}")


def make_phi2(params: SpinParams, lam: float) -> Potential:
    """
    phi_2 = 1/t, except 1/(x log(lam/x)) on [kappa0, kappa1) when the knots exist.
    Universal on (0, lam] with alpha_lambda and the base M of select_base_m.
    """
    config = phi2_config(params, lam)
    t, knots = config.t, config.knots

    def phi(x):
        x = np.asarray(x, dtype=float)
        out = np.full(x.shape, 1.0 / t)
        if knots is not None:
            mask = (x >= knots[0]) & (x < knots[1])
            out[mask] = 1.0 / (x[mask] * np.log(lam / x[mask]))
        return out

    m, d0, verified = select_base_m(params, lam, config.alpha_lambda)
    return Potential(
        name='phi2',
        kind=UNIVERSAL,
        phi=phi,
        lo=0.0,
        hi=lam,
        c1=math.e / lam if knots is not None else 1.0 / t,
        c2=1.0 / t,
        alpha=config.alpha_lambda,
        lam=lam,
        params=params,
        base_m=m,
        details={**config.to_dict(), 'd0': d0, 'verified_up_to': verified},
    )
