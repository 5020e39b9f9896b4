"""
Potential Phi_3 and its certificate for fields just beyond lambda_c

phi_3(x) = 1/(x (log(1 + 1/x) + t)). Contraction is certified through the
symmetric rate: per-degree maxima for d <= 100 and a tail bound C0 * C1 beyond.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

import numpy as np
from scipy.optimize import minimize_scalar

from ferro2spin.errors import ConcavityCheckFailed, ContractionError, SpinSystemError
from ferro2spin.potentials.base import UNIVERSAL, Potential
from ferro2spin.spin_core.system import SpinParams
from ferro2spin.thresholds.critical import delta_c

logger = logging.getLogger(__name__)

DIRECT_DEGREES = 100
TAIL_DEGREES = 100000
CONCAVITY_GRID = 10000
RATE_GRID = 2000
DEFAULT_KAPPA = 1e-9
DEFAULT_BASE_M = DIRECT_DEGREES + 1


@dataclass(frozen=True)
class Phi3Certificate:
    beta: float
    gamma: float
    lam: float
    t3: float
    concavity_margin: float
    closed_form_bound: float
    per_degree_max: Dict[int, Tuple[float, float]] = field(default_factory=dict)
    c0: float = 0.0
    c1_tail: float = 0.0
    alpha3: float = 1.0

    @property
    def argmax_degree(self) -> int:
        return max(self.per_degree_max, key=lambda d: self.per_degree_max[d][1])

    @property
    def tail_bound(self) -> float:
        return self.c0 * self.c1_tail

    def certified_exponent(self) -> int:
        """Largest k with alpha3^k >= C0 C1: degrees below M^k are covered by the tail bound."""
        return math.floor(math.log(self.tail_bound) / math.log(self.alpha3))

    def to_dict(self) -> Dict:
        d = self.argmax_degree
        return {
            'beta': self.beta,
            'gamma': self.gamma,
            'lambda': self.lam,
            't3': self.t3,
            'concavity_margin': self.concavity_margin,
            'closed_form_bound': self.closed_form_bound,
            'argmax_degree': d,
            'argmax_x': self.per_degree_max[d][0],
            'per_degree_max': {str(k): list(v) for k, v in self.per_degree_max.items()},
            'c0': self.c0,
            'c1_tail': self.c1_tail,
            'alpha3': self.alpha3,
        }


def phi3_threshold(params: SpinParams) -> float:
    """t = Delta_c log sqrt(gamma/beta) / (sqrt(gamma/beta) + 1) - log(1 + sqrt(beta/gamma))."""
    q = math.sqrt(params.gamma / params.beta)
    return delta_c(params) * math.log(q) / (q + 1) - math.log(1 + 1 / q)


def phi3(x, t: float):
    x = np.asarray(x, dtype=float)
    return 1.0 / (x * (np.log1p(1.0 / x) + t))


def rho_second(params: SpinParams, t: float, s):
    """
    Second derivative in s of rho = A(u) B(u), u = e^s, with
    A = 1 + bg - beta/u - gamma u and B = log(((gamma-1)u + beta - 1)/(gamma u - 1)) + t.
    """
    beta, gamma = params.beta, params.gamma
    u = np.exp(np.asarray(s, dtype=float))
    a = 1 + beta * gamma - beta / u - gamma * u
    a1 = beta / u - gamma * u
    a2 = -beta / u - gamma * u
    p = (gamma - 1) * u + beta - 1
    q = gamma * u - 1
    b = np.log(p / q) + t
    b1 = (gamma - 1) * u / p - gamma * u / q
    b2 = (gamma - 1) * (beta - 1) * u / p ** 2 + gamma * u / q ** 2
    return a2 * b + 2 * a1 * b1 + a * b2


def concavity_check(params: SpinParams, t: float) -> Tuple[float, float]:
    """
    (max of rho'' on the open s-interval, closed-form upper bound of the same).
    Passes only when margin <= closed < 0.
    """
    beta, gamma, bg = params.beta, params.gamma, params.bg
    s = np.linspace(-math.log(gamma) + 1e-9, math.log(beta) - 1e-9, CONCAVITY_GRID)
    margin = float(np.max(rho_second(params, t, s)))
    closed = gamma * (beta + 1) + gamma * (bg - 1) / (gamma - 1) - bg - (beta - 1) / (gamma - 1) - 2 * t
    if not margin < 0:
        raise ConcavityCheckFailed(
            f"rho is not concave at beta={beta}, gamma={gamma}: max rho'' = {margin}"
        )
    if not margin <= closed < 0:
        raise ConcavityCheckFailed(
            f"closed-form bound {closed} does not certify concavity at beta={beta}, gamma={gamma}: "
            f"max rho'' = {margin}"
        )
    return margin, closed


def symmetric_rate(params: SpinParams, lam: float, t: float, d: int, x):
    """
    C_d at d equal children x:
    d (bg-1) / (log(1 + 1/f_d(x)) + t) * x (log(1 + 1/x) + t) / ((beta x + 1)(x + gamma)).
    """
    beta, gamma, bg = params.beta, params.gamma, params.bg
    x = np.asarray(x, dtype=float)
    log_f = math.log(lam) + d * np.log((beta * x + 1) / (x + gamma))
    root_term = np.logaddexp(0.0, -log_f) + t
    return d * (bg - 1) / root_term * x * (np.log1p(1.0 / x) + t) / ((beta * x + 1) * (x + gamma))


def symmetrized_point(params: SpinParams, lam: float, xs) -> float:
    """The x with f_d(x) = F_d(xs), d = len(xs)."""
    beta, gamma = params.beta, params.gamma
    xs = np.asarray(xs, dtype=float)
    q = math.exp(float(np.mean(np.log((beta * xs + 1) / (xs + gamma)))))
    return (gamma * q - 1) / (beta - q)


def _maximize(fn, lo: float, hi: float) -> Tuple[float, float]:
    grid = np.geomspace(lo, hi, RATE_GRID)
    values = fn(grid)
    i = int(np.argmax(values))
    a, b = grid[max(i - 1, 0)], grid[min(i + 1, RATE_GRID - 1)]
    res = minimize_scalar(lambda x: -float(fn(x)), bounds=(a, b), method='bounded',
                          options={'xatol': 1e-10})
    if -res.fun >= values[i]:
        return float(res.x), float(-res.fun)
    return float(grid[i]), float(values[i])


def make_phi3_certificate(params: SpinParams, lam: float) -> Phi3Certificate:
    if lam <= 0:
        raise SpinSystemError(f"lambda must be positive, got {lam}")
    params.require_beta_le_gamma()
    beta, bg = params.beta, params.bg
    t = phi3_threshold(params)
    margin, closed = concavity_check(params, t)

    per_degree = {
        d: _maximize(lambda x, d=d: symmetric_rate(params, lam, t, d, x), 1e-9, lam)
        for d in range(1, DIRECT_DEGREES + 1)
    }
    _, c0 = _maximize(lambda x: x * (np.log1p(1.0 / x) + t) / ((beta * x + 1) * (x + params.gamma)), 1e-9, lam)

    if beta < 1:
        ds = np.arange(DIRECT_DEGREES + 1, TAIL_DEGREES + 1, dtype=float)
        tail = ds * (bg - 1) / (np.logaddexp(0.0, -math.log(lam) - ds * math.log(beta)) + t)
        c1 = max(float(tail.max()), (bg - 1) / -math.log(beta))
    else:
        c1 = math.inf

    alpha3 = max(max(v for _, v in per_degree.values()), c0 * c1)
    if not alpha3 < 1:
        raise ContractionError(f"phi3 does not contract at beta={beta}, gamma={params.gamma}, lambda={lam}: "
                               f"alpha = {alpha3}")
    certificate = Phi3Certificate(
        beta=beta, gamma=params.gamma, lam=lam, t3=t,
        concavity_margin=margin, closed_form_bound=closed,
        per_degree_max=per_degree, c0=c0, c1_tail=c1, alpha3=alpha3,
    )
    logger.info(f"phi3 certificate: t = {t:.6f}, alpha = {alpha3:.6f} at d = {certificate.argmax_degree}")
    return certificate


def make_phi3(params: SpinParams, lam: float, kappa: float = DEFAULT_KAPPA, base_m: int = DEFAULT_BASE_M,
              certificate: Optional[Phi3Certificate] = None) -> Potential:
    """phi_3 chopped at kappa, phi_3c(x) = phi_3(max(x, kappa)), as a universal potential on (0, lam]."""
    certificate = certificate or make_phi3_certificate(params, lam)
    t = certificate.t3

    def phi(x):
        return phi3(np.maximum(np.asarray(x, dtype=float), kappa), t)

    return Potential(
        name='phi3',
        kind=UNIVERSAL,
        phi=phi,
        lo=0.0,
        hi=lam,
        c1=float(phi3(lam, t)),
        c2=float(phi3(kappa, t)),
        alpha=certificate.alpha3,
        lam=lam,
        params=params,
        base_m=base_m,
        details={'t3': t, 'kappa': kappa, 'certified_exponent': certificate.certified_exponent()},
    )
