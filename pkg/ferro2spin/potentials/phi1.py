"""
First-order potential Phi_1 = log x for the bounded-degree regime
"""
import logging
import math
from typing import Optional

import numpy as np

from ferro2spin.errors import DegreeTooLarge, SpinSystemError
from ferro2spin.potentials.base import GOOD, Potential
from ferro2spin.spin_core.system import SpinParams
from ferro2spin.thresholds.critical import delta_c

logger = logging.getLogger(__name__)


def _phi1(x):
    return 1.0 / np.asarray(x, dtype=float)


def make_phi1(params: SpinParams, max_degree: int, lam: float, lam_min: Optional[float] = None) -> Potential:
    """
    phi_1 = 1/x, good for every d <= max_degree - 1 with alpha = (max_degree - 1)/Delta_c.

    The domain holds every ratio a free non-root vertex can take:
    [lam_min min(1, 1/gamma)^(D-1), lam max(1, beta)^(D-1)] with D = max_degree.
    """
    if max_degree < 0 or int(max_degree) != max_degree:
        raise SpinSystemError(f"max degree must be a nonnegative integer, got {max_degree}")
    if lam <= 0:
        raise SpinSystemError(f"lambda must be positive, got {lam}")
    dc = delta_c(params)
    k = max(max_degree - 1, 0)
    if k >= dc:
        raise DegreeTooLarge(f"max degree {max_degree} - 1 >= Delta_c {dc}: bounded mode unavailable")
    lam_min = lam if lam_min is None else lam_min
    lo = lam_min * min(1.0, 1.0 / params.gamma) ** k
    hi = lam * max(1.0, params.beta) ** k
    potential = Potential(
        name='phi1',
        kind=GOOD,
        phi=_phi1,
        lo=lo,
        hi=hi,
        c1=1.0 / hi,
        c2=1.0 / lo,
        alpha=k / dc,
        lam=lam,
        params=params,
        max_children=k,
        details={'delta_c': dc},
    )
    logger.debug(f"phi1: alpha = {potential.alpha:.6f} on [{lo:.6g}, {hi:.6g}]")
    return potential
