"""
Deterministic approximation: truncated SAW-tree marginals and self-reducibility.
"""
from ferro2spin.fptas.marginal import approx_marginal, bound_marginal_at_depth, gap_profile, select_depth
from ferro2spin.fptas.partition import approx_partition, approx_partition_report
from ferro2spin.fptas.request import (
    AUTO, BOUNDED, MODES, UNIVERSAL, ApproxRequest, ApproxResult, MarginalBounds, resolve_mode, select_potential,
)

__all__ = [
    'approx_marginal', 'bound_marginal_at_depth', 'gap_profile', 'select_depth',
    'approx_partition', 'approx_partition_report',
    'AUTO', 'BOUNDED', 'MODES', 'UNIVERSAL', 'ApproxRequest', 'ApproxResult', 'MarginalBounds', 'resolve_mode',
    'select_potential',
]
