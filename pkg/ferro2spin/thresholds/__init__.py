"""
Thresholds: critical degree and fields, fixed points of f_d, uniqueness verdicts.
"""
from ferro2spin.thresholds.critical import (
    ThresholdReport, compute_thresholds, critical_x_pair, criticality_check, delta_c, inflection_point, lambda_c,
)
from ferro2spin.thresholds.fixed_points import (
    FixedPointSet, composite_fixed_points, composite_map, fixed_points, scan_fixed_points,
)
from ferro2spin.thresholds.uniqueness import (
    BOUNDARY, NON_UNIQUE, UNIQUE, boundary_field, boundary_log_derivative, nonunique_windows, uniqueness_at_degree,
)

__all__ = [
    'ThresholdReport', 'compute_thresholds', 'critical_x_pair', 'criticality_check', 'delta_c',
    'inflection_point', 'lambda_c',
    'FixedPointSet', 'composite_fixed_points', 'composite_map', 'fixed_points', 'scan_fixed_points',
    'BOUNDARY', 'NON_UNIQUE', 'UNIQUE', 'boundary_field', 'boundary_log_derivative', 'nonunique_windows',
    'uniqueness_at_degree',
]
