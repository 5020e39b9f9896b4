"""
Experiments: spatial mixing, the 5-7 tree, beyond lambda_c, threshold landscapes and oracle sweeps.
"""
from ferro2spin.experiments.accuracy import accuracy_sweep, approx_instance_cell
from ferro2spin.experiments.beyond import beyond_lambda_c_demo
from ferro2spin.experiments.five_seven import five_seven_demo
from ferro2spin.experiments.landscape import LANDSCAPE_COLUMNS, landscape_row_cell, threshold_landscape
from ferro2spin.experiments.mixing import MixingRun, fit_decay, mixing_decay, mixing_trial_cell

__all__ = [
    'accuracy_sweep', 'approx_instance_cell', 'beyond_lambda_c_demo', 'five_seven_demo',
    'LANDSCAPE_COLUMNS', 'landscape_row_cell', 'threshold_landscape',
    'MixingRun', 'fit_decay', 'mixing_decay', 'mixing_trial_cell',
]
