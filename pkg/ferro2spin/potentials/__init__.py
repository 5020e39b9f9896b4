"""
Potentials: Phi_1, Phi_2, Phi_3, amortized decay rates and contraction checks.
"""
from ferro2spin.potentials.base import GOOD, UNIVERSAL, Potential, decay_rate, verify_contraction
from ferro2spin.potentials.inequality import key_inequality_check
from ferro2spin.potentials.phi1 import make_phi1
from ferro2spin.potentials.phi2 import (
    Phi2Config, compute_alpha_lambda, g_lambda, make_phi2, phi2_config, phi2_threshold, select_base_m,
)
from ferro2spin.potentials.phi3 import (
    Phi3Certificate, make_phi3, make_phi3_certificate, phi3, phi3_threshold, rho_second, symmetric_rate,
    symmetrized_point,
)

__all__ = [
    'GOOD', 'UNIVERSAL', 'Potential', 'decay_rate', 'verify_contraction',
    'key_inequality_check', 'make_phi1',
    'Phi2Config', 'compute_alpha_lambda', 'g_lambda', 'make_phi2', 'phi2_config', 'phi2_threshold', 'select_base_m',
    'Phi3Certificate', 'make_phi3', 'make_phi3_certificate', 'phi3', 'phi3_threshold', 'rho_second',
    'symmetric_rate', 'symmetrized_point',
]
