"""
Correlation-decay approximation for ferromagnetic 2-spin systems.
"""
