"""
Self-avoiding-walk trees: graph marginals as tree marginals.
"""
from ferro2spin.saw.builder import build_saw, saw_ratio_exact

__all__ = ['build_saw', 'saw_ratio_exact']
