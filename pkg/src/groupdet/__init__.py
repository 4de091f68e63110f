"""Exact group determinants weighted by permutation statistics."""

__version__ = "0.1.0"
