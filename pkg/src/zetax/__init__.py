"""Certified recomputation of explicit constants for zeros of Dedekind zeta functions."""

__version__ = "0.1.0"
