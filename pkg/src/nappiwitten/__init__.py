"""Exact computations for the affine Nappi-Witten algebra at level 1."""

__version__ = "0.1.0"
