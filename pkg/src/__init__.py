"""Exact diagonalization and operator algebra for the four-spin triangular-star model."""

__version__ = "0.1.0"
