"""Exact computer algebra for Heisenberg-invariant surface constructions."""

__version__ = "0.1.0"
