"""Exact constructions and verifiers for signed difference sets."""

__version__ = "1.0.0"
