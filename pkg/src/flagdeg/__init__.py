"""Combinatorics of a flat flag-variety degeneration restricted to Schubert varieties."""

__version__ = "0.1.0"
