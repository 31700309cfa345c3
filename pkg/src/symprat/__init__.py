"""Exact invariants of symplectic forms on CP^2 blown up at k <= 8 points."""

__version__ = "0.1.0"
