"""Equivalence classes of boundary-condition diagrams and the graphs built on them."""

__version__ = "0.1.0"
