"""Simplicial Lines - line, Gallai and anti-Gallai simplicial complexes of graphs."""

__version__ = "0.1.0"
