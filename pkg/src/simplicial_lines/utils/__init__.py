"""Simplicial Lines utilities."""

from .graphs import SimpleGraph, family_graph, make_graph
from .complexes import SimplicialComplex, complex_for, f_vector
from .monomials import Monomial, facet_ideal
from .shelling import ShellingCertificate, find_shelling_order, verify_ordering
from .settings import Settings, load_settings

__all__ = [
    "SimpleGraph",
    "family_graph",
    "make_graph",
    "SimplicialComplex",
    "complex_for",
    "f_vector",
    "Monomial",
    "facet_ideal",
    "ShellingCertificate",
    "find_shelling_order",
    "verify_ordering",
    "Settings",
    "load_settings",
]
