"""Betti numbers of edge rings of multi-path graphs.

Closed-form multigraded Betti numbers, projective dimension and regularity,
together with a brute-force oracle on square-free initial ideals of the
toric ideal that checks them.
"""
from .graph import (
    Edge, MultiPathSpec, SimpleGraph, Vertex, V1, V2, U, big_d, build_graph,
    matching_number, matching_number_bruteforce, matching_number_formula,
    sub_spec, theta,
)
from .monomial import Monomial
from .resolution import BettiTable, MonomialIdeal, betti_table_monomial, pdim_of, reg_of

__version__ = "0.1.0"
