"""Exact shuffle-algebra and Hopf-ring kernel for secant ideals of Veronese cones."""

from .exactlin import RatMatrix, kernel_basis, rref, subspace_contains
from .polyring import GradedRing, Polynomial, parse_poly, polynomial_ring, sym_monomials
from .secant import (
    BigradedSubspace,
    GeneratorProfile,
    di_ideal_closure_check,
    di_ideal_generator_profile,
    join_piece,
    mult_map,
    ordinary_generator_profile,
    secant_ideal,
    secant_ideal_piece,
    veronese_ideal_piece,
)

__version__ = "0.1.0"

__all__ = [
    "RatMatrix", "kernel_basis", "rref", "subspace_contains",
    "GradedRing", "Polynomial", "parse_poly", "polynomial_ring", "sym_monomials",
    "BigradedSubspace", "GeneratorProfile", "di_ideal_closure_check", "di_ideal_generator_profile",
    "join_piece", "mult_map", "ordinary_generator_profile", "secant_ideal", "secant_ideal_piece",
    "veronese_ideal_piece",
]
