"""Exact arithmetic for skew quantum polynomials and skew PBW extensions."""
from .coeffs import QQ, ZZ, Automorphism, Derivation, PrimeField, RationalFunctionField
from .elements import Element, monomial_product, mul, normalize_word
from .exponents import MonomialOrder, lex_order, make_matrix_order
from .presentation import Presentation, associated_graded, extend_scalars, iterated_form, make_presentation, validate

__all__ = [
    "QQ", "ZZ", "Automorphism", "Derivation", "PrimeField", "RationalFunctionField",
    "Element", "monomial_product", "mul", "normalize_word",
    "MonomialOrder", "lex_order", "make_matrix_order",
    "Presentation", "associated_graded", "extend_scalars", "iterated_form",
    "make_presentation", "validate",
]
