"""Exact coefficient rings, their automorphisms and derivations."""
from .fields import (
    QQ,
    ZZ,
    Domain,
    Fp,
    IntegerRing,
    PrimeField,
    RationalField,
    RationalFunctionField,
    domain_from_json,
    field_arith,
)
from .lattice import GenericityResult, genericity_check, integer_lattice_rank, verify_dependency
from .maps import Automorphism, Derivation, apply_automorphism, apply_derivation, partial
from .poly import Poly, RatFunc

__all__ = [
    "QQ", "ZZ", "Domain", "Fp", "IntegerRing", "PrimeField", "RationalField",
    "RationalFunctionField", "domain_from_json", "field_arith", "GenericityResult",
    "genericity_check", "integer_lattice_rank", "verify_dependency", "Automorphism",
    "Derivation", "apply_automorphism", "apply_derivation", "partial", "Poly", "RatFunc",
]
