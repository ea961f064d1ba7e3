"""Parsing, printing, serialization and the command line."""
from .parser import parse_ast, parse_coefficient, parse_element, tokenize
from .printer import format_coeff, format_element, format_monomial, format_series
from .serialize import (
    order_from_spec,
    parse_document,
    parse_presentation,
    presentation_hash,
    presentation_to_dict,
)

__all__ = [
    "parse_ast", "parse_coefficient", "parse_element", "tokenize",
    "format_coeff", "format_element", "format_monomial", "format_series",
    "order_from_spec", "parse_document", "parse_presentation", "presentation_hash",
    "presentation_to_dict",
]
