from .errors import CNSSError
from .field import FieldElement, PrimeField, is_prime
from .parser import format_poly, parse_poly
from .poly import NEG_INFINITY, Polynomial

__all__ = [
    "CNSSError",
    "FieldElement",
    "NEG_INFINITY",
    "Polynomial",
    "PrimeField",
    "format_poly",
    "is_prime",
    "parse_poly",
]
