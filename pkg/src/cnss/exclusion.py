"""Exclusion polynomials.

Each constructor returns a polynomial that vanishes everywhere on its
domain except at the excluded input(s), where it takes a prescribed value.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .errors import ArityError, FieldMismatchError
from .field import FieldElement, check_prime
from .poly import Polynomial


@dataclass(frozen=True)
class BooleanPoint:
    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"not a Boolean point: {self.bits}")
        object.__setattr__(self, "bits", bits)

    @property
    def n(self) -> int:
        return len(self.bits)

    @property
    def ones(self) -> int:
        return sum(self.bits)

    @property
    def complement(self) -> tuple[int, ...]:
        return tuple(1 - b for b in self.bits)


def _as_bits(b) -> BooleanPoint:
    return b if isinstance(b, BooleanPoint) else BooleanPoint(tuple(b))


def _point_vanisher(p: int, n: int, c: Sequence[int]) -> Polynomial:
    """prod_j prod_{q != c_j} (x_j - q): zero off ``c``, (-1)^n at ``c``."""
    result = Polynomial.constant(p, n, 1)
    for j, cj in enumerate(c, start=1):
        x = Polynomial.variable(p, n, j)
        for q in range(p):
            if q != cj:
                result = result * (x - q)
    return result


def exclude_point(f: Polynomial, c: Sequence[int | FieldElement]) -> Polynomial:
    """Polynomial g with g(c) = -f(c) and g = 0 at every other point of F_p^n.

    The coefficient of x1^(p-1)...xn^(p-1) in g is -(-1)^n f(c).
    """
    if len(c) != f.arity:
        raise ArityError(f"point of length {len(c)} for arity {f.arity}")
    for v in c:
        if isinstance(v, FieldElement) and v.modulus != f.p:
            raise FieldMismatchError(f"F_{v.modulus} point used with F_{f.p} polynomial")
    p, n = f.p, f.arity
    c = [int(v) % p for v in c]
    value = f.value_at(c)
    if value == 0:
        return Polynomial.zero(p, n)
    sign = 1 if n % 2 == 0 else -1
    return _point_vanisher(p, n, c).scale(-value * sign)


def exclude_boolean_point(b, p: int) -> Polynomial:
    """(-1)^(k+1) prod_i (Q_i - x_i), with Q the complement of ``b`` and k its weight.

    Equals -1 at ``b`` and 0 at every other point of {0,1}^n.
    """
    check_prime(p)
    b = _as_bits(b)
    n = b.n
    result = Polynomial.constant(p, n, 1 if b.ones % 2 else -1)
    for i, q in enumerate(b.complement, start=1):
        result = result * (q - Polynomial.variable(p, n, i))
    return result


def exclude_indicator_subset(b, p: int) -> Polynomial:
    """prod_v (x_v - Q_v) with Q the complement indicator of ``b``.

    Equals (-1)^(n-k) at ``b`` and 0 elsewhere on {0,1}^n, so its sign
    tracks the parity of the excluded subset's complement.
    """
    check_prime(p)
    b = _as_bits(b)
    n = b.n
    result = Polynomial.constant(p, n, 1)
    for i, q in enumerate(b.complement, start=1):
        result = result * (Polynomial.variable(p, n, i) - q)
    return result


def axis_zero_exclusion(p: int) -> Polynomial:
    """x(x^(p-1) - y^(p-1)) + y(y^(p-1) - x^(p-1)) in F_p[x, y].

    Returns x on (x, 0) and y on (0, y); zero on (0, 0) and off the axes.
    """
    check_prime(p)
    x = Polynomial.variable(p, 2, 1)
    y = Polynomial.variable(p, 2, 2)
    diff = x ** (p - 1) - y ** (p - 1)
    return x * diff - y * diff


def inverse_pair_exclusion(p: int) -> Polynomial:
    """(1 - (x + y)^(p-1)) x^2: equals a^2 on (a, -a), zero elsewhere."""
    check_prime(p)
    x = Polynomial.variable(p, 2, 1)
    y = Polynomial.variable(p, 2, 2)
    return (1 - (x + y) ** (p - 1)) * x**2


def sum_product_polynomial(p: int) -> Polynomial:
    """xy - (x + y), the running example for the two-variable exclusions."""
    x = Polynomial.variable(p, 2, 1)
    y = Polynomial.variable(p, 2, 2)
    return x * y - (x + y)
