"""Sparse multivariate polynomials over F_p.

A polynomial is a map from exponent tuples to nonzero residues. Values are
immutable; every operation returns a new polynomial.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from types import MappingProxyType

from .errors import ArityError, FieldMismatchError
from .field import FieldElement, PrimeField, check_prime

NEG_INFINITY = float("-inf")

Exponents = tuple[int, ...]


def grlex_key(exps: Exponents) -> tuple[int, Exponents]:
    """Sort key for graded-lex order (total degree, then x1 > x2 > ...)."""
    return (sum(exps), exps)


def dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    """Componentwise a >= b."""
    return all(x >= y for x, y in zip(a, b))


def _field_exponent(e: int, p: int) -> int:
    return 0 if e == 0 else (e - 1) % (p - 1) + 1


class Polynomial:
    __slots__ = ("p", "arity", "_terms", "_hash")

    def __init__(self, p: int | PrimeField, arity: int, terms: Mapping[Sequence[int], int] | Iterable = ()):
        if isinstance(p, PrimeField):
            p = p.p
        else:
            check_prime(p)
        if arity < 0:
            raise ArityError("arity must be nonnegative")
        self.p = p
        self.arity = arity
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponents, int] = {}
        for exps, c in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != arity:
                raise ArityError(f"exponent vector {exps} has length {len(exps)}, expected {arity}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            acc[exps] = (acc.get(exps, 0) + int(c)) % p
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, p: int, arity: int, terms: dict[Exponents, int]) -> Polynomial:
        # terms must already be normalized: residues in [1, p), correct lengths
        obj = object.__new__(cls)
        obj.p = p
        obj.arity = arity
        obj._terms = terms
        obj._hash = None
        return obj

    # constructors

    @classmethod
    def zero(cls, p: int, arity: int) -> Polynomial:
        return cls(p, arity)

    @classmethod
    def constant(cls, p: int, arity: int, c: int) -> Polynomial:
        return cls(p, arity, {(0,) * arity: c})

    @classmethod
    def variable(cls, p: int, arity: int, index: int) -> Polynomial:
        """The variable x_index, 1-based."""
        if not 1 <= index <= arity:
            raise ArityError(f"variable x{index} out of range for arity {arity}")
        exps = [0] * arity
        exps[index - 1] = 1
        return cls(p, arity, {tuple(exps): 1})

    @classmethod
    def monomial(cls, p: int, exps: Sequence[int], c: int = 1) -> Polynomial:
        return cls(p, len(exps), {tuple(exps): c})

    # accessors

    @property
    def field(self) -> PrimeField:
        return PrimeField(self.p)

    @property
    def terms(self) -> Mapping[Exponents, int]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def coefficient_of(self, exps: Sequence[int]) -> int:
        exps = tuple(exps)
        if len(exps) != self.arity:
            raise ArityError(f"exponent vector of length {len(exps)} for arity {self.arity}")
        return self._terms.get(exps, 0)

    def total_degree(self) -> int | float:
        if not self._terms:
            return NEG_INFINITY
        return max(sum(e) for e in self._terms)

    def sorted_terms(self) -> list[tuple[Exponents, int]]:
        """Terms in descending graded-lex order."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_term(self) -> tuple[Exponents, int] | None:
        if not self._terms:
            return None
        e = max(self._terms, key=grlex_key)
        return e, self._terms[e]

    def homogeneous_part(self, degree: int) -> Polynomial:
        return Polynomial._raw(self.p, self.arity, {e: c for e, c in self._terms.items() if sum(e) == degree})

    # arithmetic

    def _check(self, other: Polynomial) -> None:
        if other.p != self.p:
            raise FieldMismatchError(f"F_{self.p} polynomial combined with F_{other.p} polynomial")
        if other.arity != self.arity:
            raise ArityError(f"arity {self.arity} polynomial combined with arity {other.arity} polynomial")

    def _lift(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, FieldElement)):
            if isinstance(other, FieldElement) and other.modulus != self.p:
                raise FieldMismatchError(f"F_{other.modulus} scalar used with F_{self.p} polynomial")
            return Polynomial.constant(self.p, self.arity, int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        p = self.p
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = (out.get(e, 0) + c) % p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(p, self.arity, out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        p = self.p
        return Polynomial._raw(p, self.arity, {e: p - c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c: int | FieldElement) -> Polynomial:
        c = int(c) % self.p
        if c == 0:
            return Polynomial.zero(self.p, self.arity)
        p = self.p
        return Polynomial._raw(p, self.arity, {e: v * c % p for e, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.multiply(other)

    __rmul__ = __mul__

    def multiply(self, other: Polynomial, reduce: str | None = None) -> Polynomial:
        """Product, optionally reduced (``"field"`` or ``"boolean"``) term by term.

        Both reductions are ring homomorphisms onto the quotient, so reducing
        while multiplying equals reducing the full product, but keeps the
        intermediate size bounded by p^n (or 2^n).
        """
        self._check(other)
        p = self.p
        emap = _exponent_map(reduce, p)
        out: dict[Exponents, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                if emap is None:
                    e = tuple(a + b for a, b in zip(e1, e2))
                else:
                    e = tuple(emap(a + b) for a, b in zip(e1, e2))
                out[e] = (out.get(e, 0) + c1 * c2) % p
        return Polynomial._raw(p, self.arity, {e: c for e, c in out.items() if c})

    def power(self, k: int, reduce: str | None = None) -> Polynomial:
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.constant(self.p, self.arity, 1)
        base = self if reduce is None else self.reduced(reduce)
        while k:
            if k & 1:
                result = result.multiply(base, reduce)
            k >>= 1
            if k:
                base = base.multiply(base, reduce)
        return result

    def __pow__(self, k: int) -> Polynomial:
        return self.power(k)

    def reduced(self, mode: str) -> Polynomial:
        emap = _exponent_map(mode, self.p)
        if emap is None:
            return self
        p = self.p
        out: dict[Exponents, int] = {}
        for e, c in self._terms.items():
            r = tuple(emap(x) for x in e)
            out[r] = (out.get(r, 0) + c) % p
        return Polynomial._raw(p, self.arity, {e: c for e, c in out.items() if c})

    def reduce_field_map(self) -> Polynomial:
        """Replace each positive exponent e by ((e-1) mod (p-1)) + 1.

        The result computes the same function on F_p^n and has every
        exponent at most p-1.
        """
        return self.reduced("field")

    def reduce_boolean(self) -> Polynomial:
        """Multilinear form that agrees with this polynomial on {0,1}^n."""
        return self.reduced("boolean")

    # evaluation

    def value_at(self, point: Sequence[int]) -> int:
        """Evaluate at a point of integers, returning a residue in [0, p)."""
        if len(point) != self.arity:
            raise ArityError(f"point of length {len(point)} for arity {self.arity}")
        p = self.p
        xs = [int(x) % p for x in point]
        total = 0
        for e, c in self._terms.items():
            t = c
            for x, k in zip(xs, e):
                if k:
                    t = t * pow(x, k, p) % p
                    if not t:
                        break
            total += t
        return total % p

    def __call__(self, *point) -> FieldElement:
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = point[0]
        for x in point:
            if isinstance(x, FieldElement) and x.modulus != self.p:
                raise FieldMismatchError(f"F_{x.modulus} point used with F_{self.p} polynomial")
        return FieldElement(self.value_at(point), self.p)

    evaluate = __call__

    # comparison and display

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.p == other.p and self.arity == other.arity and self._terms == other._terms
        if isinstance(other, int):
            return self == Polynomial.constant(self.p, self.arity, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.p, self.arity, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial(p={self.p}, n={self.arity}, {self})"

    def __str__(self) -> str:
        from .parser import format_poly

        return format_poly(self)


def _exponent_map(mode: str | None, p: int):
    if mode is None:
        return None
    if mode == "field":
        return lambda e: _field_exponent(e, p)
    if mode == "boolean":
        return lambda e: 1 if e else 0
    raise ValueError(f"unknown reduction mode {mode!r}")


def reduce_field_map(f: Polynomial) -> Polynomial:
    return f.reduce_field_map()


def reduce_boolean(f: Polynomial) -> Polynomial:
    return f.reduce_boolean()


def total_degree(f: Polynomial) -> int | float:
    return f.total_degree()


def coefficient_of(f: Polynomial, exps: Sequence[int]) -> int:
    return f.coefficient_of(exps)


def poly_arith(f: Polynomial, g: Polynomial | int, op: str) -> Polynomial:
    """Named-operation front end: ``add``, ``sub``, ``mul``, ``pow``, ``scale``.

    For ``pow`` and ``scale`` the second argument is an integer.
    """
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "pow":
        return f.power(int(g))
    if op == "scale":
        return f.scale(g)
    raise ValueError(f"unknown polynomial operation {op!r}")
