"""Prime fields F_p and their elements."""

from __future__ import annotations

from functools import lru_cache

from .errors import FieldMismatchError, NotPrimeError

MAX_MODULUS = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def check_prime(p: int) -> int:
    if isinstance(p, bool) or not isinstance(p, int):
        raise NotPrimeError(f"modulus must be an integer, got {p!r}")
    if p > MAX_MODULUS:
        raise NotPrimeError(f"modulus {p} exceeds the supported bound 2^20")
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    return p


class PrimeField:
    """The field of residues modulo a prime ``p``.

    Instances are interned per modulus, so ``PrimeField(5) is PrimeField(5)``.
    """

    __slots__ = ("p",)

    def __new__(cls, p: int) -> PrimeField:
        return _field(check_prime(p))

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(value, self)

    def __iter__(self):
        return (FieldElement(v, self) for v in range(self.p))

    def __len__(self) -> int:
        return self.p

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"

    def __reduce__(self):
        return (PrimeField, (self.p,))

    def zero(self) -> FieldElement:
        return FieldElement(0, self)

    def one(self) -> FieldElement:
        return FieldElement(1, self)


@lru_cache(maxsize=None)
def _field(p: int) -> PrimeField:
    obj = object.__new__(PrimeField)
    obj.p = p
    return obj


class FieldElement:
    __slots__ = ("value", "field")

    def __init__(self, value: int, field: PrimeField | int):
        if not isinstance(field, PrimeField):
            field = PrimeField(field)
        self.field = field
        self.value = int(value) % field.p

    @property
    def modulus(self) -> int:
        return self.field.p

    def _coerce(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise FieldMismatchError(f"cannot combine elements of F_{self.modulus} and F_{other.modulus}")
            return other
        if isinstance(other, int):
            return FieldElement(other, self.field)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.value + o.value, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.value - o.value, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(o.value - self.value, self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.value * o.value, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(-self.value, self.field)

    def inverse(self) -> FieldElement:
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.modulus}")
        return FieldElement(pow(self.value, -1, self.modulus), self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        return FieldElement(pow(self.value, exponent, self.modulus), self.field)

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field is other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.modulus))

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"FieldElement({self.value}, {self.modulus})"

    def __str__(self) -> str:
        return str(self.value)


def field_arithmetic(a: FieldElement, b: FieldElement | int | None, op: str) -> FieldElement:
    """Dispatch one of ``add``, ``sub``, ``mul``, ``inv``, ``pow`` by name.

    For ``pow`` the second argument is a nonnegative integer exponent; ``inv``
    ignores it.
    """
    if op == "inv":
        return a.inverse()
    if op == "pow":
        return a ** int(b)
    if not isinstance(b, FieldElement):
        b = FieldElement(b, a.field)
    if b.field is not a.field:
        raise FieldMismatchError(f"cannot combine elements of F_{a.modulus} and F_{b.modulus}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown field operation {op!r}")
