"""Common roots of polynomial systems and their residues mod p."""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field

from .core import Grid, check_budget, find_witness
from .errors import ArityError, FieldMismatchError, FormatError, PreconditionError
from .exclusion import exclude_point
from .field import check_prime
from .parser import parse_poly
from .poly import Polynomial
from .report import Assertion

RULES = ("T3", "T4", "T5", "T7")


@dataclass(frozen=True)
class PolySystem:
    polys: tuple[Polynomial, ...]

    def __post_init__(self):
        polys = tuple(self.polys)
        if not polys:
            raise ValueError("a system needs at least one polynomial")
        p, n = polys[0].p, polys[0].arity
        for f in polys[1:]:
            if f.p != p:
                raise FieldMismatchError("system members live over different fields")
            if f.arity != n:
                raise ArityError("system members have different arities")
        object.__setattr__(self, "polys", polys)

    @classmethod
    def of(cls, *polys: Polynomial) -> PolySystem:
        return cls(tuple(polys))

    @classmethod
    def parse(cls, text: str) -> PolySystem:
        """Read the ``p=<prime> n=<arity>`` header format, one polynomial per line."""
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if not lines:
            raise FormatError("empty system file")
        header = dict(_header_fields(lines[0]))
        if set(header) != {"p", "n"}:
            raise FormatError(f"bad system header {lines[0]!r}; expected 'p=<prime> n=<arity>'")
        p, n = header["p"], header["n"]
        check_prime(p)
        if len(lines) < 2:
            raise FormatError("system file lists no polynomials")
        return cls(tuple(parse_poly(ln, p, n) for ln in lines[1:]))

    def to_text(self) -> str:
        return f"p={self.p} n={self.n}\n" + "".join(f"{f}\n" for f in self.polys)

    @property
    def p(self) -> int:
        return self.polys[0].p

    @property
    def n(self) -> int:
        return self.polys[0].arity

    @property
    def m(self) -> int:
        return len(self.polys)

    @property
    def degree_sum(self) -> int:
        return sum(f.total_degree() for f in self.polys if not f.is_zero())

    def nonzero(self) -> list[Polynomial]:
        return [f for f in self.polys if not f.is_zero()]


def _header_fields(line: str):
    for part in line.split():
        key, sep, value = part.partition("=")
        if not sep:
            raise FormatError(f"bad header field {part!r}")
        try:
            yield key.strip(), int(value)
        except ValueError as exc:
            raise FormatError(f"bad header field {part!r}") from exc


@dataclass(frozen=True)
class ResiduePrediction:
    predicted: int
    certificate: int
    rule: str
    details: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.rule not in RULES:
            raise ValueError(f"unknown rule {self.rule!r}")


def common_root_indicator(sys: PolySystem, reduce: str | None = None) -> Polynomial:
    """prod_i (1 - P_i^(p-1)): 1 on common roots, 0 elsewhere.

    With ``reduce="field"`` the product is kept in reduced form throughout.
    """
    p, n = sys.p, sys.n
    result = Polynomial.constant(p, n, 1)
    for f in sys.polys:
        factor = 1 - f.power(p - 1, reduce)
        result = result.multiply(factor, reduce)
    return result


def common_roots(sys: PolySystem, budget: int | None = None) -> Iterator[tuple[int, ...]]:
    check_budget(sys.p**sys.n, budget)
    polys = sys.nonzero()
    for x in itertools.product(range(sys.p), repeat=sys.n):
        if all(f.value_at(x) == 0 for f in polys):
            yield x


def count_common_roots(sys: PolySystem, budget: int | None = None) -> int:
    return sum(1 for _ in common_roots(sys, budget))


@dataclass
class WarningReport:
    count: int
    residue: int
    second_root: tuple[int, ...] | None
    assertions: list[Assertion]


def warning_check(sys: PolySystem, known_root: Sequence[int] | None = None,
                  budget: int | None = None) -> WarningReport:
    """Check that a system with degree sum below n has p | #roots.

    Given a known root, also produce a second, distinct one.
    """
    if sys.degree_sum >= sys.n:
        raise PreconditionError(f"degree sum {sys.degree_sum} is not below n = {sys.n}")
    p = sys.p
    if known_root is not None:
        known_root = tuple(int(v) % p for v in known_root)
        if len(known_root) != sys.n:
            raise ArityError(f"known root has length {len(known_root)}, expected {sys.n}")
        if any(f.value_at(known_root) for f in sys.polys):
            raise PreconditionError(f"{known_root} is not a common root")
    roots = list(common_roots(sys, budget))
    count = len(roots)
    assertions = [Assertion.check(f"number of common roots ({count}) is divisible by {p}", count % p == 0)]
    second = None
    if known_root is not None:
        second = next((r for r in roots if r != known_root), None)
        assertions.append(Assertion.check("a second common root exists", second is not None))
    return WarningReport(count, count % p, second, assertions)


def theorem4_classify(sys: PolySystem) -> ResiduePrediction:
    """Predict #roots mod p as +1, -1 or 0 when the degree sum is at most n.

    The +/-1 case needs every member nonconstant and a nonzero coefficient q
    of x1...xn among the degree-n terms of the product of the members; the
    sign is + when n and m have equal parity. Zero members are dropped.
    """
    polys = sys.nonzero()
    p, n, m = sys.p, sys.n, len(polys)
    if sys.degree_sum > n:
        raise PreconditionError(f"degree sum {sys.degree_sum} exceeds n = {n}")
    q = 0
    if all(not f.is_constant() for f in polys):
        product = Polynomial.constant(p, n, 1)
        for f in polys:
            product = product * f
        if product.total_degree() == n:
            q = product.coefficient_of((1,) * n)
    if q:
        predicted = 1 if (n - m) % 2 == 0 else p - 1
    else:
        predicted = 0
    return ResiduePrediction(predicted % p, q, "T4", {"m": m, "n": n})


def theorem5_predict(sys: PolySystem) -> ResiduePrediction:
    """#roots = (-1)^n d mod p, d the x1^(p-1)...xn^(p-1) coefficient of the
    reduced common-root indicator."""
    p, n = sys.p, sys.n
    g = common_root_indicator(sys, reduce="field")
    d = g.coefficient_of((p - 1,) * n)
    predicted = d if n % 2 == 0 else -d
    return ResiduePrediction(predicted % p, d, "T5", {"indicator_terms": len(g)})


@dataclass
class DriverTrace:
    """Outcome of excluding common roots one at a time from the indicator."""

    initial_coefficient: int
    coefficients: list[int]
    roots: list[tuple[int, ...]]
    final: Polynomial
    leftover_witness: object


def exclusion_driver(sys: PolySystem, budget: int | None = None) -> DriverTrace:
    """Repeatedly find a nonzero point of the (reduced) indicator and exclude it.

    Every exclusion moves the x1^(p-1)...xn^(p-1) coefficient by
    -(-1)^n; once all roots are gone the grid search finds nothing.
    """
    p, n = sys.p, sys.n
    top = (p - 1,) * n
    g = common_root_indicator(sys, reduce="field")
    grid = Grid.full(p, n)
    trace = DriverTrace(g.coefficient_of(top), [], [], g, None)
    while True:
        w = find_witness(g, grid, budget)
        if w is None:
            break
        g = g + exclude_point(g, w.point)
        trace.roots.append(w.point)
        trace.coefficients.append(g.coefficient_of(top))
    trace.final = g
    trace.leftover_witness = find_witness(g, grid, budget)
    return trace
