"""Supports, Nullstellensatz hypotheses and exhaustive witness search."""

from __future__ import annotations

import itertools
import math
from collections.abc import Sequence
from dataclasses import dataclass

from .errors import ArityError, BudgetExceeded, FieldMismatchError, FormatError
from .field import check_prime
from .poly import Exponents, Polynomial, dominates

DEFAULT_BUDGET = 10**7


def check_budget(points: int, budget: int | None, what: str = "points") -> None:
    limit = DEFAULT_BUDGET if budget is None else budget
    if points > limit:
        raise BudgetExceeded(f"enumeration of {points} {what} exceeds budget {limit}")


def supp(f: Polynomial) -> frozenset[Exponents]:
    return frozenset(f.terms)


def supp_maximal(f: Polynomial) -> frozenset[Exponents]:
    """Maximal elements of the support under the componentwise order."""
    support = sorted(f.terms, key=sum, reverse=True)
    maximal: list[Exponents] = []
    for e in support:
        # a vector can only be dominated by one of at least its total degree
        if not any(dominates(m, e) for m in maximal):
            maximal.append(e)
    return frozenset(maximal)


def classic_hypothesis(f: Polynomial, t: Sequence[int]) -> bool:
    t = tuple(t)
    if len(t) != f.arity:
        raise ArityError(f"degree profile of length {len(t)} for arity {f.arity}")
    return f.total_degree() == sum(t) and f.coefficient_of(t) != 0


@dataclass(frozen=True)
class Grid:
    """Per-variable value sets, stored sorted by residue."""

    p: int
    sets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        check_prime(self.p)
        norm = []
        for i, s in enumerate(self.sets, start=1):
            vals = [int(v) for v in s]
            if not vals:
                raise FormatError(f"grid set for x{i} is empty")
            if any(not 0 <= v < self.p for v in vals):
                raise FormatError(f"grid set for x{i} has values outside [0, {self.p})")
            if len(set(vals)) != len(vals):
                raise FormatError(f"grid set for x{i} has repeated values")
            norm.append(tuple(sorted(vals)))
        object.__setattr__(self, "sets", tuple(norm))

    @classmethod
    def full(cls, p: int, n: int) -> Grid:
        return cls(p, tuple(tuple(range(p)) for _ in range(n)))

    @classmethod
    def parse(cls, text: str, p: int) -> Grid:
        """Parse one set per line (or per ``;``), each a comma-separated residue list."""
        rows = [r.strip() for r in text.replace(";", "\n").splitlines()]
        sets = []
        for row in rows:
            if not row or row.startswith("#"):
                continue
            try:
                sets.append(tuple(int(v) for v in row.split(",")))
            except ValueError as exc:
                raise FormatError(f"bad grid row {row!r}") from exc
        return cls(p, tuple(sets))

    @property
    def arity(self) -> int:
        return len(self.sets)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.sets)

    def __len__(self) -> int:
        return math.prod(self.sizes)

    def points(self):
        return itertools.product(*self.sets)

    def to_text(self) -> str:
        return "\n".join(",".join(map(str, s)) for s in self.sets)


@dataclass(frozen=True)
class Witness:
    point: tuple[int, ...]
    value: int


def generalized_guarantee(f: Polynomial, grid: Grid) -> Exponents | None:
    """A maximal support vector a with |S_i| >= a_i + 1 for all i, if any.

    When one exists, a nonzero value of ``f`` on the grid is guaranteed.
    """
    sizes = grid.sizes
    for a in sorted(supp_maximal(f), key=lambda e: (sum(e), e)):
        if all(s >= ai + 1 for s, ai in zip(sizes, a)):
            return a
    return None


def find_witness(f: Polynomial, grid: Grid, budget: int | None = None) -> Witness | None:
    """First grid point (lexicographic, x1 outermost) where ``f`` is nonzero."""
    if grid.arity != f.arity:
        raise ArityError(f"grid of arity {grid.arity} for polynomial of arity {f.arity}")
    if grid.p != f.p:
        raise FieldMismatchError(f"grid over F_{grid.p} for polynomial over F_{f.p}")
    if f.is_zero():
        return None
    check_budget(len(grid), budget)
    for point in grid.points():
        v = f.value_at(point)
        if v:
            return Witness(tuple(point), v)
    return None
