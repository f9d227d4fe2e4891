"""Parity of Boolean supports and single-nonzero-value classification."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .chevalley import PolySystem, ResiduePrediction, common_root_indicator
from .core import check_budget
from .errors import ArityError, PreconditionError
from .poly import Polynomial
from .report import Assertion

BOOLEAN_BUDGET = 1 << 24
NONZERO_SET = "nonzero-set"
ZERO_SET = "zero-set"


@dataclass(frozen=True)
class ParityReport:
    even_count: int
    odd_count: int
    modulus: int
    set_kind: str

    @property
    def difference(self) -> int:
        return self.even_count - self.odd_count

    @property
    def balanced(self) -> bool:
        return self.difference % self.modulus == 0


def boolean_points(n: int, budget: int | None = None):
    check_budget(2**n, BOOLEAN_BUDGET if budget is None else budget, "Boolean points")
    return itertools.product((0, 1), repeat=n)


def boolean_support_counts(f: Polynomial, kind: str = NONZERO_SET, budget: int | None = None) -> ParityReport:
    if kind not in (NONZERO_SET, ZERO_SET):
        raise ValueError(f"unknown set kind {kind!r}")
    want_nonzero = kind == NONZERO_SET
    counts = [0, 0]
    for b in boolean_points(f.arity, budget):
        if (f.value_at(b) != 0) == want_nonzero:
            counts[sum(b) & 1] += 1
    return ParityReport(counts[0], counts[1], f.p, kind)


def has_full_support_term(f: Polynomial) -> bool:
    """Whether some monomial of ``f`` involves every variable."""
    return any(all(e) for e in f.terms)


@dataclass
class Theorem6Result:
    hypothesis: bool
    reduced_hypothesis: bool
    nonzero: ParityReport
    zero: ParityReport
    assertions: list[Assertion] = field(default_factory=list)


def theorem6_check(f: Polynomial, budget: int | None = None) -> Theorem6Result:
    """If no monomial of f^(p-1) contains every variable, the nonzero set and
    the zero set of f on {0,1}^n are each parity-balanced mod p."""
    g = f.power(f.p - 1)
    hypothesis = not has_full_support_term(g)
    reduced_hypothesis = not has_full_support_term(g.reduce_boolean())
    nonzero = boolean_support_counts(f, NONZERO_SET, budget)
    zero = boolean_support_counts(f, ZERO_SET, budget)
    claims = ("nonzero set: even count = odd count mod p", "zero set: even count = odd count mod p")
    if hypothesis:
        assertions = [Assertion.check(claims[0], nonzero.balanced), Assertion.check(claims[1], zero.balanced)]
    else:
        assertions = [Assertion.skipped(c) for c in claims]
    return Theorem6Result(hypothesis, reduced_hypothesis, nonzero, zero, assertions)


@dataclass
class Theorem7Result:
    prediction: ResiduePrediction
    report: ParityReport
    field_map_coefficient: int
    assertions: list[Assertion]


def theorem7_predict(f: Polynomial, budget: int | None = None) -> Theorem7Result:
    """|S_even| - |S_odd| = (-1)^n d mod p over the nonzero set of f in {0,1}^n,
    with d the x1...xn coefficient of the multilinear form of f^(p-1)."""
    p, n = f.p, f.arity
    g = f.power(p - 1, reduce="boolean")
    d = g.coefficient_of((1,) * n)
    predicted = (d if n % 2 == 0 else -d) % p
    # the same coefficient after the mod-(p-1) exponent reduction, for comparison
    field_d = f.power(p - 1, reduce="field").coefficient_of((1,) * n)
    report = boolean_support_counts(f, NONZERO_SET, budget)
    ok = report.difference % p == predicted
    return Theorem7Result(
        ResiduePrediction(predicted, d, "T7"),
        report,
        field_d,
        [Assertion.check("even minus odd nonzero points = (-1)^n d mod p", ok)],
    )


@dataclass
class CorollaryResult:
    hypothesis: bool
    report: ParityReport | None
    assertions: list[Assertion]
    degree_bound: tuple[int, int] | None = None


def corollary_shared_roots_parity(sys: PolySystem, budget: int | None = None) -> CorollaryResult:
    """Shared Boolean roots are parity-balanced mod p when prod(1 - f_i^(p-1))
    has no monomial involving every variable."""
    g = common_root_indicator(sys)
    hypothesis = not has_full_support_term(g)
    report = boolean_support_counts(g, NONZERO_SET, budget)
    claim = "shared Boolean roots: even count = odd count mod p"
    status = Assertion.check(claim, report.balanced) if hypothesis else Assertion.skipped(claim)
    return CorollaryResult(hypothesis, report, [status])


def corollary_subset_parity(sys: PolySystem, set_size: int, budget: int | None = None) -> CorollaryResult:
    """Subsets of an |A|-set whose indicator is a shared root are
    parity-balanced mod p when (p-1) * sum deg f_i < |A|."""
    if sys.n != set_size:
        raise ArityError(f"system arity {sys.n} differs from |A| = {set_size}")
    bound = (sys.p - 1) * sys.degree_sum
    claim = "satisfying subsets: even count = odd count mod p"
    if bound >= set_size:
        return CorollaryResult(False, None, [Assertion.skipped(claim)], (bound, set_size))
    inner = corollary_shared_roots_parity(sys, budget)
    return CorollaryResult(True, inner.report, [Assertion.check(claim, inner.report.balanced)], (bound, set_size))


@dataclass
class Theorem8Result:
    nonzero_points: int
    has_top_term: bool
    top_coefficient: int
    single_point: tuple[int, ...] | None
    single_value: int | None
    assertions: list[Assertion]


def theorem8_analyze(f: Polynomial, budget: int | None = None) -> Theorem8Result:
    """Relate the number of nonzero values of f to the x1^(p-1)...xn^(p-1)
    coefficient of its reduced form."""
    if f.is_zero():
        raise PreconditionError("the zero polynomial has no nonzero values")
    p, n = f.p, f.arity
    check_budget(p**n, budget)
    top = (p - 1,) * n
    c = f.reduce_field_map().coefficient_of(top)
    nonzero = []
    for x in itertools.product(range(p), repeat=n):
        v = f.value_at(x)
        if v:
            nonzero.append((x, v))
    single_point = single_value = None
    if len(nonzero) == 1:
        single_point, single_value = nonzero[0]
    claim_a = "no top term => at least two nonzero values"
    claim_b = "single nonzero value d => top coefficient = d(-1)^n"
    a = Assertion.skipped(claim_a) if c else Assertion.check(claim_a, len(nonzero) >= 2)
    if single_value is None:
        b = Assertion.skipped(claim_b)
    else:
        expected = (single_value if n % 2 == 0 else -single_value) % p
        b = Assertion.check(claim_b, c == expected)
    return Theorem8Result(len(nonzero), bool(c), c, single_point, single_value, [a, b])
