"""Randomized and exhaustive property checks, each against a brute-force oracle.

Every check takes a ``random.Random`` and returns a :class:`CheckResult`;
``run_all`` runs the whole suite in a fixed order.
"""

from __future__ import annotations

import itertools
import random
import time
from collections.abc import Callable
from dataclasses import dataclass, field
from math import comb

from .chevalley import (
    PolySystem,
    count_common_roots,
    exclusion_driver,
    theorem4_classify,
    theorem5_predict,
    warning_check,
)
from .core import Grid, find_witness, generalized_guarantee, supp_maximal
from .exclusion import (
    axis_zero_exclusion,
    exclude_boolean_point,
    exclude_indicator_subset,
    exclude_point,
    inverse_pair_exclusion,
    sum_product_polynomial,
)
from .graphs import (
    Graph,
    clique_stats,
    cliques_intersecting,
    inclusion_exclusion_count,
    prop62_search,
    theorem9_check,
)
from .parity import theorem6_check, theorem7_predict, theorem8_analyze
from .parser import format_poly, parse_poly
from .poly import Polynomial

DEFAULT_SEED = 20240601


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    failures: list[str] = field(default_factory=list)
    notes: dict = field(default_factory=dict)
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = "".join(f", {k}={v}" for k, v in sorted(self.notes.items()))
        return f"[{status}] {self.name}: {self.cases} cases, {len(self.failures)} failures{extra} ({self.seconds:.2f}s)"


# random corpora


def random_polynomial(rng: random.Random, p: int, n: int, max_terms: int = 4, max_exp: int = 3,
                      density: float = 0.6) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = tuple(rng.randint(1, max_exp) if rng.random() < density else 0 for _ in range(n))
        terms[exps] = rng.randrange(1, p)
    return Polynomial(p, n, terms)


def random_of_degree(rng: random.Random, p: int, n: int, degree: int, max_terms: int = 4) -> Polynomial:
    """Random polynomial of total degree exactly ``degree``."""
    while True:
        terms = {}
        for i in range(rng.randint(1, max_terms)):
            total = degree if i == 0 else rng.randint(0, degree)
            exps = [0] * n
            for _ in range(total):
                exps[rng.randrange(n)] += 1
            terms[tuple(exps)] = rng.randrange(1, p)
        f = Polynomial(p, n, terms)
        if f.total_degree() == degree:
            return f


def random_system(rng: random.Random, p: int, n: int, m: int, max_degree: int) -> PolySystem:
    return PolySystem(tuple(random_of_degree(rng, p, n, rng.randint(1, max_degree)) for _ in range(m)))


def random_low_degree_system(rng: random.Random, p: int, n: int) -> PolySystem:
    """System with degree sum strictly below n (n >= 2)."""
    budget = rng.randint(1, n - 1)
    m = rng.randint(1, min(3, budget))
    cuts = sorted(rng.sample(range(1, budget), m - 1)) if m > 1 else []
    degrees = [b - a for a, b in zip([0] + cuts, cuts + [budget])]
    return PolySystem(tuple(random_of_degree(rng, p, n, d) for d in degrees))


def random_graph(rng: random.Random, n: int, edge_prob: float) -> Graph:
    return Graph(n, tuple(e for e in itertools.combinations(range(1, n + 1), 2) if rng.random() < edge_prob))


def _theorem5_corpus(rng: random.Random, size: int = 300) -> list[PolySystem]:
    corpus = []
    for _ in range(size):
        p = rng.choice((2, 3, 5))
        n = rng.randint(1, 3)
        corpus.append(random_system(rng, p, n, rng.randint(1, 3), 3))
    return corpus


def _all_points(p: int, n: int):
    return itertools.product(range(p), repeat=n)


def _timed(fn: Callable[[random.Random], CheckResult]):
    def wrapper(rng: random.Random) -> CheckResult:
        start = time.perf_counter()
        result = fn(rng)
        result.seconds = time.perf_counter() - start
        return result

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


# checks


@_timed
def check_warning(rng: random.Random, size: int = 200) -> CheckResult:
    """Degree sum below n: the common-root count is divisible by p."""
    failures = []
    with_root = 0
    for _ in range(size):
        p = rng.choice((2, 3, 5))
        n = rng.randint(2, 4)
        sys = random_low_degree_system(rng, p, n)
        rep = warning_check(sys)
        if rep.count % p:
            failures.append(f"p={p} n={n} {sys.to_text()!r}: count {rep.count}")
        if rep.count:
            with_root += 1
    return CheckResult("chevalley-warning divisibility", not failures, size, failures,
                       {"systems_with_roots": with_root})


@_timed
def check_theorem5(rng: random.Random, size: int = 300) -> CheckResult:
    """Root count = (-1)^n d mod p for arbitrary systems."""
    failures = []
    nonzero_residue = 0
    for sys in _theorem5_corpus(rng, size):
        count = count_common_roots(sys)
        pred = theorem5_predict(sys)
        if count % sys.p != pred.predicted:
            failures.append(f"{sys.to_text()!r}: count {count}, predicted {pred.predicted}")
        nonzero_residue += count % sys.p != 0
    x1x2 = PolySystem.of(parse_poly("x1*x2", 3, 2))
    pred = theorem5_predict(x1x2)
    count = count_common_roots(x1x2)
    if (pred.certificate, pred.predicted, count) != (2, 2, 5):
        failures.append(f"{{x1*x2}} over F_3: d={pred.certificate} predicted={pred.predicted} count={count}")
    return CheckResult("theorem 5 exactness", not failures, size + 1, failures,
                       {"nonzero_residues": nonzero_residue})


@_timed
def check_theorem4(rng: random.Random, size: int = 300, replicas: int = 10) -> CheckResult:
    """The +1/-1/0 classification against the oracle.

    Uses ``replicas`` independent theorem-5 corpora, so the verdict does not
    hinge on one draw.
    """
    failures = []
    eligible = 0
    for _ in range(replicas):
        for sys in _theorem5_corpus(rng, size):
            if sys.degree_sum > sys.n or any(f.is_zero() for f in sys.polys):
                continue
            eligible += 1
            count = count_common_roots(sys)
            pred = theorem4_classify(sys)
            if count % sys.p != pred.predicted:
                polys = "; ".join(map(str, sys.polys))
                failures.append(f"p={sys.p} n={sys.n} {{{polys}}}: count {count} = {count % sys.p} mod p, "
                                f"classified {pred.predicted} (q={pred.certificate})")
    worked = [(["x1*x2"], 2), (["x1", "x2"], 1), (["x1", "x1"], 0)]
    for polys, expected in worked:
        sys = PolySystem(tuple(parse_poly(s, 3, 2) for s in polys))
        got = theorem4_classify(sys).predicted
        if got != expected or count_common_roots(sys) % 3 != expected:
            failures.append(f"worked instance {polys}: classified {got}, expected {expected}")
    return CheckResult("theorem 4 classification", not failures, eligible + len(worked), failures,
                       {"eligible_random": eligible})


@_timed
def check_exclusions(rng: random.Random, size: int = 200) -> CheckResult:
    """Pointwise contracts of every exclusion constructor."""
    failures = []
    cases = 0
    for _ in range(size):
        p = rng.choice((2, 3, 5, 7))
        n = rng.randint(1, 3)
        f = random_polynomial(rng, p, n, max_exp=2 * p)
        c = tuple(rng.randrange(p) for _ in range(n))
        g = exclude_point(f, c)
        fc = f.value_at(c)
        cases += 1
        for x in _all_points(p, n):
            want = (-fc) % p if x == c else 0
            if g.value_at(x) != want:
                failures.append(f"exclude_point p={p} f={f} c={c} at {x}")
                break
        if (f + g).value_at(c) != 0:
            failures.append(f"exclude_point p={p} f={f} c={c}: (f+g)(c) != 0")
        top = g.coefficient_of((p - 1,) * n)
        if top != (-fc * (-1) ** n) % p:
            failures.append(f"exclude_point p={p} f={f} c={c}: top coefficient {top}")
    for n in range(1, 11):
        p = rng.choice((2, 3, 5, 7))
        b = tuple(rng.randint(0, 1) for _ in range(n))
        h = exclude_boolean_point(b, p).reduce_boolean()
        g = exclude_indicator_subset(b, p).reduce_boolean()
        k = sum(b)
        cases += 1
        for x in itertools.product((0, 1), repeat=n):
            hit = x == b
            if h.value_at(x) != ((p - 1) if hit else 0):
                failures.append(f"exclude_boolean_point b={b} p={p} at {x}")
                break
            if g.value_at(x) != (((-1) ** (n - k)) % p if hit else 0):
                failures.append(f"exclude_indicator_subset b={b} p={p} at {x}")
                break
    for p in (3, 5, 7):
        g = axis_zero_exclusion(p)
        h = inverse_pair_exclusion(p)
        cases += 1
        for a, b in _all_points(p, 2):
            if a and b:
                want_g = 0
            else:
                want_g = a or b
            if g.value_at((a, b)) != want_g:
                failures.append(f"axis_zero_exclusion p={p} at {(a, b)}")
            want_h = a * a % p if (a + b) % p == 0 else 0
            if h.value_at((a, b)) != want_h:
                failures.append(f"inverse_pair_exclusion p={p} at {(a, b)}")
    return CheckResult("exclusion pointwise contracts", not failures, cases, failures)


@_timed
def check_sum_product(rng: random.Random) -> CheckResult:
    """Leading coefficient -C(p-1, k) of x^(p-k+1) y^k and the excluded witness."""
    failures = []
    cases = 0
    for p, ks in ((3, (2,)), (5, (2, 3, 4))):
        f = sum_product_polynomial(p)
        F = f + axis_zero_exclusion(p) + inverse_pair_exclusion(p)
        for x in _all_points(p, 2):
            a, b = x
            excluded = a == 0 or b == 0 or (a + b) % p == 0
            want = 0 if excluded else f.value_at(x)
            if F.value_at(x) != want:
                failures.append(f"p={p}: composite wrong at {x}")
        for k in ks:
            cases += 1
            mono = (p - k + 1, k)
            coeff = F.coefficient_of(mono)
            if coeff != (-comb(p - 1, k)) % p:
                failures.append(f"p={p} k={k}: coefficient {coeff}, expected {(-comb(p - 1, k)) % p}")
            grids = [Grid.full(p, 2)]
            A = rng.sample(range(p), p - k + 2)
            B = rng.sample(range(p), k + 1)
            grids.append(Grid(p, (tuple(A), tuple(B))))
            for grid in grids:
                w = find_witness(F, grid)
                if w is None:
                    failures.append(f"p={p} k={k}: no witness on {grid.sets}")
                    continue
                a, b = w.point
                if not (a and b and (a + b) % p and (a + b - a * b) % p):
                    failures.append(f"p={p} k={k}: witness {w.point} violates the excluded conditions")
    return CheckResult("sum-product composite exclusion", not failures, cases, failures)


@_timed
def check_boolean_parity(rng: random.Random, size: int = 300) -> CheckResult:
    """Theorem 7 identity always; theorem 6 balance whenever its hypothesis holds."""
    failures = []
    t6_applied = 0
    d_nonzero = 0
    field_map_differs = 0
    for _ in range(size):
        p = rng.choice((2, 3, 5))
        n = rng.randint(1, 8)
        f = random_polynomial(rng, p, n, max_terms=4, max_exp=2, density=0.7)
        t7 = theorem7_predict(f)
        if any(a.status == "fail" for a in t7.assertions):
            failures.append(f"theorem 7 p={p} n={n} f={f}: diff {t7.report.difference}, d={t7.prediction.certificate}")
        d_nonzero += t7.prediction.certificate != 0
        field_map_differs += t7.prediction.certificate != t7.field_map_coefficient
        t6 = theorem6_check(f)
        if t6.hypothesis:
            t6_applied += 1
            if any(a.status == "fail" for a in t6.assertions):
                failures.append(f"theorem 6 p={p} n={n} f={f}")
    return CheckResult("boolean parity (theorems 6-7)", not failures, size, failures,
                       {"t6_hypothesis_held": t6_applied, "t7_d_nonzero": d_nonzero,
                        "field_map_coefficient_differs": field_map_differs})


@_timed
def check_theorem8(rng: random.Random) -> CheckResult:
    """Exhaustive: univariate over F_3 and bivariate multilinear over F_2."""
    failures = []
    cases = 0
    families = [(3, 1, [(0,), (1,), (2,)]), (2, 2, [(0, 0), (1, 0), (0, 1), (1, 1)])]
    for p, n, monos in families:
        for coeffs in itertools.product(range(p), repeat=len(monos)):
            if not any(coeffs):
                continue
            f = Polynomial(p, n, dict(zip(monos, coeffs)))
            cases += 1
            res = theorem8_analyze(f)
            if any(a.status == "fail" for a in res.assertions):
                failures.append(f"p={p} f={f}: {res.nonzero_points} nonzero points, top {res.top_coefficient}")
    return CheckResult("theorem 8 classification", not failures, cases, failures)


@_timed
def check_theorem9(rng: random.Random, size: int = 60) -> CheckResult:
    """K4 cycle space, then a random-graph sweep under |V|(p-1) < |E|."""
    failures = []
    k4 = theorem9_check(Graph.complete(4), 0, 2)
    r = k4.report
    if (r.even_count, r.odd_count, k4.assertions[0].status) != (4, 4, "pass"):
        failures.append(f"K4: even {r.even_count} odd {r.odd_count} status {k4.assertions[0].status}")
    applied = 0
    tried = 0
    while applied < size and tried < 50 * size:
        tried += 1
        p = rng.choice((2, 3))
        nv = rng.randint(2, 7)
        G = random_graph(rng, nv, rng.uniform(0.4, 1.0))
        if not G.edges or len(G.edges) > 14 or nv * (p - 1) >= len(G.edges):
            continue
        applied += 1
        k = rng.randrange(p)
        res = theorem9_check(G, k, p)
        if res.assertions[0].status != "pass":
            failures.append(f"p={p} k={k} {G.to_text()!r}: {res.report}")
    return CheckResult("theorem 9 edge-subset parity", not failures, applied + 1, failures)


@_timed
def check_prop62(rng: random.Random, size: int = 40) -> CheckResult:
    """Inclusion-exclusion over clique counts and the nonempty-U search."""
    failures = []
    cases = 0
    for _ in range(size):
        nv = rng.randint(3, 8)
        G = random_graph(rng, nv, rng.uniform(0.3, 0.9))
        for d in (3, 4):
            stats = clique_stats(G, d)
            for r in range(0, min(4, nv) + 1):
                for U in itertools.combinations(G.vertices, r):
                    cases += 1
                    if inclusion_exclusion_count(stats, U) != cliques_intersecting(G, d, U):
                        failures.append(f"d={d} U={U} {G.to_text()!r}")
    tri = Graph(4, ((1, 2), (1, 3), (2, 3)))
    res = prop62_search(tri, 3, 2)
    if (res.subset, res.count) != ((4,), 0):
        failures.append(f"triangle plus isolated vertex: U={res.subset} count={res.count}")
    res = prop62_search(Graph.complete(4), 3, 2)
    if res.subset is None or len(res.subset) != 2 or res.count != 4 or cliques_intersecting(Graph.complete(4), 3, res.subset) != 4:
        failures.append(f"K4: U={res.subset} count={res.count}")
    return CheckResult("prop 6.2 cliques", not failures, cases + 2, failures)


@_timed
def check_infrastructure(rng: random.Random, size: int = 500) -> CheckResult:
    """Parse/format round trip and evaluation-preserving reductions."""
    failures = []
    for _ in range(size):
        p = rng.choice((2, 3, 5, 7))
        n = rng.randint(1, 3)
        f = random_polynomial(rng, p, n, max_terms=8, max_exp=2 * p)
        if parse_poly(format_poly(f), p, n) != f:
            failures.append(f"round trip p={p} n={n}: {f}")
        g = f.reduce_field_map()
        if any(e > p - 1 for exps in g.terms for e in exps):
            failures.append(f"field reduction exponent too large: {g}")
        if any(f.value_at(x) != g.value_at(x) for x in _all_points(p, n)):
            failures.append(f"field reduction changed values: {f} -> {g}")
        h = f.reduce_boolean()
        if any(e > 1 for exps in h.terms for e in exps):
            failures.append(f"boolean reduction not multilinear: {h}")
        if any(f.value_at(x) != h.value_at(x) for x in itertools.product((0, 1), repeat=n)):
            failures.append(f"boolean reduction changed values: {f} -> {h}")
    return CheckResult("parse/format and reductions", not failures, size, failures)


@_timed
def check_witness_guarantee(rng: random.Random, size: int = 500) -> CheckResult:
    """Grids large enough for a maximal support vector always yield a witness."""
    failures = []
    for _ in range(size):
        p = rng.choice((2, 3, 5, 7))
        n = rng.randint(1, 3)
        # exponents below p so that every maximal vector fits inside F_p
        f = random_polynomial(rng, p, n, max_terms=5, max_exp=p - 1)
        a = rng.choice(sorted(supp_maximal(f)))
        grid = Grid(p, tuple(tuple(rng.sample(range(p), rng.randint(ai + 1, p))) for ai in a))
        if generalized_guarantee(f, grid) is None:
            failures.append(f"guarantee not detected: {f} on {grid.sets}")
        elif find_witness(f, grid) is None:
            failures.append(f"no witness: {f} on {grid.sets}")
    return CheckResult("generalized nullstellensatz witness", not failures, size, failures)


@_timed
def check_exclusion_driver(rng: random.Random, size: int = 60) -> CheckResult:
    """Excluding every common root one at a time empties the indicator."""
    failures = []
    for _ in range(size):
        p = rng.choice((2, 3, 5))
        n = rng.randint(1, 3)
        sys = random_system(rng, p, n, rng.randint(1, 2), 2)
        trace = exclusion_driver(sys)
        step = -((-1) ** n)
        expected = [(trace.initial_coefficient + step * (i + 1)) % p for i in range(len(trace.roots))]
        if trace.coefficients != expected or trace.leftover_witness is not None or not trace.final.is_zero():
            failures.append(f"{sys.to_text()!r}: {trace.coefficients} vs {expected}")
        if len(trace.roots) != count_common_roots(sys):
            failures.append(f"{sys.to_text()!r}: excluded {len(trace.roots)} roots")
    return CheckResult("repeated exclusion driver", not failures, size, failures)


CHECKS: list[Callable[[random.Random], CheckResult]] = [
    check_warning,
    check_theorem5,
    check_theorem4,
    check_exclusions,
    check_sum_product,
    check_boolean_parity,
    check_theorem8,
    check_theorem9,
    check_prop62,
    check_infrastructure,
    check_witness_guarantee,
    check_exclusion_driver,
]


def run_all(seed: int = DEFAULT_SEED) -> list[CheckResult]:
    """Run every check, each from its own generator seeded by ``seed``."""
    return [check(random.Random(f"{seed}:{check.__name__}")) for check in CHECKS]
