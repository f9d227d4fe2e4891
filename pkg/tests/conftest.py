import itertools
import sys

from hypothesis import settings
from hypothesis import strategies as st

from cnss import Polynomial

settings.register_profile("default", deadline=None)
settings.load_profile("default")

PRIMES = (2, 3, 5, 7)


@st.composite
def polynomials(draw, primes=PRIMES, max_n=3, max_terms=8, exp_factor=2, p=None, n=None):
    p = draw(st.sampled_from(primes)) if p is None else p
    n = draw(st.integers(1, max_n)) if n is None else n
    exps = st.tuples(*[st.integers(0, exp_factor * p)] * n)
    terms = draw(st.lists(st.tuples(exps, st.integers(0, p - 1)), max_size=max_terms))
    return Polynomial(p, n, terms)


@st.composite
def polynomial_pairs(draw, **kw):
    f = draw(polynomials(**kw))
    g = draw(polynomials(p=f.p, n=f.arity, max_terms=kw.get("max_terms", 8)))
    return f, g


def brute_eval(terms, p, point):
    """Evaluate a {exponents: coefficient} mapping with plain integer powers."""
    total = 0
    for exps, c in terms.items():
        t = c
        for x, e in zip(point, exps):
            t *= x**e
        total += t
    return total % p


def dense_multiply(f_terms, g_terms, p):
    """Schoolbook product on dense coefficient grids, independent of Polynomial.multiply."""
    if not f_terms or not g_terms:
        return {}
    n = len(next(iter(f_terms)))
    shape = [max(e[i] for e in f_terms) + max(e[i] for e in g_terms) + 1 for i in range(n)]
    grid = {idx: 0 for idx in itertools.product(*[range(s) for s in shape])}
    for a, ca in f_terms.items():
        for b, cb in g_terms.items():
            grid[tuple(x + y for x, y in zip(a, b))] += ca * cb
    return {e: c % p for e, c in grid.items() if c % p}


def all_points(p, n):
    return itertools.product(range(p), repeat=n)


def boolean_points(n):
    return itertools.product((0, 1), repeat=n)


def pytest_terminal_summary(terminalreporter):
    lines = getattr(sys.modules.get("test_acceptance"), "LINES", None)
    if lines:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
