"""Polynomials attached to graphs: degree-constrained edge subsets,
vertex neighbourhood counts and clique intersections."""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .core import check_budget
from .errors import BudgetExceeded, FormatError, PreconditionError
from .field import check_prime
from .parity import BOOLEAN_BUDGET, ParityReport
from .poly import Polynomial
from .report import Assertion

CLIQUE_VERTEX_LIMIT = 16


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..vertex_count.

    Edges are stored as sorted pairs in lexicographic order; edge number i
    (0-based) is the polynomial variable x_{i+1}.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.vertex_count < 0:
            raise FormatError("vertex count must be nonnegative")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise FormatError(f"self-loop at vertex {u}")
            if not (1 <= u <= self.vertex_count and 1 <= v <= self.vertex_count):
                raise FormatError(f"edge ({u}, {v}) uses a vertex outside 1..{self.vertex_count}")
            e = (min(u, v), max(u, v))
            if e in seen:
                raise FormatError(f"duplicate edge {e}")
            seen.add(e)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        adj = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", {v: frozenset(s) for v, s in adj.items()})

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, tuple(itertools.combinations(range(1, n + 1), 2)))

    @classmethod
    def parse(cls, text: str) -> Graph:
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if not lines or not lines[0].startswith("n="):
            raise FormatError("graph file must start with 'n=<vertex_count>'")
        try:
            n = int(lines[0][2:])
            edges = []
            for ln in lines[1:]:
                u, v = ln.split()
                edges.append((int(u), int(v)))
        except ValueError as exc:
            raise FormatError(f"malformed graph file: {exc}") from exc
        return cls(n, tuple(edges))

    def to_text(self) -> str:
        return f"n={self.vertex_count}\n" + "".join(f"{u} {v}\n" for u, v in self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def incidence(self, v: int, edge_index: int) -> int:
        return 1 if v in self.edges[edge_index] else 0

    def is_clique(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        return all(self.adjacent(a, b) for a, b in itertools.combinations(vs, 2))


def _indicator(p: int, k: int, expr: Polynomial) -> Polynomial:
    return 1 - (expr - k).power(p - 1)


def degree_subset_poly(G: Graph, k: int, p: int, vertices: Sequence[int] | None = None) -> Polynomial:
    """prod_v [1 - (sum_e a_{v,e} x_e - k)^(p-1)] over the edge variables.

    At the indicator of K, a subset of E, the value is 1 iff every vertex
    (or every vertex in ``vertices``) has K-degree = k mod p.
    """
    check_prime(p)
    m = len(G.edges)
    if m < 1:
        raise PreconditionError("the graph has no edges")
    vs = G.vertices if vertices is None else vertices
    result = Polynomial.constant(p, m, 1)
    for v in vs:
        degree = Polynomial.zero(p, m)
        for i in range(m):
            if G.incidence(v, i):
                degree = degree + Polynomial.variable(p, m, i + 1)
        result = result * _indicator(p, k, degree)
    return result


def qualifying_edge_subsets(G: Graph, k: int, p: int, vertices: Sequence[int] | None = None,
                            budget: int | None = None):
    """Edge subsets (as bitmasks over G.edges) where each vertex has degree = k mod p."""
    m = len(G.edges)
    check_budget(2**m, BOOLEAN_BUDGET if budget is None else budget, "edge subsets")
    vs = list(G.vertices if vertices is None else vertices)
    incident = {v: [i for i in range(m) if G.incidence(v, i)] for v in vs}
    k %= p
    for mask in range(2**m):
        if all(sum((mask >> i) & 1 for i in incident[v]) % p == k for v in vs):
            yield mask


@dataclass
class Theorem9Result:
    report: ParityReport
    applies: bool
    bound: tuple[int, int]
    assertions: list[Assertion]


def theorem9_check(G: Graph, k: int, p: int, vertices: Sequence[int] | None = None,
                   budget: int | None = None) -> Theorem9Result:
    """Even and odd qualifying edge subsets agree mod p when |V|(p-1) < |E|."""
    check_prime(p)
    if not G.edges:
        raise PreconditionError("the graph has no edges")
    counts = [0, 0]
    for mask in qualifying_edge_subsets(G, k, p, vertices, budget):
        counts[bin(mask).count("1") & 1] += 1
    report = ParityReport(counts[0], counts[1], p, "qualifying-edge-subsets")
    nv = G.vertex_count if vertices is None else len(vertices)
    bound = (nv * (p - 1), len(G.edges))
    claim = "even qualifying edge subsets = odd ones mod p"
    applies = bound[0] < bound[1]
    status = Assertion.check(claim, report.balanced) if applies else Assertion.skipped(claim)
    return Theorem9Result(report, applies, bound, [status])


def vertex_neighborhood_poly(G: Graph, U: Sequence[int], k: int, p: int) -> Polynomial:
    """prod_{u in U} [1 - (x_u * sum_v e(u,v) x_v - k)^(p-1)] over vertex variables."""
    check_prime(p)
    if not U:
        raise PreconditionError("U must be nonempty")
    n = G.vertex_count
    result = Polynomial.constant(p, n, 1)
    for u in U:
        nbr = Polynomial.zero(p, n)
        for v in sorted(G.neighbors(u)):
            nbr = nbr + Polynomial.variable(p, n, v)
        result = result * _indicator(p, k, Polynomial.variable(p, n, u) * nbr)
    return result


def neighborhood_subsets(G: Graph, U: Sequence[int], k: int, p: int, budget: int | None = None):
    """Vertex subsets S (sorted tuples) with x_u * |N(u) & S| = k mod p for all u in U."""
    check_budget(2**G.vertex_count, BOOLEAN_BUDGET if budget is None else budget, "vertex subsets")
    k %= p
    for S in _all_subsets(G.vertices):
        s = set(S)
        if all(((u in s) * len(G.neighbors(u) & s)) % p == k for u in U):
            yield S


def _all_subsets(vs: Iterable[int]):
    vs = list(vs)
    for r in range(len(vs) + 1):
        yield from itertools.combinations(vs, r)


def _check_clique_budget(G: Graph) -> None:
    if G.vertex_count > CLIQUE_VERTEX_LIMIT:
        raise BudgetExceeded(f"clique enumeration limited to {CLIQUE_VERTEX_LIMIT} vertices")


def cliques(G: Graph, d: int) -> list[tuple[int, ...]]:
    if d < 2:
        raise PreconditionError("clique size must be at least 2")
    _check_clique_budget(G)
    return [c for c in itertools.combinations(G.vertices, d) if G.is_clique(c)]


def clique_count_containing(G: Graph, d: int, I: Iterable[int]) -> int:
    """K(I): number of d-cliques of G that contain every vertex of I."""
    I = frozenset(I)
    return sum(1 for c in cliques(G, d) if I <= set(c))


def cliques_intersecting(G: Graph, d: int, U: Iterable[int]) -> int:
    U = set(U)
    return sum(1 for c in cliques(G, d) if U & set(c))


@dataclass
class CliqueStats:
    d: int
    counts: dict[frozenset[int], int] = field(default_factory=dict)

    def K(self, I: Iterable[int]) -> int:
        return self.counts.get(frozenset(I), 0)


def clique_stats(G: Graph, d: int) -> CliqueStats:
    """K(I) for every nonempty I with K(I) > 0, i.e. every nonempty subset of a d-clique."""
    stats = CliqueStats(d)
    for c in cliques(G, d):
        for r in range(1, d + 1):
            for I in itertools.combinations(c, r):
                key = frozenset(I)
                stats.counts[key] = stats.counts.get(key, 0) + 1
    return stats


def inclusion_exclusion_count(stats: CliqueStats, U: Iterable[int]) -> int:
    """sum over nonempty I in U of (-1)^(|I|+1) K(I)."""
    U = sorted(set(U))
    total = 0
    for r in range(1, min(len(U), stats.d) + 1):
        for I in itertools.combinations(U, r):
            total += (-1) ** (r + 1) * stats.K(I)
    return total


def clique_intersection_poly(G: Graph, d: int, k: int, p: int) -> Polynomial:
    """1 - (sum_I (-1)^(|I|+1) K(I) prod_{i in I} x_i - k)^(p-1).

    At the indicator of U it is 1 iff the number of d-cliques meeting U is
    k mod p. Only subsets I of cliques contribute.
    """
    check_prime(p)
    n = G.vertex_count
    stats = clique_stats(G, d)
    terms = {}
    for I, K in stats.counts.items():
        exps = [0] * n
        for v in I:
            exps[v - 1] = 1
        terms[tuple(exps)] = (-1) ** (len(I) + 1) * K
    J = Polynomial(p, n, terms)
    return _indicator(p, k, J)


@dataclass
class Prop62Result:
    subset: tuple[int, ...] | None
    count: int | None
    assertions: list[Assertion]


def prop62_search(G: Graph, d: int, p: int, budget: int | None = None) -> Prop62Result:
    """Find a nonempty U whose number of intersecting d-cliques is 0 mod p.

    Subsets are scanned by size, then lexicographically. Existence is
    guaranteed when |V| > d(p-1).
    """
    check_prime(p)
    if G.vertex_count <= d * (p - 1):
        raise PreconditionError(f"|V| = {G.vertex_count} is not above d(p-1) = {d * (p - 1)}")
    check_budget(2**G.vertex_count, BOOLEAN_BUDGET if budget is None else budget, "vertex subsets")
    cl = [set(c) for c in cliques(G, d)]
    for U in _all_subsets(G.vertices):
        if not U:
            continue
        count = sum(1 for c in cl if c.intersection(U))
        if count % p == 0:
            return Prop62Result(U, count, [Assertion.check("nonempty U with intersecting cliques = 0 mod p exists", True)])
    return Prop62Result(None, None, [Assertion.check("nonempty U with intersecting cliques = 0 mod p exists", False)])


@dataclass
class SubsetParityResult:
    report: ParityReport
    applies: bool
    assertions: list[Assertion]


def clique_subset_parity(G: Graph, d: int, p: int, k: int = 0, budget: int | None = None) -> SubsetParityResult:
    """Parity of subsets U (including the empty set) with #cliques meeting U = k mod p.

    Balanced mod p whenever |V| > d(p-1), the degree bound that rules out a
    full multilinear term in the clique polynomial.
    """
    check_prime(p)
    check_budget(2**G.vertex_count, BOOLEAN_BUDGET if budget is None else budget, "vertex subsets")
    cl = [set(c) for c in cliques(G, d)]
    counts = [0, 0]
    for U in _all_subsets(G.vertices):
        if sum(1 for c in cl if c.intersection(U)) % p == k % p:
            counts[len(U) & 1] += 1
    report = ParityReport(counts[0], counts[1], p, "qualifying-vertex-subsets")
    applies = G.vertex_count > d * (p - 1)
    claim = "even qualifying vertex subsets = odd ones mod p"
    status = Assertion.check(claim, report.balanced) if applies else Assertion.skipped(claim)
    return SubsetParityResult(report, applies, [status])
