import itertools
import random

import pytest

from cnss.errors import BudgetExceeded, FormatError, PreconditionError
from cnss.graphs import (
    Graph,
    clique_count_containing,
    clique_intersection_poly,
    clique_stats,
    clique_subset_parity,
    cliques,
    cliques_intersecting,
    degree_subset_poly,
    inclusion_exclusion_count,
    neighborhood_subsets,
    prop62_search,
    qualifying_edge_subsets,
    theorem9_check,
    vertex_neighborhood_poly,
)
from cnss.report import FAIL, NOT_APPLICABLE, PASS
from cnss.verify import random_graph

TRIANGLE = Graph(3, [(1, 2), (2, 3), (1, 3)])
K4 = Graph.complete(4)


def indicator(n, members):
    return tuple(int(i + 1 in members) for i in range(n))


class TestGraph:
    def test_file_round_trip(self):
        g = Graph.parse("n=4\n1 2\n3 2\n")
        assert g.edges == ((1, 2), (2, 3))
        assert Graph.parse(g.to_text()) == g

    @pytest.mark.parametrize("text", ["", "4\n1 2", "n=3\n1 1", "n=3\n1 4", "n=3\n1 2\n2 1", "n=3\n1"])
    def test_malformed(self, text):
        with pytest.raises((FormatError, ValueError)):
            Graph.parse(text)

    def test_incidence_columns_sum_to_two(self):
        for i in range(len(K4.edges)):
            assert sum(K4.incidence(v, i) for v in K4.vertices) == 2


class TestDegreeSubsets:
    def test_single_edge(self):
        f = degree_subset_poly(Graph(2, [(1, 2)]), 0, 2)
        assert (f.value_at((0,)), f.value_at((1,))) == (1, 0)

    def test_triangle(self):
        f = degree_subset_poly(TRIANGLE, 0, 2)
        ones = [b for b in itertools.product((0, 1), repeat=3) if f.value_at(b)]
        assert ones == [(0, 0, 0), (1, 1, 1)]

    def test_zero_indicator(self):
        g = random_graph(random.Random(1), 5, 0.6)
        assert degree_subset_poly(g, 0, 3).value_at((0,) * len(g.edges)) == 1

    def test_matches_enumeration(self):
        rnd = random.Random(2)
        for _ in range(15):
            g = random_graph(rnd, rnd.randint(3, 5), 0.5)
            if not g.edges:
                continue
            p, k = rnd.choice((2, 3)), rnd.randint(0, 2)
            f = degree_subset_poly(g, k, p)
            masks = set(qualifying_edge_subsets(g, k, p))
            m = len(g.edges)
            for mask in range(2**m):
                b = tuple(mask >> i & 1 for i in range(m))
                assert f.value_at(b) == int(mask in masks)

    def test_no_edges(self):
        with pytest.raises(PreconditionError):
            degree_subset_poly(Graph(3, []), 0, 2)
        with pytest.raises(PreconditionError):
            theorem9_check(Graph(3, []), 0, 2)


class TestTheorem9:
    def test_k4_cycle_space(self):
        r = theorem9_check(K4, 0, 2)
        assert (r.report.even_count, r.report.odd_count) == (4, 4)
        assert r.bound == (4, 6) and [a.status for a in r.assertions] == [PASS]

    def test_triangle_not_applicable(self):
        r = theorem9_check(TRIANGLE, 0, 2)
        assert (r.report.even_count, r.report.odd_count) == (1, 1)
        assert [a.status for a in r.assertions] == [NOT_APPLICABLE]

    def test_vertex_restriction(self):
        r = theorem9_check(K4, 0, 2, vertices=[1])
        assert r.bound == (1, 6) and r.report.even_count + r.report.odd_count == 32

    def test_random_graphs(self):
        rnd = random.Random(3)
        for _ in range(40):
            g = random_graph(rnd, rnd.randint(3, 7), 0.7)
            if not g.edges or len(g.edges) > 14:
                continue
            r = theorem9_check(g, rnd.randint(0, 2), rnd.choice((2, 3)))
            assert FAIL not in [a.status for a in r.assertions]


class TestNeighborhood:
    def test_path(self):
        g = Graph(2, [(1, 2)])
        f = vertex_neighborhood_poly(g, [1], 1, 2)
        assert [b for b in itertools.product((0, 1), repeat=2) if f.value_at(b)] == [(1, 1)]
        assert list(neighborhood_subsets(g, [1], 1, 2)) == [(1, 2)]

    def test_empty_set_with_k_zero(self):
        f = vertex_neighborhood_poly(K4, [1, 3], 0, 3)
        assert f.value_at((0, 0, 0, 0)) == 1

    def test_edgeless(self):
        g = Graph(3, [])
        f = vertex_neighborhood_poly(g, [1, 2, 3], 0, 2)
        assert all(f.value_at(b) == 1 for b in itertools.product((0, 1), repeat=3))

    def test_empty_u(self):
        with pytest.raises(PreconditionError):
            vertex_neighborhood_poly(K4, [], 0, 2)


class TestCliques:
    def test_counts(self):
        assert clique_count_containing(TRIANGLE, 3, [1]) == 1
        assert clique_count_containing(TRIANGLE, 3, [1, 2, 3]) == 1
        assert clique_count_containing(Graph(3, [(1, 2)]), 3, [1, 3]) == 0
        assert clique_count_containing(K4, 3, []) == 4
        assert cliques(K4, 3) == [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            cliques(Graph(17, []), 3)
        with pytest.raises(PreconditionError):
            cliques(K4, 1)

    def test_stats_are_monotone(self):
        stats = clique_stats(Graph.complete(5), 3)
        for I, K in stats.counts.items():
            for r in range(1, len(I)):
                for J in itertools.combinations(sorted(I), r):
                    assert stats.K(J) >= K
        assert stats.K([1, 2, 3, 4]) == 0

    def test_inclusion_exclusion(self):
        rnd = random.Random(4)
        for _ in range(20):
            g = random_graph(rnd, rnd.randint(4, 8), 0.6)
            for d in (3, 4):
                stats = clique_stats(g, d)
                for r in range(5):
                    for U in itertools.combinations(g.vertices, r):
                        assert inclusion_exclusion_count(stats, U) == cliques_intersecting(g, d, U)

    def test_poly_triangle(self):
        f = clique_intersection_poly(TRIANGLE, 3, 0, 2)
        assert [b for b in itertools.product((0, 1), repeat=3) if f.value_at(b)] == [(0, 0, 0)]

    @pytest.mark.parametrize("k, expected", [(0, 1), (1, 0), (2, 0)])
    def test_poly_edgeless(self, k, expected):
        f = clique_intersection_poly(Graph(3, []), 3, k, 3)
        assert f.is_constant() and f.value_at((0, 0, 0)) == expected

    def test_poly_k4(self):
        assert clique_intersection_poly(K4, 3, 1, 2).value_at(indicator(4, {1})) == 1

    def test_poly_is_indicator(self):
        rnd = random.Random(6)
        for _ in range(10):
            g = random_graph(rnd, rnd.randint(3, 6), 0.6)
            p, k = rnd.choice((2, 3)), rnd.randint(0, 2)
            f = clique_intersection_poly(g, 3, k, p)
            for U in itertools.chain.from_iterable(itertools.combinations(g.vertices, r) for r in range(g.vertex_count + 1)):
                want = int(cliques_intersecting(g, 3, U) % p == k % p)
                assert f.value_at(indicator(g.vertex_count, set(U))) == want


class TestProp62:
    def test_triangle_plus_isolated(self):
        r = prop62_search(Graph(4, [(1, 2), (2, 3), (1, 3)]), 3, 2)
        assert (r.subset, r.count) == ((4,), 0)

    def test_edgeless(self):
        r = prop62_search(Graph(4, []), 3, 2)
        assert r.subset == (1,) and r.count == 0

    def test_k4(self):
        r = prop62_search(K4, 3, 2)
        assert (r.subset, r.count) == ((1, 2), 4)

    def test_precondition(self):
        with pytest.raises(PreconditionError):
            prop62_search(TRIANGLE, 3, 2)

    def test_subset_parity(self):
        rnd = random.Random(8)
        for _ in range(20):
            g = random_graph(rnd, rnd.randint(4, 8), 0.6)
            p = rnd.choice((2, 3))
            r = clique_subset_parity(g, 3, p)
            assert r.applies == (g.vertex_count > 3 * (p - 1))
            if r.applies:
                assert r.report.balanced
