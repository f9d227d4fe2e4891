import itertools
import random

import pytest

from cnss import Polynomial, parse_poly
from cnss.chevalley import (
    PolySystem,
    ResiduePrediction,
    common_root_indicator,
    count_common_roots,
    exclusion_driver,
    theorem4_classify,
    theorem5_predict,
    warning_check,
)
from cnss.errors import ArityError, BudgetExceeded, FieldMismatchError, FormatError, PreconditionError
from cnss.verify import random_system


def S(p, n, *texts):
    return PolySystem(tuple(parse_poly(t, p, n) for t in texts))


def brute_count(sys):
    return sum(
        all(f.value_at(x) == 0 for f in sys.polys) for x in itertools.product(range(sys.p), repeat=sys.n)
    )


class TestIndicator:
    def test_char_two(self):
        f = common_root_indicator(S(2, 2, "x1 + x2"))
        assert f == parse_poly("1 + x1 + x2", 2, 2)
        assert [f.value_at(x) for x in itertools.product(range(2), repeat=2)] == [1, 0, 0, 1]

    def test_constant_one_has_no_roots(self):
        f = common_root_indicator(S(3, 2, "1"))
        assert all(f.value_at(x) == 0 for x in itertools.product(range(3), repeat=2))

    def test_zero_polynomial(self):
        assert common_root_indicator(S(5, 2, "0")) == Polynomial.constant(5, 2, 1)

    def test_reduced_product_has_same_values(self):
        rnd = random.Random(11)
        for _ in range(40):
            sys = random_system(rnd, rnd.choice((2, 3, 5)), rnd.randint(1, 3), rnd.randint(1, 3), 3)
            f = common_root_indicator(sys)
            g = common_root_indicator(sys, reduce="field")
            assert g == f.reduce_field_map()
            for x in itertools.product(range(sys.p), repeat=sys.n):
                want = int(all(h.value_at(x) == 0 for h in sys.polys))
                assert g.value_at(x) == want


class TestCount:
    @pytest.mark.parametrize(
        "sys, expected",
        [(S(2, 2, "x1 + x2"), 2), (S(3, 2, "x1*x2"), 5), (S(3, 2, "1"), 0), (S(5, 3, "x1 + x2 + x3", "x1"), 5)],
    )
    def test_examples(self, sys, expected):
        assert count_common_roots(sys) == expected

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            count_common_roots(S(5, 3, "x1"), budget=100)


class TestWarning:
    def test_second_root(self):
        r = warning_check(S(2, 2, "x1 + x2"), known_root=(0, 0))
        assert (r.count, r.residue, r.second_root) == (2, 0, (1, 1))
        assert all(a.status == "pass" for a in r.assertions)

    def test_counts(self):
        assert warning_check(S(3, 2, "x1")).count == 3
        assert warning_check(S(5, 3, "x1 + x2 + x3", "x1")).residue == 0

    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            warning_check(S(3, 2, "x1*x2"))
        with pytest.raises(PreconditionError):
            warning_check(S(3, 2, "x1"), known_root=(1, 0))
        with pytest.raises(ArityError):
            warning_check(S(3, 2, "x1"), known_root=(0,))

    def test_random_low_degree_systems(self):
        rnd = random.Random(5)
        for _ in range(100):
            p, n = rnd.choice((2, 3, 5)), rnd.randint(2, 4)
            sys = random_system(rnd, p, n, rnd.randint(1, 2), 1)
            if sys.degree_sum >= n:
                continue
            assert brute_count(sys) % p == 0


class TestTheorem4:
    @pytest.mark.parametrize(
        "texts, expected, q", [(["x1*x2"], 2, 1), (["x1", "x2"], 1, 1), (["x1", "x1"], 0, 0)]
    )
    def test_worked_instances(self, texts, expected, q):
        sys = S(3, 2, *texts)
        pred = theorem4_classify(sys)
        assert (pred.predicted, pred.certificate, pred.rule) == (expected, q, "T4")
        assert brute_count(sys) % 3 == expected

    def test_degree_bound(self):
        with pytest.raises(PreconditionError):
            theorem4_classify(S(3, 2, "x1^2*x2"))

    def test_zero_members_are_dropped(self):
        assert theorem4_classify(S(3, 2, "x1", "0", "x2")).predicted == 1

    def test_square_sum_counterexample(self):
        # x1^2 + x2^2 over F_3: degree sum 2 = n, the product has no x1*x2
        # term, so the +1/-1/0 rule says 0. The only root is (0, 0).
        sys = S(3, 2, "x1^2 + x2^2")
        assert theorem4_classify(sys).predicted == 0
        assert brute_count(sys) == 1
        assert theorem5_predict(sys).predicted == 1


class TestTheorem5:
    def test_xy_over_f3(self):
        pred = theorem5_predict(S(3, 2, "x1*x2"))
        assert (pred.certificate, pred.predicted, pred.rule) == (2, 2, "T5")

    def test_char_two(self):
        pred = theorem5_predict(S(2, 2, "x1*x2 + x1 + x2"))
        assert (pred.certificate, pred.predicted) == (1, 1)

    def test_constant_one(self):
        assert theorem5_predict(S(5, 2, "1")).predicted == 0

    def test_random_systems_unrestricted_degree(self):
        rnd = random.Random(7)
        for _ in range(150):
            p = rnd.choice((2, 3, 5))
            sys = random_system(rnd, p, rnd.randint(1, 3), rnd.randint(1, 3), 3)
            assert brute_count(sys) % p == theorem5_predict(sys).predicted

    def test_rule_tags(self):
        with pytest.raises(ValueError):
            ResiduePrediction(0, 0, "T9")


class TestDriver:
    @pytest.mark.parametrize("sys", [S(3, 2, "x1*x2"), S(2, 3, "x1 + x2*x3"), S(5, 2, "x1^2 - x2")])
    def test_excluding_every_root(self, sys):
        trace = exclusion_driver(sys)
        p, n = sys.p, sys.n
        assert sorted(trace.roots) == sorted(
            x for x in itertools.product(range(p), repeat=n) if all(f.value_at(x) == 0 for f in sys.polys)
        )
        step = -((-1) ** n)
        expected = trace.initial_coefficient
        for c in trace.coefficients:
            expected = (expected + step) % p
            assert c == expected
        assert trace.leftover_witness is None
        assert trace.final.is_zero()


class TestSystemFile:
    def test_round_trip(self):
        text = "# two members\np=3 n=2\nx1*x2\nx1 + 2   # trailing comment\n"
        sys = PolySystem.parse(text)
        assert (sys.p, sys.n, sys.m, sys.degree_sum) == (3, 2, 2, 3)
        assert PolySystem.parse(sys.to_text()) == sys

    @pytest.mark.parametrize("text", ["", "p=3\nx1", "p=3 n=2", "p=3 n=x\nx1", "p 3 n 2\nx1", "p=4 n=1\nx1"])
    def test_malformed(self, text):
        with pytest.raises((FormatError, ValueError)):
            PolySystem.parse(text)

    def test_mixed_members(self):
        with pytest.raises(FieldMismatchError):
            PolySystem.of(parse_poly("x1", 3, 1), parse_poly("x1", 5, 1))
        with pytest.raises(ArityError):
            PolySystem.of(parse_poly("x1", 3, 1), parse_poly("x1", 3, 2))
