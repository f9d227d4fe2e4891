import random

import pytest
from conftest import all_points, boolean_points, brute_eval, dense_multiply, polynomial_pairs, polynomials
from hypothesis import given, settings
from hypothesis import strategies as st

from cnss import NEG_INFINITY, Polynomial, format_poly, parse_poly
from cnss.errors import ArityError, FieldMismatchError, NotPrimeError, PolyParseError
from cnss.poly import poly_arith


def P(text, p, n):
    return parse_poly(text, p, n)


class TestParse:
    def test_normalizes_coefficients(self):
        f = P("x1*x2 - x1 - x2", 5, 2)
        assert dict(f.terms) == {(1, 1): 1, (1, 0): 4, (0, 1): 4}

    def test_coefficients_collapse(self):
        assert P("x1^3 + 2*x1^3", 3, 1).is_zero()

    def test_variable_out_of_range(self):
        with pytest.raises(PolyParseError, match="out of range"):
            P("x3 + 1", 5, 2)

    def test_non_prime(self):
        with pytest.raises(NotPrimeError):
            P("x1", 6, 1)

    @pytest.mark.parametrize(
        "text, position",
        [("2x1", 1), ("x1 x2", 3), ("x1^", 3), ("x1^x2", 3), ("(x1 + 1", 7), ("x1 + $", 5), ("x1^2^2", 4), ("", 0)],
    )
    def test_syntax_errors_carry_positions(self, text, position):
        with pytest.raises(PolyParseError) as info:
            P(text, 5, 2)
        assert info.value.position == position

    def test_precedence(self):
        # ^ binds tighter than unary minus, * tighter than +
        assert P("-x1^2", 7, 1) == P("6*x1^2", 7, 1)
        assert P("2 + 3*x1^2", 7, 1).coefficient_of((2,)) == 3
        assert P("(x1 + 1)^2", 7, 1) == P("x1^2 + 2*x1 + 1", 7, 1)
        assert P("- - x1", 5, 1) == P("x1", 5, 1)

    def test_format_is_graded_lex(self):
        f = P("1 + x2 + x1 + x2^2 + x1*x2 + x1^2", 5, 2)
        assert format_poly(f) == "x1^2 + x1*x2 + x2^2 + x1 + x2 + 1"
        assert format_poly(Polynomial.zero(3, 2)) == "0"
        assert format_poly(P("-1", 3, 0)) == "2"

    @settings(max_examples=300)
    @given(polynomials())
    def test_round_trip(self, f):
        assert parse_poly(format_poly(f), f.p, f.arity) == f


class TestArithmetic:
    def test_characteristic_two_square(self):
        f = P("x1 + x2", 2, 2)
        assert f * f == P("x1^2 + x2^2", 2, 2)

    def test_zero_is_identity(self):
        f = P("x1*x2 + 3", 5, 2)
        assert f + Polynomial.zero(5, 2) == f

    def test_square_mod_three(self):
        f = P("1 - x1*x2", 3, 2)
        expected = dense_multiply(dict(f.terms), dict(f.terms), 3)
        assert expected == {(0, 0): 1, (1, 1): 1, (2, 2): 1}
        assert dict((f**2).terms) == expected

    def test_named_operations(self):
        f, g = P("x1 + 1", 5, 1), P("x1", 5, 1)
        assert poly_arith(f, g, "add") == P("2*x1 + 1", 5, 1)
        assert poly_arith(f, g, "sub") == P("1", 5, 1)
        assert poly_arith(f, g, "mul") == P("x1^2 + x1", 5, 1)
        assert poly_arith(f, 2, "pow") == P("x1^2 + 2*x1 + 1", 5, 1)
        assert poly_arith(f, 3, "scale") == P("3*x1 + 3", 5, 1)
        assert poly_arith(f, 5, "scale").is_zero()

    def test_mismatches(self):
        with pytest.raises(FieldMismatchError):
            P("x1", 3, 1) + P("x1", 5, 1)
        with pytest.raises(ArityError):
            P("x1", 3, 1) * P("x1", 3, 2)

    @given(polynomial_pairs(max_terms=5))
    def test_product_matches_dense_oracle(self, fg):
        f, g = fg
        assert dict((f * g).terms) == dense_multiply(dict(f.terms), dict(g.terms), f.p)

    @given(polynomial_pairs(max_terms=5), st.randoms(use_true_random=False))
    def test_evaluation_is_a_ring_homomorphism(self, fg, rnd):
        f, g = fg
        for _ in range(5):
            x = [rnd.randrange(f.p) for _ in range(f.arity)]
            assert (f + g).value_at(x) == (f.value_at(x) + g.value_at(x)) % f.p
            assert (f * g).value_at(x) == f.value_at(x) * g.value_at(x) % f.p
            assert (f - g).value_at(x) == (f.value_at(x) - g.value_at(x)) % f.p

    def test_no_zero_coefficients_stored(self):
        f = P("x1 + x2", 3, 2) + P("2*x1", 3, 2)
        assert dict(f.terms) == {(0, 1): 1}

    def test_equality_and_hash(self):
        a = P("x1*x2 + 1", 5, 2)
        b = Polynomial(5, 2, {(0, 0): 6, (1, 1): 1})
        assert a == b and hash(a) == hash(b)
        assert a != P("x1*x2 + 1", 7, 2)


class TestEvaluation:
    def test_examples(self):
        assert P("x1*x2 - x1 - x2", 5, 2)(2, 3) == 1
        assert P("1 - (x1 + x2)^2", 3, 2)((1, 2)) == 1

    def test_all_zeros_gives_constant_term(self):
        f = P("x1^2*x2 + 3*x2 + 4", 5, 2)
        assert f.value_at((0, 0)) == 4

    def test_length_mismatch(self):
        with pytest.raises(ArityError):
            P("x1", 5, 2).value_at((1,))

    @given(polynomials(max_terms=6))
    def test_matches_integer_oracle(self, f):
        for x in list(all_points(f.p, f.arity))[:30]:
            assert f.value_at(x) == brute_eval(f.terms, f.p, x)


class TestQueries:
    def test_coefficient_and_degree(self):
        f = P("x1*x2 - x1 - x2", 5, 2)
        assert f.coefficient_of((1, 1)) == 1
        assert f.coefficient_of((2, 0)) == 0
        assert f.total_degree() == 2

    def test_zero_degree_is_neg_infinity(self):
        assert Polynomial.zero(5, 3).total_degree() == NEG_INFINITY
        assert Polynomial.zero(5, 3).total_degree() < 0

    def test_coefficient_over_f3(self):
        assert P("2*x1^2*x2^2", 3, 2).coefficient_of((2, 2)) == 2

    def test_length_mismatch(self):
        with pytest.raises(ArityError):
            P("x1", 5, 2).coefficient_of((1,))

    def test_leading_term_is_graded_lex(self):
        assert P("x2^3 + x1^2*x2 + x1", 5, 2).leading_term() == ((2, 1), 1)
        assert Polynomial.zero(5, 2).leading_term() is None


class TestReductions:
    @pytest.mark.parametrize("text, expected", [("x1^5", "x1"), ("x1^4", "x1^2"), ("x1^3 + 2*x1", "0")])
    def test_field_map_examples(self, text, expected):
        f = P(text, 3, 1)
        g = f.reduce_field_map()
        assert g == P(expected, 3, 1)
        assert all(f.value_at(x) == g.value_at(x) for x in all_points(3, 1))

    def test_boolean_examples(self):
        assert P("x1^3*x2^2", 5, 2).reduce_boolean() == P("x1*x2", 5, 2)
        assert P("x1^2 + 2*x1", 3, 1).reduce_boolean().is_zero()
        c = P("4", 5, 3)
        assert c.reduce_boolean() == c

    @settings(max_examples=200)
    @given(polynomials())
    def test_field_map_preserves_values(self, f):
        g = f.reduce_field_map()
        assert all(e <= f.p - 1 for exps in g.terms for e in exps)
        assert all(f.value_at(x) == g.value_at(x) for x in all_points(f.p, f.arity))

    @settings(max_examples=200)
    @given(polynomials())
    def test_boolean_preserves_values(self, f):
        g = f.reduce_boolean()
        assert all(e <= 1 for exps in g.terms for e in exps)
        assert all(f.value_at(x) == g.value_at(x) for x in boolean_points(f.arity))

    @given(polynomial_pairs(max_terms=5), st.sampled_from(["field", "boolean"]))
    def test_reducing_while_multiplying(self, fg, mode):
        f, g = fg
        assert f.multiply(g, mode) == (f * g).reduced(mode)

    def test_reduced_power(self):
        rnd = random.Random(3)
        for _ in range(30):
            p = rnd.choice((2, 3, 5))
            f = Polynomial(p, 2, {(rnd.randint(0, 3), rnd.randint(0, 3)): rnd.randrange(1, p) for _ in range(3)})
            k = rnd.randint(0, 6)
            assert f.power(k, "field") == f.power(k).reduce_field_map()
