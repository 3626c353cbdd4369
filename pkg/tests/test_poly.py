"""MultiPoly arithmetic, canonical form, evaluation, and the JSON format."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pqtouchard import MultiPoly, VAR_ORDER


def v(name):
    return MultiPoly.var(name)


class TestCanonicalForm:
    def test_zero_has_empty_term_map(self):
        zero = MultiPoly.const(0)
        assert zero.terms == {}
        assert zero.variables == ()
        assert zero.is_zero
        assert not zero

    def test_zero_coefficients_are_dropped(self):
        poly = MultiPoly(("x",), {(1,): 2, (2,): 0})
        assert poly == 2 * v("x")

    def test_unused_variables_are_dropped(self):
        poly = MultiPoly(("x", "q"), {(0, 1): 5})
        assert poly.variables == ("q",)
        assert poly == 5 * v("q")

    def test_variables_sorted_into_global_order(self):
        poly = MultiPoly(("v", "x"), {(1, 2): 1})
        assert poly.variables == ("x", "v")
        assert poly == v("x") ** 2 * v("v")

    def test_equal_polys_equal_storage(self):
        a = (v("x") + v("q")) * (v("x") - v("q"))
        b = v("x") ** 2 - v("q") ** 2
        assert a.variables == b.variables
        assert a.terms == b.terms
        assert hash(a) == hash(b)

    def test_unknown_variable_rejected(self):
        with pytest.raises(ValueError, match="unknown variable"):
            MultiPoly(("t",), {(1,): 1})

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            MultiPoly(("x",), {(-1,): 1})

    def test_nonint_coefficient_rejected(self):
        with pytest.raises(TypeError):
            MultiPoly(("x",), {(1,): Fraction(1, 2)})


class TestArithmetic:
    def test_product_of_linear_factors(self):
        # the n=3 product of the substitution identity
        lhs = (1 + v("v")) * (1 + 2 * v("v"))
        assert lhs == 1 + 3 * v("v") + 2 * v("v") ** 2

    def test_annihilator(self):
        assert v("p") * 0 == 0
        assert (v("p") * MultiPoly.const(0)).is_zero

    def test_difference_of_squares(self):
        assert (v("x") + 1) * (v("x") - 1) == v("x") ** 2 - 1

    def test_int_mixing(self):
        assert 3 - v("x") == -(v("x") - 3)
        assert 2 + v("q") == v("q") + 2

    def test_power(self):
        assert (v("u") + 1) ** 3 == 1 + 3 * v("u") + 3 * v("u") ** 2 + v("u") ** 3
        assert v("x") ** 0 == 1
        with pytest.raises(ValueError):
            v("x") ** -1

    def test_fraction_coefficients_rejected(self):
        with pytest.raises(TypeError):
            v("x") * Fraction(1, 2)


class TestQueries:
    def test_degree(self):
        poly = v("q") * v("x") + v("p") * v("x") ** 2
        assert poly.degree("x") == 2
        assert poly.degree("q") == 1
        assert poly.degree("u") == 0
        assert MultiPoly.const(0).degree("x") == -1

    def test_coefficient_extraction(self):
        poly = v("q") * v("x") + v("p") * v("x") ** 2
        assert poly.coefficient("x", 1) == v("q")
        assert poly.coefficient("x", 2) == v("p")
        assert poly.coefficient("x", 3) == 0

    def test_coefficient_of_absent_variable(self):
        poly = 1 + v("u")
        assert poly.coefficient("v", 0) == poly
        assert poly.coefficient("v", 1) == 0

    def test_monomial_coefficient(self):
        poly = 3 + 3 * v("u") + 3 * v("v") + 3 * v("u") * v("v")
        assert poly.monomial_coefficient({"u": 1, "v": 1}) == 3
        assert poly.monomial_coefficient({}) == 3
        assert poly.monomial_coefficient({"u": 2}) == 0
        assert poly.monomial_coefficient({"x": 1}) == 0
        assert poly.constant_term() == 3


class TestEvaluationAndSubstitution:
    def test_evaluate_exact(self):
        q2 = 2 * v("q") ** 2 - v("q")
        assert q2.evaluate({"q": 1}) == 1
        assert q2.evaluate({"q": Fraction(1, 2)}) == 0
        row = 1 + 3 * v("v") + 2 * v("v") ** 2
        assert row.evaluate({"v": 1}) == 6

    def test_evaluate_missing_variable_named(self):
        with pytest.raises(ValueError, match="'q'"):
            (v("q") * v("x")).evaluate({"x": 1})

    def test_evaluate_zero(self):
        assert MultiPoly.const(0).evaluate({}) == 0

    def test_substitute_linear(self):
        assert (1 + v("v")).substitute("v", v("q") - 1) == v("q")
        assert (v("u") ** 2).substitute("u", v("p") - 1) == (
            v("p") ** 2 - 2 * v("p") + 1
        )

    def test_substitute_two_steps(self):
        poly = 3 * (1 + v("u")) * (1 + v("v"))
        done = poly.substitute("u", v("p") - 1).substitute("v", v("q") - 1)
        assert done == 3 * v("p") * v("q")

    def test_substitute_integer(self):
        poly = v("q") * v("x") + v("p") * v("x") ** 2
        assert poly.substitute("p", 2).substitute("q", 2) == (
            2 * v("x") + 2 * v("x") ** 2
        )


class TestPrinting:
    def test_x_last_in_monomials(self):
        assert str(v("q") * v("x") + v("p") * v("x") ** 2) == "q*x + p*x^2"

    def test_graded_order(self):
        poly = v("x") ** 3 + v("x") + 1
        assert str(poly) == "1 + x + x^3"

    def test_signs(self):
        assert str(v("u") - 1) == "-1 + u"
        assert str(1 - v("u")) == "1 - u"
        assert str(MultiPoly.const(0)) == "0"
        assert str(MultiPoly.const(-7)) == "-7"


class TestJson:
    def test_schema_shape(self):
        poly = v("q") * v("x") + 12 * v("p") * v("x") ** 2
        data = poly.to_json_obj()
        assert data == [
            {"exponents": {"x": 1, "q": 1}, "coeff": "1"},
            {"exponents": {"x": 2, "p": 1}, "coeff": "12"},
        ]

    def test_round_trip_big_coefficients(self):
        poly = (10**40) * v("x") * v("v") - 3
        assert MultiPoly.from_json_obj(poly.to_json_obj()) == poly

    def test_zero_round_trip(self):
        assert MultiPoly.from_json_obj([]) == 0


@st.composite
def polys(draw):
    names = draw(
        st.lists(st.sampled_from(VAR_ORDER), unique=True, min_size=0, max_size=3)
    )
    if not names:
        return MultiPoly.const(draw(st.integers(-9, 9)))
    keys = st.tuples(*(st.integers(0, 3) for _ in names))
    terms = draw(st.dictionaries(keys, st.integers(-9, 9), max_size=5))
    return MultiPoly(tuple(names), terms)


points = st.fixed_dictionaries(
    {name: st.integers(-3, 3) for name in VAR_ORDER}
)


class TestAlgebraicLaws:
    @given(polys(), polys())
    @settings(max_examples=100)
    def test_addition_commutes(self, a, b):
        assert a + b == b + a

    @given(polys(), polys())
    @settings(max_examples=100)
    def test_multiplication_commutes(self, a, b):
        assert a * b == b * a

    @given(polys(), polys(), polys())
    @settings(max_examples=100)
    def test_associativity(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)

    @given(polys(), polys(), polys())
    @settings(max_examples=100)
    def test_distributivity(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(polys(), polys(), points)
    @settings(max_examples=100)
    def test_operations_commute_with_evaluation(self, a, b, point):
        assert (a + b).evaluate(point) == a.evaluate(point) + b.evaluate(point)
        assert (a * b).evaluate(point) == a.evaluate(point) * b.evaluate(point)

    @given(polys())
    @settings(max_examples=100)
    def test_json_round_trip(self, a):
        assert MultiPoly.from_json_obj(a.to_json_obj()) == a

    @given(polys())
    @settings(max_examples=100)
    def test_substitution_matches_evaluation(self, a):
        replaced = a.substitute("x", v("q") + 1)
        point = {name: 2 for name in VAR_ORDER}
        shifted = dict(point)
        shifted["x"] = point["q"] + 1
        assert replaced.evaluate(point) == a.evaluate(shifted)
