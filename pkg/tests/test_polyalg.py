"""Exact Laurent-polynomial and binomial-rational arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from coxlinks.errors import ExpansionError, NotDivisibleError
from coxlinks.polyalg import (
    BinomialRational,
    LaurentPoly,
    divide_by_binomial,
    parse_poly,
    truncate_series,
)

AQ = ("a", "q")
AQT = ("a", "q", "t")


def poly(text: str, variables=AQ) -> LaurentPoly:
    return parse_poly(text, variables)


@st.composite
def laurent_polys(draw, variables=AQ, max_terms=6, max_exp=5, max_coeff=9):
    terms = draw(
        st.dictionaries(
            st.tuples(
                *[
                    st.integers(min_value=-max_exp, max_value=max_exp)
                    for _ in variables
                ]
            ),
            st.integers(min_value=-max_coeff, max_value=max_coeff).filter(bool),
            max_size=max_terms,
        )
    )
    return LaurentPoly(variables, terms)


# -- LaurentPoly ----------------------------------------------------------------


def test_zero_one_and_constants():
    assert LaurentPoly.zero(AQ).is_zero()
    assert not LaurentPoly.zero(AQ)
    assert LaurentPoly.one(AQ) == 1
    assert LaurentPoly.constant(AQ, -3) == -3


def test_variable_and_monomial_constructors():
    q = LaurentPoly.variable(AQ, "q")
    assert str(q) == "q"
    assert str(LaurentPoly.monomial(AQ, (2, -1))) == "a^2*q^-1"


@given(laurent_polys(), laurent_polys(), laurent_polys())
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert f * (g + h) == f * g + f * h
    assert f - f == LaurentPoly.zero(AQ)
    assert f * LaurentPoly.one(AQ) == f


@given(laurent_polys())
def test_str_parse_round_trip(f):
    assert parse_poly(str(f), AQ) == f


def test_glex_display_order():
    # Total degree first, ties broken lexicographically by exponent.
    assert str(poly("a^2*q^2 + 1 - a^4")) == "-a^4 + a^2*q^2 + 1"
    assert str(poly("q^-2 + q^2")) == "q^2 + q^-2"


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_poly("a +* q", AQ)
    with pytest.raises(ValueError):
        parse_poly("b + 1", AQ)


def test_substitute_monomial_images():
    f = poly("a*q^2 - q^-2", AQ)
    image = f.substitute(
        {"a": LaurentPoly.monomial(AQT, (0, 0, 2)), "q": LaurentPoly.monomial(AQT, (0, 1, 0))}
    )
    assert image == parse_poly("q^2*t^2 - q^-2", AQT)


def test_substitute_polynomial_image_needs_nonnegative_powers():
    f = poly("q + q^-1")
    with pytest.raises(ValueError):
        f.substitute(
            {
                "a": LaurentPoly.one(AQ),
                "q": poly("q + 1"),  # not invertible, q^-1 cannot be mapped
            }
        )


def test_coefficient_mass_and_exponents():
    f = poly("-a^4 + a^2*q^2 + 2*a^2")
    assert f.coefficient_mass() == 4
    assert f.exponents_of("a") == {4, 2}


# -- divide_by_binomial and truncation -------------------------------------------


def test_exact_division_by_binomial():
    # (1 - q^4) = (1 - q)(1 + q + q^2 + q^3)
    numerator = poly("1 - q^4")
    quotient = divide_by_binomial(numerator, (0, 1))
    assert quotient == poly("1 + q + q^2 + q^3")


def test_division_failure_raises():
    with pytest.raises(NotDivisibleError):
        divide_by_binomial(poly("1 + q"), (0, 1))


@given(laurent_polys(max_terms=4, max_exp=3))
def test_division_inverts_multiplication(f):
    factor = poly("1 - q")
    assert divide_by_binomial(f * factor, (0, 1)) == f


def test_truncate_series_geometric():
    # 1/(1-q) expands to 1 + q + q^2 + ... exactly up to the bound.
    rational = BinomialRational(LaurentPoly.one(AQ), {(0, 1): 1})
    series = rational.truncate_series({"a": 1, "q": 1}, 4)
    assert series == poly("1 + q + q^2 + q^3 + q^4")


def test_truncate_series_rejects_nonpositive_weights():
    rational = BinomialRational(LaurentPoly.one(AQ), {(1, -1): 1})
    with pytest.raises(ExpansionError):
        rational.truncate_series({"a": 1, "q": 1}, 4)


# -- BinomialRational -------------------------------------------------------------


def test_rational_normalization_cancels_common_factor():
    numerator = poly("1 - q^2")
    rational = BinomialRational(numerator, {(0, 1): 1}).normalize()
    assert rational.is_polynomial()
    assert rational.num == poly("1 + q")


def test_rational_addition_common_denominator():
    one_over = BinomialRational(LaurentPoly.one(AQ), {(0, 1): 1})
    total = one_over + one_over
    assert total.num == poly("2")
    assert total.den == {(0, 1): 1}


def test_denominator_orientation_flip():
    # 1/(1 - q^-2) is stored as -q^2/(1 - q^2): the factor always keeps its
    # monomial graded-lex above 1; numerator absorbs the unit.
    flipped = BinomialRational(poly("1"), {(0, -2): 1})
    assert flipped.den == {(0, 2): 1}
    assert flipped.num == poly("-q^2")


def test_rational_equality_is_semantic():
    # Equality cross-multiplies, so unnormalized and normalized forms agree.
    a = BinomialRational(poly("1 - q^4"), {(0, 1): 1, (0, 2): 1})
    b = BinomialRational(poly("1 + q^2"), {(0, 1): 1})
    assert a == b
    assert a.normalize() == b
    assert a.normalize().normalize() == a.normalize()


def test_string_form_single_and_multiple_factors():
    single = BinomialRational(poly("1"), {(0, 2): 1})
    assert str(single) == "(1) / (1 - q^2)"
    double = BinomialRational(poly("q"), {(0, 2): 2})
    assert str(double) == "(q) / (1 - q^2)^2"


@given(laurent_polys(max_terms=3, max_exp=2), laurent_polys(max_terms=3, max_exp=2))
def test_rational_product_is_commutative(f, g):
    rf = BinomialRational(f, {(0, 1): 1})
    rg = BinomialRational(g, {(1, 0): 1})
    assert rf * rg == rg * rf


def test_mixed_arithmetic_laurent_times_rational():
    scalar = poly("q")
    rational = BinomialRational(poly("1 + q"), {(0, 2): 1})
    left = scalar * rational
    right = rational * scalar
    assert left == right
    assert left.num == poly("q + q^2")


def test_to_record_round_trip():
    rational = BinomialRational(poly("1 + a*q^-1"), {(0, 2): 2, (1, 1): 1})
    record = rational.to_record()
    assert parse_poly(record["numerator"], AQ) == rational.num
    rebuilt = {}
    for factor, multiplicity in record["denominator_factors"]:
        exponent = parse_poly(factor, AQ)
        (key,) = exponent.terms
        rebuilt[key] = multiplicity
    assert rebuilt == rational.den
