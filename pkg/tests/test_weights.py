"""Weight vectors, tangent/obstruction records, and fixed-locus counts."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from coxlinks.charts import NestedSetPair, all_charts, build_chart, monomial_vector
from coxlinks.weights import (
    fixed_dim_check,
    obstruction_weights,
    tangent_weights,
    torus_rescaling_check,
    weight_data,
    weight_vectors,
)

FAMILY_CHART = build_chart(
    NestedSetPair.from_lists(4, [{3, 4}, {3}, (), ()], [{4}, {4}, {4}, ()])
)


# -- the recursion -----------------------------------------------------------------


def test_weight_vectors_of_family_chart():
    # Pivots: x at (1,4), (2,3); y at (3,4).  Recursion from w^4 = (0,0).
    wx, wy = weight_vectors(FAMILY_CHART)
    assert wx == (1, 1, 0, 0)
    assert wy == (0, 1, 1, 0)


@pytest.mark.parametrize("n", range(1, 6))
def test_weights_equal_word_degrees(n):
    # w_x^i is the X-degree of the monomial word of flag step n+1-i, and
    # likewise for Y: the recursion and the word recursion are the same data.
    for chart in all_charts(n):
        wx, wy = weight_vectors(chart)
        words = monomial_vector(chart)
        for i in range(1, n + 1):
            word = words[n - i]  # m_{n+1-i}, zero-indexed
            assert wx[i - 1] == word.count("X")
            assert wy[i - 1] == word.count("Y")


def test_tangent_record_counts_and_sides():
    records = tangent_weights(FAMILY_CHART)
    assert len(records) == 6
    assert {record.side for record in records} == {"x", "y"}


def test_family_chart_has_one_vanishing_factor():
    # The y_{12} record carries (dx, dy) = (0, 0): a vanishing denominator
    # factor (the chart sits in a positive-dimensional torus orbit).
    zero_records = [rec for rec in tangent_weights(FAMILY_CHART) if rec.is_zero()]
    assert [(rec.side, rec.index) for rec in zero_records] == [("y", (1, 2))]
    assert fixed_dim_check(FAMILY_CHART)["vanishing_factors"] == 1


def test_obstruction_records_default_index_set():
    records = obstruction_weights(FAMILY_CHART)
    assert [record.index for record in records] == [(1, 3), (1, 4), (2, 4)]


def test_obstruction_records_grow_with_link_s():
    base = obstruction_weights(FAMILY_CHART)
    extended = obstruction_weights(FAMILY_CHART, link_s=(2,))
    assert len(extended) == len(base) + 1
    assert (2, 3) in {record.index for record in extended}
    with pytest.raises(ValueError):
        obstruction_weights(FAMILY_CHART, link_s=(4,))


# -- fixed-locus counts --------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 7))
def test_fixed_dim_inequality_holds(n):
    for chart in all_charts(n):
        counts = fixed_dim_check(chart)
        assert counts["inequality"]
        assert counts["dimOb0"] >= counts["dimT0"]


def test_vanishing_factor_census():
    # Literal (0,0) tangent records: none below n = 4, exactly two charts
    # at n = 4 (the family chart and its mirror).
    for n in (1, 2, 3):
        assert all(
            fixed_dim_check(chart)["vanishing_factors"] == 0
            for chart in all_charts(n)
        )
    flagged = [
        chart
        for chart in all_charts(4)
        if fixed_dim_check(chart)["vanishing_factors"]
    ]
    assert len(flagged) == 2
    labels = {chart.label.flat_key() for chart in flagged}
    assert FAMILY_CHART.label.flat_key() in labels
    assert FAMILY_CHART.label.mirror().flat_key() in labels


def test_weight_data_bundles_everything():
    data = weight_data(FAMILY_CHART, link_s=(2,))
    assert data.wx == (1, 1, 0, 0)
    assert len(data.tangent) == 6
    assert len(data.obstruction) == 4
    record = data.to_record()
    assert set(record) == {"wx", "wy", "tangent", "obstruction"}


# -- the rescaling gauge check --------------------------------------------------------


@settings(max_examples=40, deadline=None)
@given(
    st.integers(min_value=1, max_value=5),
    st.data(),
    st.fractions(min_value=Fraction(-5), max_value=Fraction(5)).filter(bool),
    st.fractions(min_value=Fraction(-5), max_value=Fraction(5)).filter(bool),
)
def test_rescaling_is_a_torus_action_on_every_chart(n, data, t, s):
    chart = data.draw(st.sampled_from(all_charts(n)))
    assert torus_rescaling_check(chart, t, s)


def test_rescaling_rejects_zero_parameters():
    with pytest.raises(ValueError):
        torus_rescaling_check(FAMILY_CHART, Fraction(0), Fraction(1))
