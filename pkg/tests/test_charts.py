"""Chart labels, pivots, monomial vectors, tableaux, and their counts."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from coxlinks.charts import (
    NestedSetPair,
    all_charts,
    build_chart,
    commuting_charts,
    count_standard_tableaux,
    enumerate_nested_pairs,
    gyt_injectivity_report,
    is_commutative,
    monomial_vector,
    standard_tableau_images,
    to_gyt,
)
from coxlinks.errors import CapacityError


def label(n, sx, sy) -> NestedSetPair:
    return NestedSetPair.from_lists(n, sx, sy)


FAMILY_LABEL = label(4, [{3, 4}, {3}, (), ()], [{4}, {4}, {4}, ()])


# -- enumeration -----------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 8))
def test_enumeration_counts_factorial(n):
    assert len(enumerate_nested_pairs(n)) == math.factorial(n)


def test_enumeration_is_duplicate_free_and_sorted():
    labels = enumerate_nested_pairs(5)
    keys = [lab.flat_key() for lab in labels]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)


def test_enumeration_rejects_bad_sizes():
    with pytest.raises(ValueError):
        enumerate_nested_pairs(0)
    with pytest.raises(CapacityError):
        enumerate_nested_pairs(10)


def test_chains_need_not_be_disjoint():
    # The two chains may share elements, e.g. sx = ({3},{3},{}) with
    # sy = ({2,3},{3},{}): only the per-level size sum is constrained.
    overlapping = [
        lab for lab in enumerate_nested_pairs(3) if lab.sx[0] & lab.sy[0]
    ]
    assert overlapping


def test_label_validation():
    with pytest.raises(ValueError):
        label(2, [{2}, {2}], [(), ()])  # S^2 must be empty
    with pytest.raises(ValueError):
        label(2, [(), ()], [(), ()])  # level sizes must sum to n - level
    with pytest.raises(ValueError):
        label(3, [{2}, {3}, ()], [{3}, (), ()])  # not nested


# -- chart structure ---------------------------------------------------------------


def test_family_chart_structure():
    chart = build_chart(FAMILY_LABEL)
    assert sorted(chart.px) == [(1, 4), (2, 3)]
    assert sorted(chart.py) == [(3, 4)]
    assert sorted(chart.zx) == [(1, 3)]
    assert sorted(chart.zy) == [(1, 4), (2, 4)]
    assert monomial_vector(chart) == ("", "Y", "XY", "X")
    assert not is_commutative(chart)


def test_free_coordinate_count_is_triangular():
    for n in range(1, 6):
        for chart in all_charts(n):
            assert len(chart.nx) + len(chart.ny) == n * (n - 1) // 2


def test_base_matrices_have_pivot_ones():
    chart = build_chart(FAMILY_LABEL)
    assert chart.mx[0][3] == 1 and chart.mx[1][2] == 1
    assert sum(map(sum, chart.mx)) == 2
    assert chart.my[2][3] == 1
    assert sum(map(sum, chart.my)) == 1


@settings(max_examples=60)
@given(st.integers(min_value=1, max_value=5), st.data())
def test_monomial_vectors_are_distinct_words(n, data):
    labels = enumerate_nested_pairs(n)
    lab = data.draw(st.sampled_from(labels))
    words = monomial_vector(build_chart(lab))
    assert words[0] == ""
    assert len(set(words)) == n


def test_monomial_words_may_skip_lengths():
    # Words need not have length k-1; a pivot may point far down the flag.
    lengths = {
        tuple(len(w) for w in monomial_vector(chart))
        for chart in all_charts(4)
    }
    assert (0, 1, 2, 3) in lengths
    assert any(seq != tuple(range(4)) for seq in lengths)


# -- commuting sublocus ------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 7))
def test_commuting_charts_are_the_hooks(n):
    assert len(commuting_charts(n)) == 2 ** (n - 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_standard_images_match_tableau_count(n):
    assert len(standard_tableau_images(n)) == count_standard_tableaux(n)


def test_tableau_count_oracle_values():
    assert [count_standard_tableaux(n) for n in range(0, 7)] == [
        1, 1, 2, 4, 10, 26, 76,
    ]


def test_commuting_chart_tableaux_are_standard_hooks():
    for chart in commuting_charts(5):
        tableau = to_gyt(chart)
        assert tableau.is_standard()
        cells = set(tableau.as_dict())
        # Hook shape: every cell sits in row 0 or column 0.
        assert all(r == 0 or c == 0 for r, c in cells)


# -- tableau map and its failure of injectivity -------------------------------------


def test_gyt_of_family_chart():
    tableau = to_gyt(build_chart(FAMILY_LABEL))
    assert tableau.as_dict() == {
        (0, 0): frozenset({1}),
        (0, 1): frozenset({2}),
        (1, 1): frozenset({3}),
        (1, 0): frozenset({4}),
    }


def test_gyt_multi_cell_example():
    # A non-standard image: two flag steps can share one cell from n = 5 on.
    target = {
        (0, 0): frozenset({1}),
        (1, 0): frozenset({2}),
        (0, 1): frozenset({4}),
        (1, 1): frozenset({3, 5}),
    }
    images = [to_gyt(chart).as_dict() for chart in all_charts(5)]
    assert target in images
    transposed = {(c, r): v for (r, c), v in target.items()}
    assert transposed in images


@pytest.mark.parametrize(
    "n,expected_groups", [(1, 0), (2, 0), (3, 0), (4, 2), (5, 20)]
)
def test_collision_group_counts_are_pinned(n, expected_groups):
    report = gyt_injectivity_report(n)
    assert report["total"] == math.factorial(n)
    assert len(report["collisions"]) == expected_groups
    assert all(len(group["labels"]) == 2 for group in report["collisions"])


def test_first_collision_pair_is_the_word_order_swap():
    report = gyt_injectivity_report(4)
    first = report["collisions"][0]
    labels = [(tuple(map(tuple, lab["sx"])), tuple(map(tuple, lab["sy"])))
              for lab in first["labels"]]
    assert (((3, 4), (4,), (), ()), ((4,), (4,), (4,), ())) in labels
    assert (((4,), (4,), (), ()), ((2, 4), (4,), (4,), ())) in labels


def test_mirror_transposes_the_tableau():
    for chart in all_charts(4):
        mirrored = build_chart(chart.label.mirror())
        direct = to_gyt(chart).as_dict()
        swapped = {(c, r): v for (r, c), v in to_gyt(mirrored).as_dict().items()}
        assert direct == swapped


def test_injectivity_scan_capacity():
    with pytest.raises(CapacityError):
        gyt_injectivity_report(8)
