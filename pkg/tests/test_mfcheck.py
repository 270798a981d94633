"""Hessenberg determinant identities and the commutator locus check."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from coxlinks.charts import NestedSetPair, all_charts, build_chart, is_commutative
from coxlinks.errors import SingularMatrixError
from coxlinks.mfcheck import (
    F,
    all_F,
    commutator,
    commutator_entries,
    containment_suite,
    det,
    hessenberg_check,
    identity_matrix,
    is_hessenberg,
    is_strictly_upper,
    is_upper,
    mat_add,
    mat_inverse,
    mat_mul,
    mat_scale,
    matrix_from_rows,
    negative_control,
    sample_hessenberg,
    sample_strictly_upper,
    symbolic_gid_check,
    xhat,
)
from coxlinks.polyalg import LaurentPoly


def _elementary(n, i, j):
    rows = [[0] * n for _ in range(n)]
    rows[i - 1][j - 1] = 1
    return matrix_from_rows(rows)


# -- plumbing -------------------------------------------------------------------------


def test_matrix_from_rows_validates():
    with pytest.raises(ValueError):
        matrix_from_rows([[1, 2], [3]])
    with pytest.raises(ValueError):
        matrix_from_rows([[1, 2, 3], [4, 5, 6]])
    matrix = matrix_from_rows([[1, 2], [3, 4]])
    assert matrix[0][1] == Fraction(2)


def test_shape_predicates():
    upper = matrix_from_rows([[1, 2], [0, 3]])
    strict = matrix_from_rows([[0, 2], [0, 0]])
    hess = matrix_from_rows([[1, 2, 3], [4, 5, 6], [0, 7, 8]])
    assert is_upper(upper) and not is_strictly_upper(upper)
    assert is_strictly_upper(strict)
    assert is_hessenberg(hess) and not is_upper(hess)


def test_inverse_round_trip():
    rng = random.Random(3)
    for n in (2, 3, 4):
        g = sample_hessenberg(rng, n)
        assert mat_mul(g, mat_inverse(g)) == identity_matrix(n)


def test_inverse_rejects_singular():
    with pytest.raises(SingularMatrixError):
        mat_inverse(matrix_from_rows([[1, 2], [2, 4]]))


def test_det_works_symbolically():
    variables = ("p", "q")
    p = LaurentPoly.variable(variables, "p")
    q = LaurentPoly.variable(variables, "q")
    zero = p - p
    matrix = ((p, q), (zero, p))
    assert det(matrix) == p * p


# -- the determinant functions ---------------------------------------------------------


def test_F_at_identity_reads_diagonal_gaps():
    x = matrix_from_rows([[1, 5, 7], [0, 2, 6], [0, 0, 3]])
    assert [F(i, x, identity_matrix(3)) for i in (1, 2)] == [Fraction(1), Fraction(2)]


def test_scalar_matrix_kills_all_F():
    rng = random.Random(5)
    for n in (2, 3, 4):
        g = sample_hessenberg(rng, n)
        x = mat_scale(identity_matrix(n), Fraction(7))
        assert xhat(x) == mat_scale(identity_matrix(n), Fraction(0))
        assert all(value == 0 for value in all_F(x, g))


def test_by_construction_samples_satisfy_everything():
    rng = random.Random(9)
    for _ in range(10):
        n = rng.randint(2, 5)
        g = sample_hessenberg(rng, n)
        k = sample_strictly_upper(rng, n)
        x = mat_add(mat_mul(g, k), mat_scale(identity_matrix(n), Fraction(-3)))
        assert is_upper(x)
        assert all(value == 0 for value in all_F(x, g))
        assert hessenberg_check(g, x)


def test_containment_suite_is_clean():
    for n in (2, 3, 4, 5):
        report = containment_suite(n, 100, seed=n)
        assert report["passed"]
        assert report["failures"] == []


def test_negative_control_breaks_containment_not_F():
    # A (3,1) entry leaves every F_i = 0 but wrecks g^-1 X g upper:
    # the determinant identities alone do not see the Hessenberg shape.
    report = negative_control(3, 50, seed=0)
    assert report["passed"]
    assert report["containment_failures"] > 0
    assert report["checked"] == 50


def test_negative_control_needs_room():
    with pytest.raises(ValueError):
        negative_control(2, 10, seed=0)


@pytest.mark.parametrize("n", (2, 3, 4))
def test_symbolic_identity_check(n):
    assert symbolic_gid_check(n)


# -- commutator bookkeeping -------------------------------------------------------------


def test_elementary_commutator_golden():
    e12 = _elementary(3, 1, 2)
    e23 = _elementary(3, 2, 3)
    assert commutator(e12, e23) == _elementary(3, 1, 3)
    assert commutator_entries(e12, e23) == [((1, 3), Fraction(1))]


def test_link_s_adds_superdiagonal_entries():
    e12 = _elementary(3, 1, 2)
    e23 = _elementary(3, 2, 3)
    entries = dict(commutator_entries(e12, e23, link_s=(1, 2)))
    assert set(entries) == {(1, 3), (1, 2), (2, 3)}
    with pytest.raises(ValueError):
        commutator_entries(e12, e23, link_s=(3,))


def test_family_base_point_fails_exactly_at_24():
    chart = build_chart(
        NestedSetPair.from_lists(4, [{3, 4}, {3}, (), ()], [{4}, {4}, {4}, ()])
    )
    x = matrix_from_rows(chart.mx)
    y = matrix_from_rows(chart.my)
    assert dict(commutator_entries(x, y)) == {
        (1, 3): Fraction(0),
        (1, 4): Fraction(0),
        (2, 4): Fraction(1),
    }
    assert not is_commutative(chart)


@pytest.mark.parametrize("n", range(2, 6))
def test_base_point_entries_decide_commutativity(n):
    # For strictly upper pairs the first superdiagonal of the commutator
    # always vanishes, so the tracked entries decide full commutativity.
    for chart in all_charts(n):
        x = matrix_from_rows(chart.mx)
        y = matrix_from_rows(chart.my)
        tracked_zero = all(v == 0 for _, v in commutator_entries(x, y))
        assert tracked_zero == is_commutative(chart)
