"""Braid words, the Hecke-trace engine, and the planar skein resolver."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from coxlinks._planar_skein import resolve_homfly
from coxlinks.errors import BraidSyntaxError, CapacityError
from coxlinks.homfly import (
    BraidWord,
    braid_to_hecke,
    coxeter_braid,
    homfly,
    markov_trace,
    parse_braid,
)
from coxlinks.polyalg import LaurentPoly, parse_poly

AZ = ("a", "z")


def _poly(text):
    return parse_poly(text, AZ)


@st.composite
def braid_words(draw, max_strands=4, max_length=6):
    strands = draw(st.integers(min_value=2, max_value=max_strands))
    length = draw(st.integers(min_value=0, max_value=max_length))
    word = tuple(
        (
            draw(st.integers(min_value=1, max_value=strands - 1)),
            draw(st.sampled_from((1, -1))),
        )
        for _ in range(length)
    )
    return BraidWord(strands=strands, word=word)


# -- parsing --------------------------------------------------------------------------


def test_parse_round_trip():
    braid = parse_braid("strands=3 s1 s2^-1 s1")
    assert braid.strands == 3
    assert braid.word == ((1, 1), (2, -1), (1, 1))
    assert parse_braid(braid.to_text()) == braid


@pytest.mark.parametrize(
    "text, position",
    [
        ("whatever", 0),
        ("strands=2 s5", 10),
        ("strands=3 s1 -s2", 13),
        ("strands=0 s1", 0),
    ],
)
def test_parse_rejects_with_position(text, position):
    with pytest.raises(BraidSyntaxError) as excinfo:
        parse_braid(text)
    assert f"(at position {position})" in str(excinfo.value)


@given(braid_words())
def test_text_round_trip_property(braid):
    assert parse_braid(braid.to_text()) == braid


# -- braid bookkeeping ----------------------------------------------------------------


def test_writhe_components_permutation():
    trefoil = parse_braid("strands=2 s1 s1 s1")
    assert trefoil.writhe() == 3
    assert trefoil.components() == 1
    assert trefoil.permutation() == (2, 1)
    hopf = parse_braid("strands=2 s1 s1")
    assert hopf.components() == 2
    assert hopf.permutation() == (1, 2)


@given(braid_words())
def test_inverse_reverses_and_flips(braid):
    inverse = braid.inverse()
    assert inverse.writhe() == -braid.writhe()
    assert inverse.word == tuple((i, -s) for i, s in reversed(braid.word))


# -- golden values --------------------------------------------------------------------


def test_unknot_closures_are_one():
    assert homfly(parse_braid("strands=1")) == _poly("1")
    assert homfly(parse_braid("strands=2 s1")) == _poly("1")
    assert homfly(parse_braid("strands=3 s1 s2")) == _poly("1")


def test_trefoil_golden():
    value = homfly(parse_braid("strands=2 s1 s1 s1"))
    assert str(value) == "-a^4 + a^2*z^2 + 2*a^2"


def test_hopf_link_golden():
    value = homfly(parse_braid("strands=2 s1 s1"))
    assert value == _poly("-a^3*z^-1 + a*z + a*z^-1")


def test_torus_3_4_golden():
    value = homfly(coxeter_braid(3, (), (1, 1)))
    expected = _poly(
        "a^10 - a^8*z^4 - 5*a^8*z^2 - 5*a^8"
        " + a^6*z^6 + 6*a^6*z^4 + 10*a^6*z^2 + 5*a^6"
    )
    assert value == expected


def test_mirror_image_swaps_a_for_its_inverse():
    trefoil = parse_braid("strands=2 s1 s1 s1")
    mirrored = homfly(trefoil.inverse())
    assert mirrored == homfly(trefoil).substitute(
        {"a": LaurentPoly.monomial(AZ, (-1, 0)), "z": LaurentPoly.variable(AZ, "z")}
    )


# -- defining relations, randomly probed ------------------------------------------------


def test_skein_relation_on_seeded_words():
    rng = random.Random(7)
    a = LaurentPoly.variable(AZ, "a")
    z = LaurentPoly.variable(AZ, "z")
    a_inv = LaurentPoly.monomial(AZ, (-1, 0))
    for _ in range(20):
        strands = rng.randint(2, 4)
        length = rng.randint(0, 5)
        word = [
            (rng.randint(1, strands - 1), rng.choice((1, -1))) for _ in range(length)
        ]
        spot = rng.randint(0, length)
        index = rng.randint(1, strands - 1)
        plus = BraidWord(strands, tuple(word[:spot] + [(index, 1)] + word[spot:]))
        minus = BraidWord(strands, tuple(word[:spot] + [(index, -1)] + word[spot:]))
        zero = BraidWord(strands, tuple(word))
        assert a_inv * homfly(plus) - a * homfly(minus) == z * homfly(zero)


def test_markov_moves_on_seeded_words():
    rng = random.Random(11)
    for _ in range(20):
        strands = rng.randint(2, 4)
        length = rng.randint(1, 5)
        word = tuple(
            (rng.randint(1, strands - 1), rng.choice((1, -1))) for _ in range(length)
        )
        braid = BraidWord(strands, word)
        rotated = BraidWord(strands, word[1:] + word[:1])
        assert homfly(rotated) == homfly(braid)
        sign = rng.choice((1, -1))
        stabilized = BraidWord(strands + 1, word + ((strands, sign),))
        assert homfly(stabilized) == homfly(braid)


@settings(max_examples=25, deadline=None)
@given(braid_words(max_strands=3, max_length=5))
def test_resolver_agrees_with_trace_engine(braid):
    assert resolve_homfly(braid) == homfly(braid)


# -- the braids behind the localization sums --------------------------------------------


def test_coxeter_braid_examples():
    assert coxeter_braid(2, (), (1,)).to_text() == "strands=2 s1 s1 s1"
    assert coxeter_braid(3, (), (0, 0)).to_text() == "strands=3 s2 s1"
    assert coxeter_braid(3, (1,), (0, 0)).to_text() == "strands=3 s2"
    full = coxeter_braid(3, (), (1, 1))
    assert full.to_text() == "strands=3 s2 s1 s1 s2 s2 s1 s2 s2"
    assert full.writhe() == 8


@pytest.mark.parametrize("k", range(0, 4))
def test_two_strand_coxeter_closures_are_odd_torus_knots(k):
    braid = coxeter_braid(2, (), (k,))
    assert len(braid.word) == 2 * k + 1
    if k == 0:
        assert homfly(braid) == _poly("1")


def test_strand_capacity():
    with pytest.raises(CapacityError):
        homfly(BraidWord(7, ((1, 1),)))


def test_resolver_crossing_capacity():
    word = tuple((1, 1) for _ in range(9))
    with pytest.raises(CapacityError):
        resolve_homfly(BraidWord(2, word))


def test_markov_trace_is_homfly_before_normalization():
    braid = parse_braid("strands=2 s1 s1 s1")
    trace = markov_trace(braid_to_hecke(braid))
    assert trace.den  # the raw trace keeps its (1 - a^2)-type denominator
