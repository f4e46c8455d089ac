from fractions import Fraction

import pytest

from knotproj import (
    U,
    a2_gauss_formula,
    a2_skein,
    arnold_invariant,
    average_a2,
    enumerate_curves,
    format_rational,
    parse_code,
    parse_rational,
    realize,
    resolutions,
    resolve,
)
from knotproj.invariants import conway_polynomial

from conftest import skein_average_a2


def curve(text):
    return realize(parse_code(text))


# --- resolutions ----------------------------------------------------------------


def test_resolutions_bit_counter_order():
    got = [r.over_under for r in resolutions(curve("1 1 2 2"))]
    assert got == [
        (False, False),
        (True, False),
        (False, True),
        (True, True),
    ]


def test_resolution_count():
    for n in range(0, 5):
        p = enumerate_curves(n)[0]
        assert sum(1 for _ in resolutions(p)) == 2 ** n


def test_flipping_one_bit_flips_exactly_that_sign():
    for n in range(1, 5):
        for p in enumerate_curves(n):
            base = resolve(p, tuple([False] * n))
            for v in range(1, n + 1):
                bits = tuple(i == v - 1 for i in range(n))
                r = resolve(p, bits)
                for u in range(1, n + 1):
                    expect = -base.signs[u - 1] if u == v else base.signs[u - 1]
                    assert r.signs[u - 1] == expect


# --- skein oracle ----------------------------------------------------------------


def test_conway_unknot_and_loops():
    # every resolution of a curve whose shadow reduces by R1 alone is an unknot
    for r in resolutions(curve("1 1 2 2")):
        assert conway_polynomial(r) == {0: 1}
        assert a2_skein(r) == 0


def test_trefoil_skein_values():
    got = {r.over_under: a2_skein(r) for r in resolutions(curve("1 2 3 1 2 3"))}
    alternating = {(False, True, False), (True, False, True)}
    for bits, val in got.items():
        assert val == (1 if bits in alternating else 0)


def test_figure_eight_shadow_a2_spread():
    # resolutions of 1 2 3 1 4 3 2 4 include the figure-eight knot (a2 = -1)
    # and trefoils (a2 = 1); the skein route must see both signs
    p = curve("1 2 3 1 4 3 2 4")
    vals = {a2_skein(r) for r in resolutions(p)}
    assert vals == {-1, 0, 1}


def test_a2_mirror_invariant():
    for n in range(1, 5):
        for p in enumerate_curves(n):
            for r in resolutions(p):
                mirror = resolve(p, tuple(not b for b in r.over_under))
                assert a2_skein(r) == a2_skein(mirror)


# --- closed formula vs oracle ------------------------------------------------------


def test_formula_matches_skein_every_resolution():
    for n in range(0, 5):
        for p in enumerate_curves(n):
            for r in resolutions(p):
                assert a2_gauss_formula(r) == a2_skein(r)


def test_formula_base_independent():
    p = curve("1 2 3 1 2 3")
    for r in resolutions(p):
        vals = {a2_gauss_formula(r, base=b) for b in range(6)}
        assert len(vals) == 1


# --- averaging -----------------------------------------------------------------


def test_average_a2_trefoil():
    assert average_a2(curve("1 2 3 1 2 3")) == Fraction(1, 4)


def test_arnold_known_values():
    assert arnold_invariant(U) == 0
    assert arnold_invariant(curve("1 1")) == 0
    assert arnold_invariant(curve("1 2 3 1 2 3")) == 2


def test_arnold_matches_skein_average():
    for n in range(0, 5):
        for p in enumerate_curves(n):
            assert average_a2(p) == skein_average_a2(p)
            assert arnold_invariant(p) == 8 * skein_average_a2(p)


def test_arnold_exact_rational():
    val = arnold_invariant(curve("1 2 3 1 2 3"))
    assert isinstance(val, Fraction)


# --- rational text form ------------------------------------------------------------


@pytest.mark.parametrize(
    "q,text",
    [
        (Fraction(0), "0"),
        (Fraction(2), "2"),
        (Fraction(-3), "-3"),
        (Fraction(1, 4), "1/4"),
        (Fraction(-7, 2), "-7/2"),
    ],
)
def test_rational_round_trip(q, text):
    assert format_rational(q) == text
    assert parse_rational(text) == q


@pytest.mark.parametrize("bad", ["", "x", "1/", "/2", "1/0", "1.5", "1 / 2"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)
