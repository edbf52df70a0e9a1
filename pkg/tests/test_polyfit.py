import json
import pathlib
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bott_enum.polyfit import RatPoly, lagrange

DATA = pathlib.Path(__file__).parent / "data" / "degree_polynomials.json"


def load_poly(key):
    coeffs = json.loads(DATA.read_text())[key]
    return RatPoly([Fraction(c) for c in coeffs])


fractions = st.fractions(min_value=-(10**6), max_value=10**6, max_denominator=10**3)


def test_parabola():
    assert lagrange([(0, 0), (1, 1), (2, 4)]) == RatPoly([0, 0, 1])


def test_single_point_is_constant():
    p = lagrange([(5, Fraction(7, 3))])
    assert p.degree == 0
    assert p.eval(100) == Fraction(7, 3)


def test_duplicate_abscissa():
    with pytest.raises(ValueError, match="duplicate abscissa"):
        lagrange([(1, 0), (1, 1)])


def test_zero_polynomial():
    p = RatPoly([0, 0])
    assert p.degree == -1
    assert p.eval(12) == 0
    assert str(p) == "0"


def test_trims_trailing_zeros():
    assert RatPoly([1, 2, 0, 0]) == RatPoly([1, 2])
    assert RatPoly([1, 2]).degree == 1


def test_recovers_oversampled_degree_formula():
    p = load_poly("lines_p3")
    assert p.degree == 8
    fitted = lagrange([(d, p.eval(d)) for d in range(3, 16)])
    assert fitted == p


def test_interpolates_big_rational_values():
    nodes = [(4, Fraction(26219809342420614792105, 381864067200)), (5, 0), (6, 1)]
    p = lagrange(nodes)
    for x, y in nodes:
        assert p.eval(x) == y


def test_common_denominator():
    p = RatPoly([1, Fraction(3, 2), Fraction(1, 2)])
    assert p.common_denominator() == (2, (2, 3, 1))
    assert p.format_common_denominator() == "(d^2 + 3*d + 2)/2"
    assert RatPoly([1, 3]).format_common_denominator() == "3*d + 1"


def test_format():
    assert RatPoly([1, 3]).format() == "3*d + 1"
    assert RatPoly([-7, 9]).format("t") == "9*t - 7"
    assert str(RatPoly([0, Fraction(-5, 2), Fraction(9, 2)])) == "9/2*d^2 - 5/2*d"
    assert RatPoly([2]).format() == "2"


@given(st.lists(fractions, min_size=1, max_size=7))
def test_roundtrip_on_nodes(coeffs):
    p = RatPoly(coeffs)
    nodes = [(d, p.eval(d)) for d in range(len(coeffs))]
    assert lagrange(nodes) == p


@given(st.lists(fractions, min_size=1, max_size=6), st.integers(1, 4))
def test_extra_nodes_leave_fit_unchanged(coeffs, extra):
    p = RatPoly(coeffs)
    nodes = [(d, p.eval(d)) for d in range(len(coeffs) + extra)]
    assert lagrange(nodes) == p


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=8, unique=True))
def test_fit_passes_through_arbitrary_data(xs):
    nodes = [(x, Fraction(x * x - 3, 7)) for x in xs]
    p = lagrange(nodes)
    assert all(p.eval(x) == y for x, y in nodes)
    assert p.degree < len(nodes)
