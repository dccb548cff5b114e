from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fuchsdecomp.errors import DivisionByZero, ParseError
from fuchsdecomp.qfield import (FieldSpec, GaussRational, I, qf_compare, qf_format,
                                qf_parse, qf_sign)

import oracles

K = FieldSpec(2, 3)

rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=50)
elements = st.tuples(rationals, rationals, rationals, rationals).map(lambda c: K(*c))


def test_field_spec_validation():
    with pytest.raises(ValueError):
        FieldSpec(4, 3)
    with pytest.raises(ValueError):
        FieldSpec(2, 2)
    with pytest.raises(ValueError):
        FieldSpec(1, 3)
    assert K.radicands == (2, 3, 6)


def test_basis_products():
    assert K.sqrt_m() * K.sqrt_m() == 2
    assert K.sqrt_m() * K.sqrt_n() == K.sqrt_mn()
    assert K.sqrt_n() * K.sqrt_mn() == 3 * K.sqrt_m()
    assert K.sqrt_mn() * K.sqrt_mn() == 6


def test_coords_are_normalised():
    x = K(Fraction(2, 4), 0, Fraction(-3, 9), 0)
    assert x.coords == (Fraction(1, 2), 0, Fraction(-1, 3), 0)
    assert K(1, 1, 0, 0) - K.sqrt_m() == K.one()


def test_inverse_and_division_by_zero():
    x = K(1, 2, -1, 3)
    assert x * x.inverse() == 1
    assert x / x == 1
    with pytest.raises(DivisionByZero):
        K.zero().inverse()
    with pytest.raises(ZeroDivisionError):
        x / 0


def test_norm_is_rational():
    x = K(3, -1, 2, Fraction(1, 2))
    product = x * x.conj_m() * x.conj_n() * x.conj_m().conj_n()
    assert product.is_rational() and product == K(x.norm())


def test_sign_near_cancellation():
    # 1351/780 is a convergent of sqrt 3
    assert qf_sign(K(Fraction(1351, 780), 0, -1, 0)) == 1
    assert qf_sign(K(Fraction(-1351, 780), 0, 1, 0)) == -1
    assert qf_sign(K(5, 2, -2, -2)) == oracles.numeric_sign((5, 2, -2, -2), K.radicands)
    assert qf_sign(K.zero()) == 0
    assert qf_compare(K.sqrt_n(), K.sqrt_m()) == 1


def test_format_examples():
    assert qf_format(K.zero()) == "0"
    assert qf_format(K(Fraction(1, 2), -1, 0, Fraction(-3, 4))) == "(1/2) - r2 - (3/4)*r6"
    assert qf_format(K(0, 0, -2, 0)) == "-2*r3"
    assert str(K(6, 0, 3, 0)) == "6 + 3*r3"


def test_parse_examples():
    assert qf_parse("(1/2)*r2 + (1/2)*r6", K) == K(0, Fraction(1, 2), 0, Fraction(1, 2))
    assert qf_parse("-(1/2)*r2 + (1/2)*r6", K) == K(0, Fraction(-1, 2), 0, Fraction(1, 2))
    assert qf_parse("6 - 3*r3", K) == K(6, 0, -3, 0)
    assert qf_parse("(-7/3)", K) == K(Fraction(-7, 3))
    assert qf_parse("2/4*r2", K) == K(0, Fraction(1, 2))


@pytest.mark.parametrize("text,pos", [("1 + r5", 4), ("2 *", 3), ("1/0", 2), ("", 0), ("1 2", 2)])
def test_parse_errors_report_position(text, pos):
    with pytest.raises(ParseError) as info:
        qf_parse(text, K)
    assert info.value.position == pos


@given(elements)
def test_format_parse_round_trip(x):
    assert qf_parse(qf_format(x), K) == x


@given(elements, elements, elements)
@settings(max_examples=60)
def test_ring_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == 0


@given(elements)
@settings(max_examples=60)
def test_inverse_property(x):
    if not x.is_zero():
        assert x * x.inverse() == 1


@given(elements)
@settings(max_examples=200)
def test_sign_matches_high_precision(x):
    assert qf_sign(x) == oracles.numeric_sign(x.coords, K.radicands, 100)


@given(elements, elements)
@settings(max_examples=60)
def test_order_is_compatible_with_addition(x, y):
    assert (x < y) == (x + 1 < y + 1)
    assert (x < y) == (qf_sign(y - x) > 0)


def test_gauss_rationals():
    z = GaussRational(3, 4)
    assert z * z.conjugate() == GaussRational(25)
    assert z.norm() == 25
    assert 1 / I == -I
    assert (z / z) == GaussRational(1)
    with pytest.raises(ZeroDivisionError):
        z / GaussRational(0)
