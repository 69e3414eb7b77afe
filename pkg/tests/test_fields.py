from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopfcyc.fields import (RATIONALS, ExtElement, FieldError, FieldMismatch, FieldSpec, ScalarParseError,
                            cyclotomic_field, cyclotomic_polynomial, div, format_scalar, inv, is_irreducible,
                            parse_scalar, primitive_root)

K3 = cyclotomic_field(3)
K5 = cyclotomic_field(5)

rats = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 1000)


def ext(fld):
    return st.lists(rats, min_size=fld.degree, max_size=fld.degree).map(fld.element)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_small_cyclotomic_is_rationals():
    assert cyclotomic_field(2) == RATIONALS
    assert primitive_root(RATIONALS, 2) == -1


def test_zeta3_relation():
    z = K3.gen
    assert z * z + z + 1 == 0
    assert z ** 3 == 1
    assert z ** -1 == z * z
    assert primitive_root(K3, 3) == z


def test_canonical_form_collapses_to_rationals():
    z = K3.gen
    x = z - z + Fraction(1, 2)
    assert x == Fraction(1, 2) and not isinstance(x, ExtElement)
    assert isinstance(z * z, ExtElement)


def test_division_never_floats():
    assert div(1, 3) == Fraction(1, 3)
    assert isinstance(inv(2), Fraction)
    with pytest.raises(TypeError):
        RATIONALS.coerce(0.5)


@pytest.mark.parametrize("text,value", [("3", 3), ("-2/4", Fraction(-1, 2)), ("  7/1 ", 7)])
def test_parse_rationals(text, value):
    assert parse_scalar(text) == value


def test_parse_and_format_extension():
    x = parse_scalar("1/2*z^2 - z + 1", K3)
    # z^2 = -z - 1
    assert x == K3.element([Fraction(1, 2), Fraction(-3, 2)])
    assert parse_scalar(format_scalar(x, K3), K3) == x
    assert format_scalar(parse_scalar("2/4")) == "1/2"


@pytest.mark.parametrize("bad", ["", "1/0", "z", "2z", "1 2", "3*", "1/2*w", "^2"])
def test_parse_errors(bad):
    with pytest.raises(ScalarParseError):
        parse_scalar(bad, RATIONALS if "w" in bad or bad == "z" else K3)


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        K3.gen + K5.gen
    with pytest.raises(FieldMismatch):
        K3.coerce(K5.gen)


def test_reducible_modulus_rejected():
    assert not is_irreducible((-1, 0, 1))
    assert is_irreducible((1, 1, 1))
    with pytest.raises(FieldError):
        FieldSpec.extension((-1, 0, 1))
    assert FieldSpec.extension((-2, 0, 1)).irreducibility == "checked"


@given(ext(K3), ext(K3), ext(K3))
def test_field_axioms_k3(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if a != 0:
        assert a * inv(a) == 1
        assert div(b, a) * a == b


@given(ext(K5))
def test_round_trip_k5(a):
    assert parse_scalar(format_scalar(a, K5), K5) == a
    assert K5.coerce(format_scalar(a, K5)) == a
