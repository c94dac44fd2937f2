from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tensordirac.scalars import I, ONE, ZERO, ComplexRational, as_scalar

fractions = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 1000)
scalars = st.builds(ComplexRational, fractions, fractions)


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    if b:
        assert (a / b) * b == a


@given(scalars)
def test_conjugation_is_an_involution(a):
    assert a.conjugate().conjugate() == a
    assert (a * a.conjugate()).is_real()
    assert (a * a.conjugate()).re == a.abs2()


@given(scalars)
def test_text_round_trip(a):
    assert ComplexRational.parse(str(a)) == a


@pytest.mark.parametrize(
    "text, re, im",
    [
        ("3", 3, 0),
        ("-3/4", Fraction(-3, 4), 0),
        ("1/2+3/4*i", Fraction(1, 2), Fraction(3, 4)),
        ("1/2-3/4*i", Fraction(1, 2), Fraction(-3, 4)),
        ("-1/2-3/4*i", Fraction(-1, 2), Fraction(-3, 4)),
        ("i", 0, 1),
        ("-i", 0, -1),
        ("2*i", 0, 2),
        ("0+1*i", 0, 1),
        (" 5/10 ", Fraction(1, 2), 0),
    ],
)
def test_parse(text, re, im):
    z = ComplexRational.parse(text)
    assert (z.re, z.im) == (re, im)


@pytest.mark.parametrize("text", ["", "abc", "1/0", "1/2+x*i", "i*i", "nan"])
def test_parse_rejects_garbage(text):
    with pytest.raises((ValueError, ZeroDivisionError)):
        ComplexRational.parse(text)


def test_canonical_text_is_reduced_with_explicit_signs():
    assert str(ComplexRational(Fraction(2, 4), Fraction(-6, 8))) == "1/2-3/4*i"
    assert str(ComplexRational(0, 1)) == "0+1*i"
    assert str(ComplexRational(-7)) == "-7"


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        ComplexRational(0.5)
    with pytest.raises(TypeError):
        as_scalar(0.5)
    assert ONE.__mul__(0.5) is NotImplemented


def test_immutable():
    with pytest.raises(AttributeError):
        I.re = Fraction(2)


def test_equality_with_plain_numbers_and_hash():
    assert ComplexRational(3) == 3
    assert ComplexRational(Fraction(1, 2)) == Fraction(1, 2)
    assert hash(ComplexRational(3)) == hash(3)
    assert I * I == -1
