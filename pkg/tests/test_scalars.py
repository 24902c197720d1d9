from fractions import Fraction

import pytest

from wickalg import Scalar


def test_construction_and_equality():
    assert Scalar(1) == 1
    assert Scalar(Fraction(1, 2)) == Fraction(1, 2)
    assert Scalar(1, 2) != Scalar(1)
    assert Scalar(0) == 0
    assert not Scalar(0)
    assert Scalar(0, 1)


def test_field_arithmetic():
    a = Scalar(Fraction(1, 2), Fraction(1, 3))
    b = Scalar(Fraction(-2, 5), Fraction(1, 7))
    assert a + b - b == a
    assert (a * b) / b == a
    assert a * (b + 1) == a * b + a
    assert -(-a) == a
    assert 2 * a == a + a
    assert a / a == 1


def test_complex_multiplication():
    i = Scalar(0, 1)
    assert i * i == -1
    assert (Scalar(1) + i) * (Scalar(1) - i) == 2
    assert i.conjugate() == -i


def test_power():
    a = Scalar(Fraction(2, 3), Fraction(1, 5))
    assert a**0 == 1
    assert a**3 == a * a * a
    with pytest.raises(ValueError):
        a ** (-1)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Scalar(1) / Scalar(0)


@pytest.mark.parametrize(
    "text,value",
    [
        ("3", Scalar(3)),
        ("-3", Scalar(-3)),
        ("1/2", Scalar(Fraction(1, 2))),
        ("-1/2", Scalar(Fraction(-1, 2))),
        ("1/2+3/4i", Scalar(Fraction(1, 2), Fraction(3, 4))),
        ("1/2-3/4i", Scalar(Fraction(1, 2), Fraction(-3, 4))),
        ("0+1i", Scalar(0, 1)),
        (" 2 + 1/3 i ", Scalar(2, Fraction(1, 3))),
    ],
)
def test_parse(text, value):
    assert Scalar.parse(text) == value


@pytest.mark.parametrize("text", ["", "i", "1/2i", "1+2", "1+-2i", "x"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        Scalar.parse(text)


def test_str_roundtrip(rng):
    from conftest import rand_scalar

    for _ in range(200):
        s = rand_scalar(rng)
        assert Scalar.parse(str(s)) == s
