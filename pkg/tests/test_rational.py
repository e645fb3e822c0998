from fractions import Fraction

import pytest

from circuitlab.rational import (
    format_rational,
    format_vector,
    parse_rational,
    parse_vector,
)


def test_parse_integer_and_fraction():
    assert parse_rational("3") == 3
    assert parse_rational("-7") == -7
    assert parse_rational("1/2") == Fraction(1, 2)
    assert parse_rational("-9/6") == Fraction(-3, 2)


def test_format_is_reduced():
    assert format_rational(Fraction(4, 8)) == "1/2"
    assert format_rational(Fraction(-3, 1)) == "-3"
    assert format_rational(5) == "5"


def test_round_trip():
    for text in ["0", "17", "-4", "22/7", "-1/3"]:
        assert format_rational(parse_rational(text)) == text


def test_vector_round_trip():
    vec = parse_vector(["1", "-1/2", "0"])
    assert vec == (1, Fraction(-1, 2), 0)
    assert format_vector(vec) == ["1", "-1/2", "0"]


def test_bad_input_rejected():
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_rational("1/0")
    with pytest.raises(ValueError):
        parse_rational("abc")
