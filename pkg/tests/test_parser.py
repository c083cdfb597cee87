from fractions import Fraction

import pytest

from exceptions import PolynomialParseError
from models.parser import parse_poly, tokenize
from models.polynomial import X, Y, Poly


def test_parses_rational_coefficients():
    p = parse_poly("y^7 - x^8 - 7*x^6*y^2 - 147/8*x^4*y^4")
    assert p.coefficient(4, 4) == Fraction(-147, 8)
    assert p.coefficient(0, 7) == 1


def test_parentheses_and_powers():
    assert parse_poly("(x + y)^2") == X * X + (X * Y).scale(2) + Y * Y
    assert parse_poly("-(x - y)") == Y - X
    assert parse_poly("2^3*x") == X.scale(8)


def test_whitespace_is_insignificant():
    assert parse_poly("  x*y +  1 ") == parse_poly("x*y+1")


def test_canonical_output_reparses():
    for text in ("x^4*y^3 - x^6 + y^5", "-7920*x*y - 24200", "-147/8*x^4*y^4", "0"):
        assert str(parse_poly(text)) == text


def test_tokenize_positions():
    tokens = tokenize("3*x^2")
    assert [t.kind for t in tokens] == ['nat', 'op', 'name', 'op', 'nat', 'end']
    assert tokens[2].position == 2


@pytest.mark.parametrize('text, position, fragment', [
    ("x^-1", 2, "exponent must be a natural number"),
    ("1/0*x", 2, "zero denominator"),
    ("z + 1", 0, "unknown variable"),
    ("3x", 1, "expected an operator"),
    ("(x + y", 6, "expected ')'"),
    ("x + $", 4, "unexpected character"),
    ("x +", 3, "expected a number"),
])
def test_parse_errors_carry_position(text, position, fragment):
    with pytest.raises(PolynomialParseError) as err:
        parse_poly(text)
    assert err.value.position == position
    assert fragment in str(err.value)


def test_parse_error_is_a_value_error():
    with pytest.raises(ValueError):
        parse_poly("x ** 2")


def test_non_string_input():
    with pytest.raises(TypeError):
        parse_poly(Poly.constant(1))
