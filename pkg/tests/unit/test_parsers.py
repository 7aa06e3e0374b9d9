"""
Unit tests for the expression tokenizer, parser and normalizers.
"""

import pytest

from src.adapters.parsers import (
    NodeKind,
    TokenKind,
    parse_bivariate,
    parse_expression,
    parse_multivariate_fraction,
    parse_operator,
    parse_polynomial,
    parse_rational_function,
    tokenize,
)
from src.domain.entities import DiffOp, Polynomial, RationalFunction
from src.domain.exceptions import DxInDenominator, NonpolynomialExponent, ParseError
from src.domain.value_objects import QQ

from ..conftest import CATALAN


@pytest.mark.unit
class TestTokenizer:
    """Lexing of expression text."""

    def test_kinds_and_positions(self):
        tokens = tokenize("12*x^2", {"x"})
        assert [t.kind for t in tokens] == [
            TokenKind.INTEGER,
            TokenKind.STAR,
            TokenKind.NAME,
            TokenKind.CARET,
            TokenKind.INTEGER,
            TokenKind.END,
        ]
        assert tokens[2].position == 3
        assert tokens[-1].position == 6

    def test_unknown_identifier(self):
        with pytest.raises(ParseError) as exc_info:
            tokenize("y*Dx", {"x", "Dx"})
        assert exc_info.value.position == 0
        assert exc_info.value.details["expected"] == ["Dx", "x"]

    def test_unexpected_character(self):
        with pytest.raises(ParseError) as exc_info:
            tokenize("x $ 1", {"x"})
        assert exc_info.value.position == 2


@pytest.mark.unit
class TestOperatorParsing:
    """Operators in x and Dx."""

    def test_catalan_prints_back(self, catalan):
        assert str(catalan) == "(4*x^2 - x)*Dx^2 + (10*x - 2)*Dx + 2"
        assert parse_operator(str(catalan)) == catalan

    def test_ore_product(self):
        x = RationalFunction.x(QQ)
        assert parse_operator("Dx*x") == DiffOp(QQ, [1, x])

    def test_division_on_the_right(self):
        x = RationalFunction.x(QQ)
        assert parse_operator("Dx/x") == DiffOp(QQ, [-1 / (x * x), 1 / x])

    def test_rational_coefficients(self):
        op = parse_operator("Dx - 1/(x^2+1)")
        assert op.order == 1
        assert op.coefficient(0) == parse_rational_function("-1/(x^2+1)")

    def test_negation_and_whitespace(self):
        assert parse_operator("  -x * Dx ") == parse_operator("-(x*Dx)")

    def test_dx_power(self):
        assert parse_operator("Dx^3") == DiffOp.dx(QQ, 3)

    def test_same_operator_different_spelling(self):
        assert parse_operator(CATALAN) == parse_operator("x*(4*x-1)*Dx^2 + 2*(5*x-1)*Dx + 2")


@pytest.mark.unit
class TestParseErrors:
    """Malformed input reports a position."""

    def test_trailing_operator(self):
        with pytest.raises(ParseError) as exc_info:
            parse_operator("x +")
        assert exc_info.value.position == 3
        assert exc_info.value.exit_code == 2

    def test_implicit_multiplication(self):
        with pytest.raises(ParseError) as exc_info:
            parse_operator("2x")
        assert exc_info.value.position == 1

    def test_dx_in_denominator(self):
        with pytest.raises(DxInDenominator) as exc_info:
            parse_operator("1/Dx")
        assert exc_info.value.position == 2

    @pytest.mark.parametrize("text", ["x^(2)", "x^-1", "Dx^x"])
    def test_nonpolynomial_exponent(self, text):
        with pytest.raises(NonpolynomialExponent):
            parse_operator(text)

    def test_power_of_compound_operator(self):
        with pytest.raises(ParseError, match="Only Dx"):
            parse_operator("(x*Dx)^2")

    def test_empty(self):
        with pytest.raises(ParseError, match="Empty"):
            parse_operator("   ")

    def test_division_by_zero(self):
        with pytest.raises(ParseError, match="Division by zero"):
            parse_operator("Dx/(x-x)")

    def test_unclosed_parenthesis(self):
        with pytest.raises(ParseError) as exc_info:
            parse_operator("(x+1")
        assert exc_info.value.details["expected"] == [")"]

    def test_deep_parentheses(self):
        text = "(" * 600 + "x" + ")" * 600
        with pytest.raises(ParseError, match="Nesting") as exc_info:
            parse_operator(text)
        assert exc_info.value.position == 64

    def test_long_unary_minus_chain(self):
        with pytest.raises(ParseError, match="Nesting") as exc_info:
            parse_operator("-" * 3000 + "x")
        assert exc_info.value.position == 64

    def test_very_long_sum(self):
        with pytest.raises(ParseError, match="deeper") as exc_info:
            parse_expression("+".join(["x"] * 1000))
        assert exc_info.value.position == 511

    def test_moderate_nesting_still_parses(self):
        text = "(" * 40 + "x" + ")" * 40 + "*Dx + " + " + ".join(["x"] * 100)
        assert parse_operator(text).order == 1


@pytest.mark.unit
class TestOtherParsers:
    """Rational functions, polynomials and several variables."""

    def test_rational_function_rejects_dx(self):
        with pytest.raises(ParseError, match="Unknown identifier"):
            parse_rational_function("Dx")

    def test_polynomial(self):
        assert parse_polynomial("k^2+1", "k") == Polynomial(QQ, [1, 0, 1])

    def test_polynomial_rejects_fraction(self):
        with pytest.raises(ParseError):
            parse_polynomial("1/x")

    def test_multivariate_fraction_is_not_reduced(self):
        numerator, denominator = parse_multivariate_fraction("x/x", ("x", "y"))
        assert numerator == denominator
        assert numerator.degree_in(0) == 1

    def test_bivariate(self):
        p = parse_bivariate("x*y^2 - y + 1")
        assert p.degree_y == 2
        assert p.coefficients[2] == Polynomial.x()

    def test_expression_tree(self):
        tree = parse_expression("x*y + z", ("x", "y", "z"), allow_dx=False)
        assert tree.kind is NodeKind.ADD
        assert tree.variables() == {"x", "y", "z"}
        assert not tree.contains_dx()
