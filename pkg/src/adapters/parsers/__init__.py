"""
Expression parsing.

Entry points take text and return domain objects; the tree is only exposed
for printing and round-trip checks.
"""

from typing import Sequence

from ...domain.entities import BivariatePolynomial, DiffOp, Polynomial, RationalFunction
from .normalizers import (
    MultivariateFraction,
    to_bivariate,
    to_multivariate_fraction,
    to_operator,
    to_polynomial,
    to_rational_function,
)
from .parser import ExpressionParser, parse_expression
from .syntax_tree import ExprNode, NodeKind
from .tokenizer import Token, TokenKind, tokenize


def parse_operator(text: str) -> DiffOp:
    """Operator in ``x`` and ``Dx`` over QQ."""
    return to_operator(parse_expression(text))


def parse_rational_function(text: str) -> RationalFunction:
    return to_rational_function(parse_expression(text, allow_dx=False))


def parse_polynomial(text: str, variable: str = "x") -> Polynomial:
    """Univariate polynomial; ``variable`` is read as ``x``."""
    return to_polynomial(parse_expression(text, (variable,), allow_dx=False))


def parse_multivariate_fraction(text: str, variables: Sequence[str]) -> MultivariateFraction:
    return to_multivariate_fraction(parse_expression(text, variables, allow_dx=False), variables)


def parse_bivariate(text: str, variables: Sequence[str] = ("x", "y")) -> BivariatePolynomial:
    return to_bivariate(parse_expression(text, variables, allow_dx=False), variables)


__all__ = [
    "ExprNode",
    "NodeKind",
    "ExpressionParser",
    "Token",
    "TokenKind",
    "tokenize",
    "parse_expression",
    "parse_operator",
    "parse_rational_function",
    "parse_polynomial",
    "parse_multivariate_fraction",
    "parse_bivariate",
    "to_operator",
    "to_rational_function",
    "to_polynomial",
    "MultivariateFraction",
]
