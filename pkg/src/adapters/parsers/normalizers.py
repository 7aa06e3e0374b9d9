"""Turn expression trees into domain objects."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Tuple

from ...domain.entities import (
    BivariatePolynomial,
    DiffOp,
    MultivariatePolynomial,
    Polynomial,
    RationalFunction,
)
from ...domain.exceptions import ParseError
from ...domain.services.ore import ore_mul
from ...domain.value_objects import QQ
from .syntax_tree import ExprNode, NodeKind


def _zero_division(node: ExprNode) -> ParseError:
    return ParseError(f"Division by zero at position {node.position}", position=node.position)


def to_operator(node: ExprNode) -> DiffOp:
    """
    Normalize to ``sum a_i(x) Dx^i`` over QQ.

    Products are Ore products, so ``Dx*x`` becomes ``x*Dx + 1``; ``a/b``
    is ``a`` times the inverse of the rational function ``b`` on the right.
    """
    kind = node.kind
    if kind is NodeKind.DX:
        return DiffOp.dx(QQ)
    if kind in (NodeKind.INTEGER, NodeKind.VARIABLE):
        return DiffOp.function(to_rational_function(node))
    if kind is NodeKind.NEGATE:
        return -to_operator(node.children[0])
    left = to_operator(node.children[0])
    if kind is NodeKind.POW:
        base = node.children[0]
        if base.kind is NodeKind.DX:
            return DiffOp.dx(QQ, int(node.value))
        return DiffOp.function(to_rational_function(node))
    if kind is NodeKind.DIV:
        divisor = to_rational_function(node.children[1])
        if divisor.is_zero():
            raise _zero_division(node.children[1])
        return ore_mul(left, DiffOp.function(divisor.inverse()))
    right = to_operator(node.children[1])
    if kind is NodeKind.ADD:
        return left + right
    if kind is NodeKind.SUB:
        return left - right
    return ore_mul(left, right)


def to_rational_function(node: ExprNode) -> RationalFunction:
    """Evaluate a ``Dx``-free tree in QQ(x)."""
    kind = node.kind
    if kind is NodeKind.INTEGER:
        return RationalFunction.constant(QQ, int(node.value))
    if kind is NodeKind.VARIABLE:
        return RationalFunction.x(QQ)
    if kind is NodeKind.DX:
        raise ParseError(
            f"Dx is not allowed here (position {node.position})", position=node.position
        )
    if kind is NodeKind.NEGATE:
        return -to_rational_function(node.children[0])
    if kind is NodeKind.POW:
        return to_rational_function(node.children[0]) ** int(node.value)
    left = to_rational_function(node.children[0])
    right = to_rational_function(node.children[1])
    if kind is NodeKind.ADD:
        return left + right
    if kind is NodeKind.SUB:
        return left - right
    if kind is NodeKind.MUL:
        return left * right
    if right.is_zero():
        raise _zero_division(node.children[1])
    return left / right


def to_polynomial(node: ExprNode) -> Polynomial:
    value = to_rational_function(node)
    if not value.is_polynomial():
        raise ParseError("Expected a polynomial, got a proper fraction", position=node.position)
    return value.numerator


MultivariateFraction = Tuple[MultivariatePolynomial, MultivariatePolynomial]


def to_multivariate_fraction(node: ExprNode, variables: Sequence[str]) -> MultivariateFraction:
    """
    Evaluate in QQ(variables) as an unreduced ``(numerator, denominator)`` pair.
    """
    nvars = len(variables)
    kind = node.kind
    one = MultivariatePolynomial.constant(nvars, 1)
    if kind is NodeKind.INTEGER:
        return MultivariatePolynomial.constant(nvars, int(node.value)), one
    if kind is NodeKind.VARIABLE:
        return MultivariatePolynomial.variable(nvars, list(variables).index(str(node.value))), one
    if kind is NodeKind.DX:
        raise ParseError(
            f"Dx is not allowed here (position {node.position})", position=node.position
        )
    if kind is NodeKind.NEGATE:
        num, den = to_multivariate_fraction(node.children[0], variables)
        return -num, den
    if kind is NodeKind.POW:
        num, den = to_multivariate_fraction(node.children[0], variables)
        e = int(node.value)
        return num ** e, den ** e
    a, b = to_multivariate_fraction(node.children[0], variables)
    c, d = to_multivariate_fraction(node.children[1], variables)
    if kind is NodeKind.ADD:
        return a * d + c * b, b * d
    if kind is NodeKind.SUB:
        return a * d - c * b, b * d
    if kind is NodeKind.MUL:
        return a * c, b * d
    if c.is_zero():
        raise _zero_division(node.children[1])
    return a * d, b * c


def to_multivariate_polynomial(node: ExprNode, variables: Sequence[str]) -> MultivariatePolynomial:
    num, den = to_multivariate_fraction(node, variables)
    if len(den.terms) != 1 or den.constant_term() == 0:
        raise ParseError("Expected a polynomial", position=node.position)
    scale = Fraction(1) / den.constant_term()
    return num * MultivariatePolynomial.constant(len(variables), scale)


def to_bivariate(node: ExprNode, variables: Sequence[str] = ("x", "y")) -> BivariatePolynomial:
    """Polynomial in ``(x, y)``; ``variables`` names them in that order."""
    return BivariatePolynomial.from_multivariate(to_multivariate_polynomial(node, variables))
