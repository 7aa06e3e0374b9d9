"""
Recursive-descent parser.

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := base ('^' uint)?
    base   := '(' expr ')' | variable | 'Dx' | uint | '-' factor

Multiplication is always explicit. Division by an expression containing
``Dx`` is rejected, and ``Dx`` may only be raised to a power on its own.
Parenthesis and unary-minus nesting and the depth of the resulting tree
are bounded so that hostile input fails with a ParseError.
"""

from __future__ import annotations

from typing import Iterable, List

from ...domain.exceptions import DxInDenominator, NonpolynomialExponent, ParseError
from .syntax_tree import ExprNode, NodeKind
from .tokenizer import Token, TokenKind, tokenize

DX = "Dx"
MAX_NESTING = 64
MAX_TREE_DEPTH = 256


class ExpressionParser:
    """Parses one expression; instances are single-use."""

    def __init__(self, text: str, variables: Iterable[str] = ("x",), allow_dx: bool = True) -> None:
        self.text = text
        self.variables = tuple(variables)
        self.allow_dx = allow_dx
        names = set(self.variables) | ({DX} if allow_dx else set())
        self.tokens: List[Token] = tokenize(text, names)
        self.index = 0
        self.nesting = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _fail(self, expected: Iterable[str]) -> ParseError:
        token = self.current
        found = token.text or token.kind.value
        return ParseError(
            f"Unexpected '{found}' at position {token.position}",
            text=self.text, position=token.position, expected=expected,
        )

    def _enter(self, token: Token) -> None:
        self.nesting += 1
        if self.nesting > MAX_NESTING:
            raise ParseError(
                f"Nesting deeper than {MAX_NESTING} levels at position {token.position}",
                text=self.text, position=token.position,
            )

    def _node(self, kind: NodeKind, children: tuple, position: int, value=None) -> ExprNode:
        node = ExprNode(kind, children, value=value, position=position)
        if node.depth > MAX_TREE_DEPTH:
            raise ParseError(
                f"Expression deeper than {MAX_TREE_DEPTH} levels at position {position}",
                text=self.text, position=position,
            )
        return node

    def parse(self) -> ExprNode:
        if self.current.kind is TokenKind.END:
            raise ParseError("Empty expression", text=self.text, position=0)
        node = self._expr()
        if self.current.kind is not TokenKind.END:
            raise self._fail(["+", "-", "*", "/", "^", "end of input"])
        return node

    def _expr(self) -> ExprNode:
        node = self._term()
        while self.current.kind in (TokenKind.PLUS, TokenKind.MINUS):
            op = self._advance()
            kind = NodeKind.ADD if op.kind is TokenKind.PLUS else NodeKind.SUB
            node = self._node(kind, (node, self._term()), op.position)
        return node

    def _term(self) -> ExprNode:
        node = self._factor()
        while self.current.kind in (TokenKind.STAR, TokenKind.SLASH):
            op = self._advance()
            right = self._factor()
            if op.kind is TokenKind.SLASH:
                if right.contains_dx():
                    raise DxInDenominator(
                        f"Division by an expression containing Dx at position {right.position}",
                        text=self.text, position=right.position,
                    )
                node = self._node(NodeKind.DIV, (node, right), op.position)
            else:
                node = self._node(NodeKind.MUL, (node, right), op.position)
        return node

    def _factor(self) -> ExprNode:
        base = self._base()
        if self.current.kind is not TokenKind.CARET:
            return base
        caret = self._advance()
        token = self.current
        if token.kind is not TokenKind.INTEGER:
            raise NonpolynomialExponent(
                f"Exponent at position {token.position} must be a nonnegative integer literal",
                text=self.text, position=token.position, expected=["integer"],
            )
        self._advance()
        if base.contains_dx() and base.kind is not NodeKind.DX:
            raise ParseError(
                f"Only Dx itself may be raised to a power (position {caret.position})",
                text=self.text, position=base.position,
            )
        return self._node(NodeKind.POW, (base,), caret.position, value=int(token.text))

    def _base(self) -> ExprNode:
        token = self.current
        if token.kind is TokenKind.LPAREN:
            self._enter(token)
            self._advance()
            node = self._expr()
            if self.current.kind is not TokenKind.RPAREN:
                raise self._fail([")"])
            self._advance()
            self.nesting -= 1
            return node
        if token.kind is TokenKind.MINUS:
            self._enter(token)
            self._advance()
            node = self._node(NodeKind.NEGATE, (self._factor(),), token.position)
            self.nesting -= 1
            return node
        if token.kind is TokenKind.INTEGER:
            self._advance()
            return ExprNode(NodeKind.INTEGER, value=int(token.text), position=token.position)
        if token.kind is TokenKind.NAME:
            self._advance()
            if token.text == DX:
                return ExprNode(NodeKind.DX, position=token.position)
            return ExprNode(NodeKind.VARIABLE, value=token.text, position=token.position)
        expected = ["(", "-", "integer", *self.variables] + ([DX] if self.allow_dx else [])
        raise self._fail(expected)


def parse_expression(text: str, variables: Iterable[str] = ("x",), allow_dx: bool = True) -> ExprNode:
    """Parse ``text`` into an expression tree."""
    return ExpressionParser(text, variables, allow_dx).parse()
