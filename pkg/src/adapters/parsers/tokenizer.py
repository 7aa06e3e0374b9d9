"""Lexer for operator and rational-function expressions."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List

from ...domain.exceptions import ParseError


class TokenKind(str, Enum):
    INTEGER = "integer"
    NAME = "name"
    PLUS = "+"
    MINUS = "-"
    STAR = "*"
    SLASH = "/"
    CARET = "^"
    LPAREN = "("
    RPAREN = ")"
    END = "end of input"


_PUNCTUATION = {
    "+": TokenKind.PLUS,
    "-": TokenKind.MINUS,
    "*": TokenKind.STAR,
    "/": TokenKind.SLASH,
    "^": TokenKind.CARET,
    "(": TokenKind.LPAREN,
    ")": TokenKind.RPAREN,
}


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    position: int


def tokenize(text: str, names: Iterable[str]) -> List[Token]:
    """
    Split ``text`` into tokens.

    Args:
        text: Expression source
        names: Identifiers accepted as variables or symbols

    Raises:
        ParseError: On an unknown character or identifier
    """
    allowed = set(names)
    tokens: List[Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _PUNCTUATION:
            tokens.append(Token(_PUNCTUATION[ch], ch, i))
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            tokens.append(Token(TokenKind.INTEGER, text[start:i], start))
            continue
        if ch.isalpha():
            start = i
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
            word = text[start:i]
            if word not in allowed:
                raise ParseError(
                    f"Unknown identifier '{word}' at position {start}",
                    text=text, position=start, expected=allowed,
                )
            tokens.append(Token(TokenKind.NAME, word, start))
            continue
        raise ParseError(
            f"Unexpected character '{ch}' at position {i}", text=text, position=i
        )
    tokens.append(Token(TokenKind.END, "", n))
    return tokens
