"""Expression trees produced by the parser."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Tuple


class NodeKind(str, Enum):
    INTEGER = "integer"
    VARIABLE = "variable"
    DX = "dx"
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"
    POW = "pow"
    NEGATE = "negate"


@dataclass(frozen=True)
class ExprNode:
    """
    One node of an expression tree.

    ``value`` holds the integer for INTEGER and POW (the exponent), and the
    name for VARIABLE.
    """

    kind: NodeKind
    children: Tuple["ExprNode", ...] = ()
    value: int | str | None = None
    position: int = field(default=0, compare=False)
    depth: int = field(default=1, init=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "depth", 1 + max((c.depth for c in self.children), default=0))

    def contains_dx(self) -> bool:
        if self.kind is NodeKind.DX:
            return True
        return any(child.contains_dx() for child in self.children)

    def variables(self) -> set[str]:
        if self.kind is NodeKind.VARIABLE:
            return {str(self.value)}
        out: set[str] = set()
        for child in self.children:
            out |= child.variables()
        return out
