"""Linear differential operators with rational-function coefficients."""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from typing import Any, Iterable, Sequence, Tuple, Union

from ..value_objects import QQ, Field
from .polynomial import Polynomial
from .rational_function import RationalFunction


Payload = Tuple[int, Tuple[Tuple[Tuple[str, ...], Tuple[str, ...]], ...]]


class DiffOp:
    """
    ``sum a_i(x) * Dx^i`` over QQ(x) or GF(p)(x).

    ``coefficients[i]`` multiplies ``Dx^i``; trailing zero coefficients are
    dropped so the last entry is the leading coefficient.
    """

    __slots__ = ("field", "coefficients")

    def __init__(self, field: Field, coefficients: Iterable[Any] = ()) -> None:
        coeffs = [RationalFunction.coerce(field, c) for c in coefficients]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.field = field
        self.coefficients: Tuple[RationalFunction, ...] = tuple(coeffs)

    @classmethod
    def dx(cls, field: Field = QQ, power: int = 1) -> "DiffOp":
        return cls(field, [0] * power + [1])

    @classmethod
    def function(cls, value: RationalFunction) -> "DiffOp":
        return cls(value.field, [value])

    @classmethod
    def from_polynomials(cls, field: Field, coefficients: Sequence[Sequence[Any]]) -> "DiffOp":
        """Build from coefficient lists, one list (lowest degree first) per power of Dx."""
        return cls(field, [Polynomial(field, c) for c in coefficients])

    # -- inspection -----------------------------------------------------

    @property
    def order(self) -> int:
        """Order in Dx; ``-1`` for the zero operator."""
        return len(self.coefficients) - 1

    degree = order

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, i: int) -> RationalFunction:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return RationalFunction.zero(self.field)

    @property
    def leading_coefficient(self) -> RationalFunction:
        return self.coefficient(self.order)

    def is_monic(self) -> bool:
        return not self.is_zero() and self.leading_coefficient == 1

    def common_denominator(self) -> Polynomial:
        """Monic lcm of the coefficient denominators."""
        def lcm(a: Polynomial, b: Polynomial) -> Polynomial:
            return (a * b).exact_div(a.gcd(b))

        one = Polynomial(self.field, [1])
        return reduce(lcm, (c.denominator for c in self.coefficients), one)

    def polynomial_coefficients(self) -> list[Polynomial]:
        """Coefficients after left multiplication by the common denominator."""
        f = self.common_denominator()
        return [c.numerator * f.exact_div(c.denominator) for c in self.coefficients]

    def has_polynomial_coefficients(self) -> bool:
        return all(c.is_polynomial() for c in self.coefficients)

    # -- additive structure and left scaling -----------------------------

    def __add__(self, other: "DiffOp") -> "DiffOp":
        n = max(len(self.coefficients), len(other.coefficients))
        return DiffOp(self.field, [self.coefficient(i) + other.coefficient(i) for i in range(n)])

    def __neg__(self) -> "DiffOp":
        return DiffOp(self.field, [-c for c in self.coefficients])

    def __sub__(self, other: "DiffOp") -> "DiffOp":
        return self + (-other)

    def left_scale(self, factor: Union[RationalFunction, Polynomial, int, Fraction]) -> "DiffOp":
        """``factor * self`` (multiplication on the left commutes with Dx^i)."""
        r = RationalFunction.coerce(self.field, factor)
        return DiffOp(self.field, [r * c for c in self.coefficients])

    def map_coefficients(self, fn: Any, field: Field | None = None) -> "DiffOp":
        return DiffOp(field or self.field, [fn(c) for c in self.coefficients])

    # -- transport ------------------------------------------------------

    def to_payload(self) -> Payload:
        """Picklable plain-data form (coefficient strings) for worker processes."""
        return (
            self.field.characteristic,
            tuple(
                (
                    tuple(str(c) for c in rf.numerator.python_coefficients()),
                    tuple(str(c) for c in rf.denominator.python_coefficients()),
                )
                for rf in self.coefficients
            ),
        )

    @classmethod
    def from_payload(cls, payload: Payload) -> "DiffOp":
        characteristic, coeffs = payload
        field = Field(characteristic)
        return cls(
            field,
            [
                RationalFunction(Polynomial(field, num), Polynomial(field, den))
                for num, den in coeffs
            ],
        )

    # -- comparison and printing ----------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self.field == other.field and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash((self.field.characteristic, self.coefficients))

    def __str__(self) -> str:
        terms = []
        for i in range(self.order, -1, -1):
            c = self.coefficients[i]
            if c.is_zero():
                continue
            dx = "" if i == 0 else ("Dx" if i == 1 else f"Dx^{i}")
            if i and c == 1:
                terms.append(dx)
                continue
            text = str(c)
            coeff = text if text.isdigit() else f"({text})"
            terms.append(f"{coeff}*{dx}" if dx else coeff)
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"DiffOp({self.field}, {self})"
