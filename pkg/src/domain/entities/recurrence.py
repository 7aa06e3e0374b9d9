"""Linear recurrences with polynomial coefficients."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Sequence, Tuple

from ..exceptions import ValidationError
from ..value_objects import QQ
from .polynomial import Polynomial, format_polynomial


@dataclass(frozen=True)
class PRecurrence:
    """
    ``sum_{t=0}^{s} p_t(k) * u(k + t) = 0`` for every ``k >= offset``.

    Terms with negative index are read as zero, so an offset below zero lets
    the relation fix early terms from fewer initial values.
    """

    coefficients: Tuple[Polynomial, ...]
    offset: int = 0
    initial_values: Tuple[Fraction, ...] = field(default=())

    def __post_init__(self) -> None:
        coeffs = tuple(self.coefficients)
        if not coeffs or coeffs[-1].is_zero():
            raise ValidationError("Leading recurrence coefficient is identically zero")
        if any(c.field != QQ for c in coeffs):
            raise ValidationError("Recurrence coefficients must be over QQ")
        object.__setattr__(self, "coefficients", coeffs)
        object.__setattr__(self, "initial_values", tuple(Fraction(v) for v in self.initial_values))

    @classmethod
    def from_lists(
        cls,
        coefficients: Sequence[Sequence[Any]],
        offset: int = 0,
        initial_values: Iterable[Any] = (),
    ) -> "PRecurrence":
        """Coefficient polynomials given as lists in ``k``, lowest degree first."""
        return cls(
            tuple(Polynomial(QQ, c) for c in coefficients),
            offset,
            tuple(Fraction(v) for v in initial_values),
        )

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> Polynomial:
        return self.coefficients[-1]

    def with_initial_values(self, values: Iterable[Any]) -> "PRecurrence":
        return PRecurrence(self.coefficients, self.offset, tuple(Fraction(v) for v in values))

    def singular_indices(self, upto: int) -> list[int]:
        """Indices ``offset <= k < upto`` where the leading coefficient vanishes."""
        return [k for k in range(self.offset, upto) if self.leading.evaluate(k) == 0]

    def __str__(self) -> str:
        terms = []
        for t, c in enumerate(self.coefficients):
            if c.is_zero():
                continue
            index = "k" if t == 0 else f"k+{t}"
            terms.append(f"({format_polynomial(c.python_coefficients(), 'k')})*u({index})")
        return " + ".join(terms) + " = 0"
