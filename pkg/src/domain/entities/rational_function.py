"""Rational functions in lowest terms with monic denominator."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Any, Union

from ..exceptions import BadReduction, PoleEvaluation
from ..value_objects import Field, Scalar
from .polynomial import Polynomial


Coercible = Union["RationalFunction", Polynomial, int, Fraction, Scalar]


def integer_normalize(numerator: Polynomial, denominator: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Scale a QQ fraction so both parts have coprime integer coefficients."""
    coeffs = numerator.python_coefficients() + denominator.python_coefficients()
    scale = lcm(*(Fraction(c).denominator for c in coeffs)) if coeffs else 1
    content = gcd(*(int(Fraction(c) * scale) for c in coeffs)) if coeffs else 1
    factor = Fraction(scale, content or 1)
    return numerator.scale(factor), denominator.scale(factor)


class RationalFunction:
    """
    ``numerator / denominator`` over QQ or GF(p).

    The constructor normalizes: gcd(num, den) = 1 and den monic, so equality
    is structural.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(
        self,
        numerator: Polynomial,
        denominator: Polynomial | None = None,
        *,
        normalized: bool = False
    ) -> None:
        field = numerator.field
        if denominator is None:
            denominator = Polynomial(field, [1])
        if denominator.is_zero():
            raise ZeroDivisionError("Rational function with zero denominator")
        if not normalized:
            if numerator.is_zero():
                denominator = Polynomial(field, [1])
            else:
                g = numerator.gcd(denominator)
                if g.degree > 0:
                    numerator = numerator.exact_div(g)
                    denominator = denominator.exact_div(g)
                lc = denominator.leading_coefficient
                if lc != 1:
                    inv = field.one / lc
                    numerator = numerator * inv
                    denominator = denominator * inv
        self.numerator = numerator
        self.denominator = denominator

    # -- constructors ---------------------------------------------------

    @classmethod
    def constant(cls, field: Field, value: Any) -> "RationalFunction":
        return cls(Polynomial.constant(field, value), normalized=True)

    @classmethod
    def zero(cls, field: Field) -> "RationalFunction":
        return cls(Polynomial(field), normalized=True)

    @classmethod
    def one(cls, field: Field) -> "RationalFunction":
        return cls.constant(field, 1)

    @classmethod
    def x(cls, field: Field) -> "RationalFunction":
        return cls(Polynomial.x(field), normalized=True)

    @classmethod
    def coerce(cls, field: Field, value: Coercible) -> "RationalFunction":
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, Polynomial):
            return cls(value, normalized=True)
        return cls.constant(field, value)

    # -- inspection -----------------------------------------------------

    @property
    def field(self) -> Field:
        return self.numerator.field

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def is_polynomial(self) -> bool:
        return self.denominator.degree == 0

    def is_constant(self) -> bool:
        return self.is_polynomial() and self.numerator.degree <= 0

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.numerator.coefficient(0)

    def is_regular_at(self, point: Any) -> bool:
        return self.denominator.evaluate(point) != 0

    def in_frobenius_subfield(self) -> bool:
        """Numerator and denominator are polynomials in ``x**p``."""
        p = self.field.characteristic
        if not p:
            return self.is_constant()
        return all(
            i % p == 0 for part in (self.numerator, self.denominator) for i in part.support()
        )

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other: Coercible) -> "RationalFunction":
        return RationalFunction.coerce(self.field, other)

    def __add__(self, other: Coercible) -> "RationalFunction":
        o = self._coerce(other)
        if o.is_zero():
            return self
        if self.is_zero():
            return o
        if self.denominator == o.denominator:
            return RationalFunction(self.numerator + o.numerator, self.denominator)
        return RationalFunction(
            self.numerator * o.denominator + o.numerator * self.denominator,
            self.denominator * o.denominator,
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.numerator, self.denominator, normalized=True)

    def __sub__(self, other: Coercible) -> "RationalFunction":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Coercible) -> "RationalFunction":
        return self._coerce(other) - self

    def __mul__(self, other: Coercible) -> "RationalFunction":
        o = self._coerce(other)
        if self.is_zero() or o.is_zero():
            return RationalFunction.zero(self.field)
        if o.is_constant():
            c = o.constant_value()
            return RationalFunction(self.numerator * c, self.denominator, normalized=True)
        # cross-cancel before multiplying
        g1 = self.numerator.gcd(o.denominator)
        g2 = o.numerator.gcd(self.denominator)
        num = self.numerator.exact_div(g1) * o.numerator.exact_div(g2)
        den = self.denominator.exact_div(g2) * o.denominator.exact_div(g1)
        return RationalFunction(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("Inverse of zero rational function")
        return RationalFunction(self.denominator, self.numerator)

    def __truediv__(self, other: Coercible) -> "RationalFunction":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other: Coercible) -> "RationalFunction":
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "RationalFunction":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return RationalFunction(self.numerator ** exponent, self.denominator ** exponent, normalized=True)

    def derivative(self) -> "RationalFunction":
        """Quotient rule, result in lowest terms."""
        n, d = self.numerator, self.denominator
        if d.degree == 0:
            return RationalFunction(n.derivative(), normalized=True)
        return RationalFunction(n.derivative() * d - n * d.derivative(), d * d)

    def nth_derivative(self, k: int) -> "RationalFunction":
        result = self
        for _ in range(k):
            result = result.derivative()
        return result

    def evaluate(self, point: Any) -> Scalar:
        den = self.denominator.evaluate(point)
        if den == 0:
            raise PoleEvaluation(point)
        return self.numerator.evaluate(point) / den

    __call__ = evaluate

    def taylor_shift(self, a: Any) -> "RationalFunction":
        """Return ``self(x + a)``."""
        return RationalFunction(self.numerator.taylor_shift(a), self.denominator.taylor_shift(a))

    def reduce_mod(self, p: int) -> "RationalFunction":
        """
        Reduce a QQ rational function modulo ``p``.

        Numerator and denominator are first scaled to coprime integer
        polynomials, so ``(1/2)*x`` reduces to ``3*x`` mod 5.

        Raises:
            BadReduction: a coefficient denominator vanishes or the
                denominator reduces to zero
        """
        num, den = integer_normalize(self.numerator, self.denominator)
        n_p = num.reduce_mod(p)
        d_p = den.reduce_mod(p)
        if d_p.is_zero():
            raise BadReduction(f"Denominator of {self} vanishes mod {p}", prime=p)
        return RationalFunction(n_p, d_p)

    # -- comparison and printing ----------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalFunction):
            return self.numerator == other.numerator and self.denominator == other.denominator
        if isinstance(other, (Polynomial, int, Fraction)):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.numerator, self.denominator))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __str__(self) -> str:
        num = str(self.numerator)
        if self.is_polynomial():
            return num
        den = str(self.denominator)
        if len(self.numerator.support()) > 1:
            num = f"({num})"
        if len(self.denominator.support()) > 1 or self.denominator.leading_coefficient != 1:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self) -> str:
        return f"RationalFunction({self.field}, {self})"
