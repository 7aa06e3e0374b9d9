"""Truncated power series and divided-power (Hurwitz) series."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Any, Iterable, List, Sequence

from ..exceptions import PoleAtOrigin
from ..value_objects import GF, Field, Scalar
from .polynomial import Polynomial
from .rational_function import RationalFunction


class TruncatedSeries:
    """
    Power series modulo ``x**order``.

    Arithmetic never reads past ``order``; binary operations truncate to the
    smaller of the two orders.
    """

    __slots__ = ("poly", "order")

    def __init__(self, poly: Polynomial, order: int) -> None:
        if order < 0:
            raise ValueError("Negative truncation order")
        self.poly = poly.truncate(order)
        self.order = order

    @classmethod
    def from_coefficients(
        cls, field: Field, coefficients: Iterable[Any], order: int | None = None
    ) -> "TruncatedSeries":
        coeffs = list(coefficients)
        return cls(Polynomial(field, coeffs), len(coeffs) if order is None else order)

    @classmethod
    def from_rational_function(cls, value: RationalFunction, order: int) -> "TruncatedSeries":
        """Expansion at 0 of a function regular there."""
        if value.denominator.evaluate(0) == 0:
            raise PoleAtOrigin("Function has a pole at the origin", point=0)
        inverse = cls(value.denominator, order).inverse()
        return cls(value.numerator, order) * inverse

    @classmethod
    def one(cls, field: Field, order: int) -> "TruncatedSeries":
        return cls(Polynomial(field, [1]), order)

    @property
    def field(self) -> Field:
        return self.poly.field

    # -- coefficients ---------------------------------------------------

    @property
    def coefficients(self) -> List[Scalar]:
        coeffs = list(self.poly.coefficients)
        return coeffs + [self.field.zero] * (self.order - len(coeffs))

    def python_coefficients(self) -> list[Fraction | int]:
        return [self.field.to_python(c) for c in self.coefficients]

    def __getitem__(self, k: int) -> Scalar:
        if not 0 <= k < self.order:
            raise IndexError(f"Coefficient {k} outside truncation {self.order}")
        return self.poly.coefficient(k)

    def __len__(self) -> int:
        return self.order

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    # -- arithmetic -----------------------------------------------------

    def _order_with(self, other: "TruncatedSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return TruncatedSeries(self.poly + other.poly, self._order_with(other))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return TruncatedSeries(self.poly - other.poly, self._order_with(other))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-self.poly, self.order)

    def __mul__(self, other: "TruncatedSeries | Polynomial | int | Fraction") -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            n = self._order_with(other)
            return TruncatedSeries(self.poly.truncate(n) * other.poly.truncate(n), n)
        return TruncatedSeries(self.poly * other, self.order)

    __rmul__ = __mul__

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.poly, min(order, self.order))

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse by Newton iteration."""
        c0 = self.poly.coefficient(0)
        if c0 == 0:
            raise ZeroDivisionError("Series with zero constant term is not invertible")
        field = self.field
        g = Polynomial(field, [field.one / c0])
        precision = 1
        two = Polynomial(field, [2])
        while precision < self.order:
            precision = min(2 * precision, self.order)
            f = self.poly.truncate(precision)
            g = (g * (two - (f * g).truncate(precision))).truncate(precision)
        return TruncatedSeries(g, self.order)

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self * other.inverse()

    def derivative(self) -> "TruncatedSeries":
        return TruncatedSeries(self.poly.derivative(), max(self.order - 1, 0))

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """``self(inner(x))`` for ``inner`` without constant term."""
        if inner.order and inner[0] != 0:
            raise ValueError("Inner series must have zero constant term")
        n = self._order_with(inner)
        result = TruncatedSeries(Polynomial(self.field), n)
        for c in reversed(self.coefficients[:n]):
            result = result * inner + TruncatedSeries(Polynomial(self.field, [c]), n)
        return result

    def evaluate_polynomial_at(self, poly_in_y: Sequence[Polynomial]) -> "TruncatedSeries":
        """``sum_j poly_in_y[j](x) * self**j`` by Horner in ``y``."""
        result = TruncatedSeries(Polynomial(self.field), self.order)
        for coeff in reversed(poly_in_y):
            result = result * self + TruncatedSeries(coeff, self.order)
        return result

    def reduce_mod(self, p: int) -> "TruncatedSeries":
        return TruncatedSeries(self.poly.reduce_mod(p), self.order)

    # -- comparison and printing ----------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.poly == other.poly

    def __hash__(self) -> int:
        return hash((self.poly, self.order))

    def __str__(self) -> str:
        return f"{self.poly} + O(x^{self.order})"

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.field}, {self})"


class HurwitzSeries:
    """
    Divided-power series ``sum a_k * gamma_k`` over GF(p), truncated at ``order``.

    ``gamma_k`` stands for ``x**k / k!``: ``gamma_m * gamma_n =
    binom(m + n, m) * gamma_{m+n}`` and the derivation maps ``gamma_k`` to
    ``gamma_{k-1}``.
    """

    __slots__ = ("prime", "coefficients", "order")

    def __init__(self, prime: int, coefficients: Iterable[int], order: int | None = None) -> None:
        coeffs = [int(c) % prime for c in coefficients]
        order = len(coeffs) if order is None else order
        coeffs = (coeffs + [0] * order)[:order]
        self.prime = prime
        self.coefficients: tuple[int, ...] = tuple(coeffs)
        self.order = order

    @classmethod
    def gamma(cls, prime: int, k: int, order: int) -> "HurwitzSeries":
        return cls(prime, [1 if i == k else 0 for i in range(order)], order)

    @classmethod
    def from_power_series(cls, series: TruncatedSeries) -> "HurwitzSeries":
        """Image of an ordinary series: ``x**k = k! * gamma_k``."""
        p = series.field.characteristic
        return cls(p, [int(c) * factorial(k) for k, c in enumerate(series.coefficients)], series.order)

    def to_power_series(self) -> TruncatedSeries:
        """Ordinary series from the first ``min(order, p)`` terms."""
        p = self.prime
        n = min(self.order, p)
        field = GF(p)
        coeffs = [field.scalar(self.coefficients[k]) / field.scalar(factorial(k)) for k in range(n)]
        return TruncatedSeries.from_coefficients(field, coeffs, n)

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k]

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def __add__(self, other: "HurwitzSeries") -> "HurwitzSeries":
        n = min(self.order, other.order)
        return HurwitzSeries(self.prime, [a + b for a, b in zip(self.coefficients[:n], other.coefficients[:n])], n)

    def __neg__(self) -> "HurwitzSeries":
        return HurwitzSeries(self.prime, [-a for a in self.coefficients], self.order)

    def __sub__(self, other: "HurwitzSeries") -> "HurwitzSeries":
        return self + (-other)

    def __mul__(self, other: "HurwitzSeries | int") -> "HurwitzSeries":
        if isinstance(other, int):
            return HurwitzSeries(self.prime, [a * other for a in self.coefficients], self.order)
        p = self.prime
        n = min(self.order, other.order)
        a, b = self.coefficients, other.coefficients
        out = [0] * n
        for m in range(n):
            if not a[m]:
                continue
            for k in range(n - m):
                if b[k]:
                    out[m + k] = (out[m + k] + comb(m + k, m) * a[m] * b[k]) % p
        return HurwitzSeries(p, out, n)

    __rmul__ = __mul__

    def derivative(self, times: int = 1) -> "HurwitzSeries":
        return HurwitzSeries(self.prime, self.coefficients[times:], max(self.order - times, 0))

    def truncate(self, order: int) -> "HurwitzSeries":
        return HurwitzSeries(self.prime, self.coefficients[:order], min(order, self.order))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HurwitzSeries):
            return NotImplemented
        return (self.prime, self.order, self.coefficients) == (other.prime, other.order, other.coefficients)

    def __hash__(self) -> int:
        return hash((self.prime, self.order, self.coefficients))

    def __repr__(self) -> str:
        terms = " + ".join(f"{a}*g{k}" for k, a in enumerate(self.coefficients) if a) or "0"
        return f"HurwitzSeries(p={self.prime}, {terms} + O(g{self.order}))"
