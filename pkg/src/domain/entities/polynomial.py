"""
Dense univariate polynomials over QQ and GF(p).

Thin immutable wrapper around ``flint.fmpq_poly`` / ``flint.nmod_poly`` that
remembers its Field, coerces scalars, and prints in the canonical syntax the
expression parser reads back.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable, Sequence, Tuple, Union

from ..exceptions import BadReduction, ValidationError
from ..value_objects import GF, QQ, Field, Scalar


Coercible = Union["Polynomial", int, Fraction, Scalar]


class Polynomial:
    """Immutable polynomial in ``x``; coefficients lowest degree first."""

    __slots__ = ("field", "_raw")

    def __init__(self, field: Field, coefficients: Iterable[Any] = ()) -> None:
        self.field = field
        self._raw = field.raw_poly(field.scalar(c) for c in coefficients)

    @classmethod
    def from_raw(cls, field: Field, raw: Any) -> "Polynomial":
        poly = cls.__new__(cls)
        poly.field = field
        poly._raw = raw
        return poly

    @classmethod
    def x(cls, field: Field = QQ) -> "Polynomial":
        return cls(field, [0, 1])

    @classmethod
    def constant(cls, field: Field, value: Any) -> "Polynomial":
        return cls(field, [value])

    @classmethod
    def monomial(cls, field: Field, degree: int, coefficient: Any = 1) -> "Polynomial":
        return cls(field, [0] * degree + [coefficient])

    # -- inspection -----------------------------------------------------

    @property
    def raw(self) -> Any:
        return self._raw

    @property
    def degree(self) -> int:
        """Degree, ``-1`` for the zero polynomial."""
        return int(self._raw.degree())

    def is_zero(self) -> bool:
        return self.degree < 0

    def is_constant(self) -> bool:
        return self.degree <= 0

    @property
    def coefficients(self) -> Tuple[Scalar, ...]:
        return tuple(self._raw.coeffs())

    def coefficient(self, i: int) -> Scalar:
        coeffs = self._raw.coeffs()
        return coeffs[i] if 0 <= i < len(coeffs) else self.field.zero

    @property
    def leading_coefficient(self) -> Scalar:
        coeffs = self._raw.coeffs()
        return coeffs[-1] if coeffs else self.field.zero

    def python_coefficients(self) -> list[Fraction | int]:
        return [self.field.to_python(c) for c in self._raw.coeffs()]

    def support(self) -> list[int]:
        """Exponents carrying a nonzero coefficient."""
        return [i for i, c in enumerate(self._raw.coeffs()) if c != 0]

    def is_monic(self) -> bool:
        return not self.is_zero() and self.leading_coefficient == 1

    def valuation(self) -> int:
        """Order of vanishing at 0; ``-1`` for the zero polynomial."""
        support = self.support()
        return support[0] if support else -1

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other: Coercible) -> Any:
        if isinstance(other, Polynomial):
            if other.field != self.field:
                raise ValueError(f"Field mismatch: {self.field} vs {other.field}")
            return other._raw
        return self.field.raw_poly([self.field.scalar(other)])

    def _wrap(self, raw: Any) -> "Polynomial":
        return Polynomial.from_raw(self.field, raw)

    def __add__(self, other: Coercible) -> "Polynomial":
        return self._wrap(self._raw + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other: Coercible) -> "Polynomial":
        return self._wrap(self._raw - self._coerce(other))

    def __rsub__(self, other: Coercible) -> "Polynomial":
        return self._wrap(self._coerce(other) - self._raw)

    def __mul__(self, other: Coercible) -> "Polynomial":
        return self._wrap(self._raw * self._coerce(other))

    __rmul__ = __mul__

    def __neg__(self) -> "Polynomial":
        return self._wrap(-self._raw)

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("Negative polynomial power")
        return self._wrap(self._raw ** exponent)

    def __divmod__(self, other: Coercible) -> Tuple["Polynomial", "Polynomial"]:
        divisor = self._coerce(other)
        if divisor.degree() < 0:
            raise ZeroDivisionError("Polynomial division by zero")
        q, r = divmod(self._raw, divisor)
        return self._wrap(q), self._wrap(r)

    def __floordiv__(self, other: Coercible) -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: Coercible) -> "Polynomial":
        return divmod(self, other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError(f"{other} does not divide {self}")
        return q

    def scale(self, scalar: Any) -> "Polynomial":
        return self * self.field.scalar(scalar)

    def derivative(self) -> "Polynomial":
        return self._wrap(self._raw.derivative())

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self * (self.field.one / self.leading_coefficient)

    def gcd(self, other: "Polynomial") -> "Polynomial":
        """Monic gcd; ``gcd(0, 0) = 0``."""
        if other.is_zero():
            return self.monic()
        if self.is_zero():
            return other.monic()
        return self._wrap(self._raw.gcd(other._raw)).monic()

    def xgcd(self, other: "Polynomial") -> Tuple["Polynomial", "Polynomial", "Polynomial"]:
        """Return ``(g, s, t)`` with ``s*self + t*other = g`` and g monic."""
        zero, one = Polynomial(self.field), Polynomial(self.field, [1])
        r0, r1 = self, other
        s0, s1 = one, zero
        t0, t1 = zero, one
        while not r1.is_zero():
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero():
            return r0, s0, t0
        inv = self.field.one / r0.leading_coefficient
        return r0 * inv, s0 * inv, t0 * inv

    def invmod(self, modulus: "Polynomial") -> "Polynomial":
        g, s, _ = self.xgcd(modulus)
        if g.degree != 0:
            raise ZeroDivisionError(f"{self} is not invertible modulo {modulus}")
        return s % modulus

    def powmod(self, exponent: int, modulus: "Polynomial") -> "Polynomial":
        """``self ** exponent mod modulus`` by square and multiply."""
        result = Polynomial(self.field, [1]) % modulus
        base = self % modulus
        while exponent:
            if exponent & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            exponent >>= 1
        return result

    def evaluate(self, point: Any) -> Scalar:
        value = self.field.zero
        at = self.field.scalar(point)
        for c in reversed(self._raw.coeffs()):
            value = value * at + c
        return value

    __call__ = evaluate

    def taylor_shift(self, a: Any) -> "Polynomial":
        """Return ``self(x + a)``."""
        shift = Polynomial(self.field, [a, 1])
        result = Polynomial(self.field)
        for c in reversed(self._raw.coeffs()):
            result = result * shift + c
        return result

    def truncate(self, n: int) -> "Polynomial":
        """Terms of degree below ``n``."""
        coeffs = self._raw.coeffs()
        if len(coeffs) <= n:
            return self
        return Polynomial(self.field, coeffs[:max(n, 0)])

    def shift(self, k: int) -> "Polynomial":
        """Multiply by ``x**k``."""
        if self.is_zero() or k == 0:
            return self
        return Polynomial(self.field, [0] * k + list(self._raw.coeffs()))

    def compose_power(self, k: int) -> "Polynomial":
        """Return ``self(x**k)``."""
        out = [self.field.zero] * (k * max(self.degree, 0) + 1)
        for i, c in enumerate(self._raw.coeffs()):
            out[i * k] = c
        return Polynomial(self.field, out)

    def reduce_mod(self, p: int) -> "Polynomial":
        """Coefficientwise reduction of a QQ polynomial modulo ``p``."""
        if self.field.is_prime_field:
            raise ValidationError("Polynomial is already over a prime field", field="polynomial")
        target = GF(p)
        residues = []
        for c in self.python_coefficients():
            if c.denominator % p == 0:
                raise BadReduction(f"Coefficient {c} has denominator divisible by {p}", prime=p)
            residues.append(target.scalar(c))
        return Polynomial(target, residues)

    def lift(self) -> "Polynomial":
        """Lift GF(p) coefficients to QQ using representatives in [0, p)."""
        return Polynomial(QQ, [int(c) for c in self._raw.coeffs()])

    # -- comparison and printing ----------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.field == other.field and bool(self._raw == other._raw)
        if isinstance(other, (int, Fraction)):
            return bool(self._raw == self._coerce(other))
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.characteristic, tuple(self.python_coefficients())))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __str__(self) -> str:
        return format_polynomial(self.python_coefficients())

    def __repr__(self) -> str:
        return f"Polynomial({self.field}, {self})"


def format_polynomial(coefficients: Sequence[Fraction | int], variable: str = "x") -> str:
    """Canonical text for a coefficient list, highest degree first."""
    terms: list[str] = []
    for i in range(len(coefficients) - 1, -1, -1):
        c = Fraction(coefficients[i])
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            power = variable if i == 1 else f"{variable}^{i}"
            body = power if mag == 1 else f"{mag}*{power}"
        if not terms:
            terms.append(body if sign == "+" else f"-{body}")
        else:
            terms.append(f"{sign} {body}")
    return " ".join(terms) if terms else "0"
