"""Value objects for the domain layer."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from math import lcm
from typing import Any, ClassVar, Iterable, List, Tuple

import flint

from .exceptions import BadReduction, EmptyParams, ValidationError


Scalar = Any
"""A field element: ``flint.fmpq`` over QQ, ``flint.nmod`` over GF(p)."""


@dataclass(frozen=True)
class Field:
    """Coefficient field: the rationals (characteristic 0) or a prime field."""

    characteristic: int = 0
    _MAX_PRIME: ClassVar[int] = 2**62

    def __post_init__(self) -> None:
        """Validate the characteristic."""
        p = self.characteristic
        if p == 0:
            return
        if p < 2 or p >= self._MAX_PRIME:
            raise ValidationError("Prime must lie in [2, 2^62)", field="prime", value=p)
        if not flint.fmpz(p).is_prime():
            raise ValidationError(f"{p} is not prime", field="prime", value=p)

    @property
    def is_prime_field(self) -> bool:
        return self.characteristic > 0

    def __str__(self) -> str:
        return f"GF({self.characteristic})" if self.characteristic else "QQ"

    # -- scalars --------------------------------------------------------

    @property
    def zero(self) -> Scalar:
        return self.scalar(0)

    @property
    def one(self) -> Scalar:
        return self.scalar(1)

    def scalar(self, value: Any) -> Scalar:
        """
        Coerce ``value`` into this field.

        Accepts ints, Fractions, decimal strings ``"n/d"``, fmpz/fmpq and,
        for prime fields, nmod values of the same modulus.

        Raises:
            BadReduction: a rational whose denominator vanishes mod p
        """
        p = self.characteristic
        if isinstance(value, str):
            value = Fraction(value)
        if p == 0:
            if isinstance(value, flint.fmpq):
                return value
            if isinstance(value, Fraction):
                return flint.fmpq(value.numerator, value.denominator)
            if isinstance(value, flint.nmod):
                raise ValidationError("Cannot lift a residue to QQ", value=value)
            return flint.fmpq(int(value))
        if isinstance(value, flint.nmod):
            return value
        if isinstance(value, flint.fmpq):
            value = Fraction(int(value.numer()), int(value.denom()))
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise BadReduction(f"Denominator of {value} vanishes mod {p}", prime=p)
            return flint.nmod(value.numerator % p, p) / flint.nmod(value.denominator % p, p)
        return flint.nmod(int(value) % p, p)

    def to_python(self, value: Scalar) -> Fraction | int:
        """Convert a field element to Fraction (QQ) or a residue int (GF(p))."""
        if self.characteristic:
            return int(value)
        return Fraction(int(value.numer()), int(value.denom()))

    def raw_poly(self, coefficients: Iterable[Scalar]) -> Any:
        """Build the flint polynomial for this field from field elements."""
        if self.characteristic:
            return flint.nmod_poly([int(c) for c in coefficients], self.characteristic)
        return flint.fmpq_poly(list(coefficients))


QQ = Field(0)


@lru_cache(maxsize=None)
def GF(p: int) -> Field:
    """Return the prime field with ``p`` elements."""
    return Field(p)


def reduce_rational(value: Fraction | int, p: int) -> int:
    """Residue of a rational modulo ``p``."""
    return int(GF(p).scalar(Fraction(value)))


def parse_rational(text: str) -> Fraction:
    """Parse ``"3"``, ``"-1/12"`` and the like into an exact Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"Not a rational number: {text!r}", value=text) from exc


@dataclass(frozen=True)
class PrimeRange:
    """Inclusive range of primes ``pmin <= p <= pmax``."""

    pmin: int
    pmax: int

    def __post_init__(self) -> None:
        if self.pmin > self.pmax:
            raise ValidationError("pmin exceeds pmax", field="pmin", value=self.pmin)
        if not self.primes():
            raise ValidationError(
                f"No prime in [{self.pmin}, {self.pmax}]", field="pmax", value=self.pmax
            )

    def primes(self) -> List[int]:
        return [
            n for n in range(max(self.pmin, 2), self.pmax + 1)
            if flint.fmpz(n).is_prime()
        ]


@dataclass(frozen=True)
class HypergeomParams:
    """
    Parameters of a generalized hypergeometric series.

    ``upper`` holds a_1..a_{s+1} and ``lower`` b_1..b_s; the factorial
    ``(1)_k`` of the series is the implicit extra lower parameter 1.
    """

    upper: Tuple[Fraction, ...]
    lower: Tuple[Fraction, ...] = field(default=())

    def __post_init__(self) -> None:
        if not self.upper:
            raise EmptyParams()
        object.__setattr__(self, "upper", tuple(Fraction(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(Fraction(b) for b in self.lower))

    @classmethod
    def parse(cls, upper: str, lower: str) -> "HypergeomParams":
        """Build from comma separated lists such as ``"1/2,1/2"`` and ``"1"``."""
        ups = [parse_rational(t) for t in upper.split(",") if t.strip()]
        lows = [parse_rational(t) for t in lower.split(",") if t.strip()]
        return cls(tuple(ups), tuple(lows))

    @property
    def full_lower(self) -> Tuple[Fraction, ...]:
        """Lower parameters including the implicit 1."""
        return self.lower + (Fraction(1),)

    @property
    def common_denominator(self) -> int:
        return reduce(lcm, (q.denominator for q in self.upper + self.full_lower), 1)

    def __str__(self) -> str:
        ups = ",".join(str(a) for a in self.upper)
        lows = ",".join(str(b) for b in self.lower)
        return f"[{ups}],[{lows}]"
