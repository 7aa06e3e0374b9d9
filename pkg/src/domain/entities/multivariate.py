"""Sparse multivariate polynomials over QQ and bivariate polynomials in (x, y)."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, Iterable, Mapping, Tuple

from ..value_objects import GF, QQ, Field, Scalar
from .polynomial import Polynomial, format_polynomial


Monomial = Tuple[int, ...]


class MultivariatePolynomial:
    """Sparse polynomial in ``nvars`` variables with Fraction coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, Any] | None = None) -> None:
        self.nvars = nvars
        clean: Dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                if len(mono) != nvars:
                    raise ValueError(f"Monomial {mono} has wrong arity")
                clean[tuple(mono)] = c
        self.terms = clean

    @classmethod
    def constant(cls, nvars: int, value: Any) -> "MultivariatePolynomial":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MultivariatePolynomial":
        mono = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, {mono: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def degree_in(self, index: int) -> int:
        return max((m[index] for m in self.terms), default=-1)

    def uses_variable(self, index: int) -> bool:
        return any(m[index] for m in self.terms)

    def __add__(self, other: "MultivariatePolynomial") -> "MultivariatePolynomial":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return MultivariatePolynomial(self.nvars, out)

    def __neg__(self) -> "MultivariatePolynomial":
        return MultivariatePolynomial(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "MultivariatePolynomial") -> "MultivariatePolynomial":
        return self + (-other)

    def __mul__(self, other: "MultivariatePolynomial") -> "MultivariatePolynomial":
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return MultivariatePolynomial(self.nvars, out)

    def __pow__(self, exponent: int) -> "MultivariatePolynomial":
        result = MultivariatePolynomial.constant(self.nvars, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultivariatePolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"MultivariatePolynomial({self.nvars}, {self.terms})"


class BivariatePolynomial:
    """``P(x, y) = sum_j coefficients[j](x) * y**j`` over a Field."""

    __slots__ = ("field", "coefficients")

    def __init__(self, field: Field, coefficients: Iterable[Polynomial]) -> None:
        coeffs = list(coefficients)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.field = field
        self.coefficients: Tuple[Polynomial, ...] = tuple(coeffs)

    @classmethod
    def from_multivariate(cls, poly: MultivariatePolynomial, field: Field = QQ) -> "BivariatePolynomial":
        """Variables 0 and 1 of ``poly`` become ``x`` and ``y``."""
        if poly.nvars != 2:
            raise ValueError("Expected a polynomial in two variables")
        by_y: Dict[int, Dict[int, Fraction]] = {}
        for (i, j), c in poly.terms.items():
            by_y.setdefault(j, {})[i] = c
        degree_y = max(by_y, default=-1)
        coeffs = []
        for j in range(degree_y + 1):
            row = by_y.get(j, {})
            top = max(row, default=-1)
            coeffs.append(Polynomial(field, [field.scalar(row.get(i, 0)) for i in range(top + 1)]))
        return cls(field, coeffs)

    @property
    def degree_y(self) -> int:
        return len(self.coefficients) - 1

    @property
    def degree_x(self) -> int:
        return max((c.degree for c in self.coefficients), default=-1)

    def is_zero(self) -> bool:
        return not self.coefficients

    def derivative_y(self) -> "BivariatePolynomial":
        return BivariatePolynomial(
            self.field, [c * j for j, c in enumerate(self.coefficients)][1:]
        )

    def evaluate_at_origin(self, y: Any) -> Scalar:
        """``P(0, y)``."""
        value = self.field.zero
        at = self.field.scalar(y)
        for c in reversed(self.coefficients):
            value = value * at + c.coefficient(0)
        return value

    def reduce_mod(self, p: int) -> "BivariatePolynomial":
        if self.field.is_prime_field:
            return self
        return BivariatePolynomial(GF(p), [c.reduce_mod(p) for c in self.coefficients])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self.field == other.field and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash((self.field, self.coefficients))

    def __str__(self) -> str:
        terms = []
        for j in range(self.degree_y, -1, -1):
            c = self.coefficients[j]
            if c.is_zero():
                continue
            y = "" if j == 0 else ("y" if j == 1 else f"y^{j}")
            body = format_polynomial(c.python_coefficients())
            if y:
                terms.append(y if body == "1" else f"({body})*{y}")
            else:
                terms.append(f"({body})")
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"BivariatePolynomial({self.field}, {self})"
