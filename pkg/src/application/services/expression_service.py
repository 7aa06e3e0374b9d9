"""
Expression service.

Resolves ``@name`` catalog references and parses user text into domain
objects through the parse cache.
"""

from fractions import Fraction
from typing import List, Optional, Tuple

import flint

from ...adapters.parsers import (
    MultivariateFraction,
    parse_bivariate,
    parse_expression,
    parse_multivariate_fraction,
    parse_operator,
    parse_polynomial,
    parse_rational_function,
)
from ...domain.entities import BivariatePolynomial, DiffOp, Polynomial, RationalFunction
from ...domain.exceptions import CatalogError, ValidationError
from ...domain.interfaces import OperatorCatalog
from ...domain.value_objects import PrimeRange, parse_rational
from ...infrastructure.cache import ParseCache

DIAGONAL_VARIABLES = ("x", "y", "z")


class ExpressionService:
    """Turns command-line text into operators, functions and parameter lists."""

    def __init__(
        self,
        catalog: Optional[OperatorCatalog] = None,
        cache: Optional[ParseCache] = None
    ) -> None:
        """
        Initialize the service.

        Args:
            catalog: Named operators; ``None`` disables ``@name`` references
            cache: Parse cache; ``None`` parses every time
        """
        self.catalog = catalog
        self.cache = cache or ParseCache(max_size=0)

    def resolve(self, text: str) -> str:
        if text.strip().startswith("@"):
            if self.catalog is None:
                raise CatalogError("Operator catalog is disabled", name=text.strip())
            return self.catalog.resolve(text)
        return text

    def operator(self, text: str) -> DiffOp:
        source = self.resolve(text)
        op = self.cache.get_or_parse("operator", source, parse_operator)
        if op.is_zero():
            raise ValidationError("Operator is zero", field="operator", value=text)
        return op

    def rational_function(self, text: str) -> RationalFunction:
        return self.cache.get_or_parse("ratfun", text, parse_rational_function)

    def polynomial(self, text: str) -> Polynomial:
        return self.cache.get_or_parse("polynomial", text, parse_polynomial)

    def bivariate(self, text: str) -> BivariatePolynomial:
        return self.cache.get_or_parse("bivariate", text, parse_bivariate)

    def diagonal_input(self, text: str) -> Tuple[MultivariateFraction, int]:
        """Parse in ``x, y`` or ``x, y, z``; the count is the number of variables."""
        used = parse_expression(text, DIAGONAL_VARIABLES, allow_dx=False).variables()
        variables = DIAGONAL_VARIABLES if "z" in used else DIAGONAL_VARIABLES[:2]
        return parse_multivariate_fraction(text, variables), len(variables)

    @staticmethod
    def rationals(text: str, field: str = "values") -> List[Fraction]:
        """Comma separated exact rationals."""
        if text is None or not str(text).strip():
            return []
        try:
            return [parse_rational(t) for t in str(text).split(",") if t.strip()]
        except ValidationError as exc:
            raise ValidationError(exc.message, field=field, value=text) from exc

    @staticmethod
    def integers(text: str, field: str = "values") -> List[int]:
        values = ExpressionService.rationals(text, field)
        if any(v.denominator != 1 for v in values):
            raise ValidationError("Expected integers", field=field, value=text)
        return [int(v) for v in values]

    @staticmethod
    def prime(value: int, field: str = "prime") -> int:
        if value is None or value < 2 or not flint.fmpz(value).is_prime():
            raise ValidationError(f"{value} is not a prime", field=field, value=value)
        return int(value)

    @staticmethod
    def prime_range(pmin: int, pmax: int) -> List[int]:
        return PrimeRange(pmin, pmax).primes()

    @staticmethod
    def positive(value: int, field: str) -> int:
        if value is None or value < 1:
            raise ValidationError(f"--{field} must be positive", field=field, value=value)
        return int(value)
