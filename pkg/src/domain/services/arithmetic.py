"""
Exact arithmetic helpers: gcd, squarefree decomposition, modular reduction,
Chinese remaindering and p-adic valuations.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable, List, Optional, Sequence, Tuple

import flint

from ..entities import Polynomial, RationalFunction
from ..exceptions import InseparableInput, ValidationError
from ..value_objects import QQ


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor."""
    return a.gcd(b)


def is_squarefree(f: Polynomial) -> bool:
    if f.degree <= 0:
        return not f.is_zero()
    return f.gcd(f.derivative()).degree == 0


def squarefree_decomposition(f: Polynomial) -> List[Tuple[Polynomial, int]]:
    """
    Yun's algorithm: ``f = lc * prod(factor**mult)``, factors monic, squarefree
    and pairwise coprime, listed by increasing multiplicity.

    Raises:
        InseparableInput: a multiplicity is lost to the characteristic
    """
    if f.is_zero():
        raise ValidationError("Squarefree decomposition of the zero polynomial")
    g = f.monic()
    result: List[Tuple[Polynomial, int]] = []
    if g.degree <= 0:
        return result
    d = g.derivative()
    a = g.gcd(d)
    b = g.exact_div(a)
    c = d.exact_div(a) if not d.is_zero() else d
    d = c - b.derivative()
    multiplicity = 1
    while b.degree > 0:
        if multiplicity > f.degree:
            raise InseparableInput(str(f), f.field.characteristic)
        a = b.gcd(d)
        b = b.exact_div(a)
        d = (d.exact_div(a) if not d.is_zero() else d) - b.derivative()
        if a.degree > 0:
            result.append((a, multiplicity))
        multiplicity += 1

    rebuilt = Polynomial(f.field, [f.leading_coefficient])
    for factor, m in result:
        rebuilt = rebuilt * factor ** m
    if rebuilt != f:
        raise InseparableInput(str(f), f.field.characteristic)
    return result


def reduce_mod_p(f: RationalFunction, p: int) -> RationalFunction:
    """Reduce a QQ rational function modulo ``p`` (BadReduction when undefined)."""
    return f.reduce_mod(p)


def ratfun_arith(
    operation: str, a: RationalFunction, b: Optional[Any] = None
) -> Any:
    """Dispatch ``add``, ``mul``, ``derivative`` or ``eval`` on rational functions."""
    if operation == "add":
        return a + b
    if operation == "mul":
        return a * b
    if operation == "derivative":
        return a.derivative()
    if operation == "eval":
        return a.evaluate(b)
    raise ValidationError(f"Unknown rational function operation {operation!r}", value=operation)


def crt_polynomials(residues: Sequence[Polynomial], moduli: Sequence[Polynomial]) -> Polynomial:
    """Combine ``r_i mod m_i`` for pairwise coprime moduli into one residue."""
    if len(residues) != len(moduli) or not moduli:
        raise ValidationError("CRT needs matching nonempty residue and modulus lists")
    result = residues[0] % moduli[0]
    modulus = moduli[0]
    for r, m in zip(residues[1:], moduli[1:]):
        inv = modulus.invmod(m)
        correction = ((r - result) * inv) % m
        result = result + modulus * correction
        modulus = modulus * m
    return result % modulus


def as_fraction(value: Any) -> Fraction:
    """Fraction from an int, fmpz, fmpq or Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, flint.fmpq):
        return Fraction(int(value.numer()), int(value.denom()))
    return Fraction(int(value))


def p_valuation(value: Any, p: int) -> Optional[int]:
    """p-adic valuation of a rational; ``None`` stands for +infinity."""
    q = as_fraction(value)
    if q == 0:
        return None
    v = 0
    num, den = q.numerator, q.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def factorial_valuation(n: int, p: int) -> int:
    """``v_p(n!)`` by Legendre's formula."""
    v, q = 0, p
    while q <= n:
        v += n // q
        q *= p
    return v


def integer_prime_factors(n: int) -> List[Tuple[int, int]]:
    """Prime factorization ``[(prime, exponent)]`` of a positive integer."""
    if n < 1:
        raise ValidationError("Factorization needs a positive integer", value=n)
    if n == 1:
        return []
    return sorted((int(q), int(e)) for q, e in flint.fmpz(n).factor())


def rational_roots(f: Polynomial) -> List[Fraction]:
    """Distinct rational roots of a nonzero QQ polynomial, ascending."""
    if f.field != QQ:
        raise ValidationError("Rational roots need a polynomial over QQ")
    if f.degree <= 0:
        return []
    roots = set()
    _, factors = f.raw.factor()
    for factor, _mult in factors:
        coeffs = factor.coeffs()
        if len(coeffs) == 2:
            roots.add(-as_fraction(coeffs[0]) / as_fraction(coeffs[1]))
    return sorted(roots)


def nonlinear_factors(f: Polynomial) -> List[Polynomial]:
    """Irreducible QQ factors of degree above one, made monic."""
    if f.degree <= 1:
        return []
    _, factors = f.raw.factor()
    out = []
    for factor, _mult in factors:
        coeffs = factor.coeffs()
        if len(coeffs) > 2:
            out.append(Polynomial(QQ, [as_fraction(c) for c in coeffs]).monic())
    return out


def polynomial_from_roots(roots: Iterable[Fraction]) -> Polynomial:
    result = Polynomial(QQ, [1])
    for r in roots:
        result = result * Polynomial(QQ, [-r, 1])
    return result
