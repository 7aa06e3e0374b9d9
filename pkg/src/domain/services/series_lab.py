"""
Truncated power series: recurrences, series solutions, hypergeometric terms,
Hensel lifting modulo p, diagonals and algebraic relations.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from itertools import product
from math import gcd, lcm
from typing import Any, Dict, Iterator, List, Sequence, Tuple

from ..entities import (
    BivariatePolynomial,
    DiffOp,
    MultivariatePolynomial,
    Polynomial,
    PRecurrence,
    TruncatedSeries,
)
from ..exceptions import (
    LowerParameterNonpositiveInteger,
    NoExpansionAtOrigin,
    NotASimpleRoot,
    NotOrdinaryPoint,
    SingularIndex,
    ValidationError,
)
from ..value_objects import QQ, HypergeomParams
from .arithmetic import as_fraction
from .ore import monicize


# -- operators and recurrences --------------------------------------------


def _falling_polynomial(shift: int, i: int) -> Polynomial:
    """``(k + shift)(k + shift - 1) ... (k + shift - i + 1)`` in ``k``."""
    out = Polynomial(QQ, [1])
    for t in range(i):
        out = out * Polynomial(QQ, [shift - t, 1])
    return out


def _normalize_recurrence(coeffs: List[Polynomial]) -> List[Polynomial]:
    common = reduce(lambda a, b: a.gcd(b), coeffs)
    if common.degree > 0:
        coeffs = [c.exact_div(common) for c in coeffs]
    values = [Fraction(v) for c in coeffs for v in c.python_coefficients()]
    scale = lcm(*(v.denominator for v in values))
    numerators = [int(v * scale) for v in values]
    content = reduce(gcd, numerators, 0) or 1
    factor = Fraction(scale, content)
    if as_fraction(coeffs[-1].leading_coefficient) * factor < 0:
        factor = -factor
    return [c * factor for c in coeffs]


def operator_to_recurrence(op: DiffOp) -> PRecurrence:
    """
    Recurrence satisfied by the coefficients of every series solution.

    ``a_{i,l} x^l Dx^i`` sends ``u_m x^m`` to ``a_{i,l} m^(i) x^(m-i+l)``;
    collecting by the shift ``j = i - l`` gives
    ``sum_t P_t(k) u(k + t) = 0`` with ``k = K + j_min``.
    """
    if op.field != QQ or op.is_zero():
        raise ValidationError("Need a nonzero operator over QQ", field="operator")
    coeffs = op.polynomial_coefficients()
    terms: Dict[int, List[Tuple[int, Any]]] = {}
    for i, a in enumerate(coeffs):
        for l, c in enumerate(a.python_coefficients()):
            if c:
                terms.setdefault(i - l, []).append((i, c))
    j_min, j_max = min(terms), max(terms)
    polys = []
    for t in range(j_max - j_min + 1):
        total = Polynomial(QQ)
        for i, c in terms.get(t + j_min, []):
            total = total + _falling_polynomial(t, i) * c
        polys.append(total)
    offset = j_min
    while polys and polys[-1].is_zero():
        polys.pop()
    while polys[0].is_zero():
        polys = [c.taylor_shift(-1) for c in polys[1:]]
        offset += 1
    return PRecurrence(tuple(_normalize_recurrence(polys)), offset)


def recurrence_unroll(rec: PRecurrence, count: int) -> TruncatedSeries:
    """
    First ``count`` terms from the initial values.

    Each new term ``u(m)`` comes from the relation at ``k = m - order``;
    negative indices read as zero.

    Raises:
        SingularIndex: the leading coefficient vanishes at that ``k``
    """
    values = [Fraction(v) for v in rec.initial_values[:count]]
    s = rec.order
    for m in range(len(values), count):
        k = m - s
        if k < rec.offset:
            raise ValidationError(
                f"Term {m} is not determined by the relation; supply more initial values",
                field="initial_values",
            )
        lead = as_fraction(rec.leading.evaluate(k))
        if lead == 0:
            raise SingularIndex(k)
        acc = Fraction(0)
        for t in range(s):
            if k + t >= 0:
                acc += as_fraction(rec.coefficients[t].evaluate(k)) * values[k + t]
        values.append(-acc / lead)
    return TruncatedSeries.from_coefficients(QQ, values, count)


def is_ordinary_at_zero(op: DiffOp) -> bool:
    """Every coefficient of the monic operator is regular at 0."""
    return all(c.is_regular_at(0) for c in monicize(op).coefficients)


def series_solve(op: DiffOp, initial: Sequence[Any], count: int) -> TruncatedSeries:
    """
    Series solution at an ordinary point 0.

    ``initial`` holds ``y(0), y'(0), ..., y^(n-1)(0)``.

    Raises:
        NotOrdinaryPoint: a monic coefficient has a pole at 0
    """
    monic = monicize(op)
    n = monic.order
    field = op.field
    p = field.characteristic
    if len(initial) != n:
        raise ValidationError(f"Need exactly {n} initial values", field="initial", value=len(initial))
    if p and count > p:
        raise ValidationError(f"At most {p} terms over GF({p})", field="terms", value=count)
    if not is_ordinary_at_zero(monic):
        raise NotOrdinaryPoint("0 is a singular point", point=0)

    betas = [
        TruncatedSeries.from_rational_function(monic.coefficient(i), count).coefficients
        for i in range(n)
    ]
    c: List[Any] = []
    factorial = field.one
    for i in range(min(n, count)):
        if i:
            factorial = factorial * i
        c.append(field.scalar(Fraction(initial[i])) / factorial)
    for m in range(0, count - n):
        acc = field.zero
        for i in range(n):
            for j in range(m + 1):
                r = m - j + i
                weight = betas[i][j]
                if weight == 0 or c[r] == 0:
                    continue
                falling = 1
                for t in range(i):
                    falling *= r - t
                acc = acc + weight * c[r] * falling
        top = 1
        for t in range(n):
            top *= m + n - t
        c.append(-acc / field.scalar(top))
    return TruncatedSeries.from_coefficients(field, c, count)


# -- hypergeometric -------------------------------------------------------


def pochhammer(a: Any, n: int) -> Fraction:
    """Rising factorial ``(a)_n``."""
    out = Fraction(1)
    a = Fraction(a)
    for i in range(n):
        out *= a + i
    return out


def hypergeom_series(params: HypergeomParams, count: int, scale: Any = 1) -> TruncatedSeries:
    """
    ``sFs-1(upper; lower; scale * x)`` to ``count`` terms.

    Raises:
        LowerParameterNonpositiveInteger: a lower parameter in 0, -1, -2, ...
    """
    for b in params.lower:
        if b.denominator == 1 and b <= 0:
            raise LowerParameterNonpositiveInteger(b)
    z = Fraction(scale)
    terms = [Fraction(1)]
    for k in range(count - 1):
        num = Fraction(1)
        for a in params.upper:
            num *= a + k
        den = Fraction(k + 1)
        for b in params.lower:
            den *= b + k
        terms.append(terms[-1] * num / den * z)
    return TruncatedSeries.from_coefficients(QQ, terms[:count], count)


def rescaled_terms(coefficients: Sequence[Any], base: Any, params: Sequence[Any]) -> List[Fraction]:
    """``base^n * prod_a (a)_n * c_n`` for each coefficient."""
    out = []
    base = Fraction(base)
    for n, c in enumerate(coefficients):
        value = Fraction(c) * base ** n
        for a in params:
            value *= pochhammer(a, n)
        out.append(value)
    return out


# -- algebraic series -----------------------------------------------------


def _evaluate(poly: BivariatePolynomial, y: TruncatedSeries) -> TruncatedSeries:
    return y.evaluate_polynomial_at(poly.coefficients)


def hensel_steps(poly: BivariatePolynomial, y0: int, count: int) -> Iterator[TruncatedSeries]:
    """
    Newton iterates of the root of ``P(x, y)`` through ``y0``.

    Each yielded series is correct to its truncation order, which doubles.

    Raises:
        NotASimpleRoot: ``P(0, y0) != 0`` or ``P_y(0, y0) = 0``
    """
    field = poly.field
    p = field.characteristic
    if not p:
        raise ValidationError("Hensel lifting here works over GF(p)", field="prime")
    if poly.evaluate_at_origin(y0) != 0:
        raise NotASimpleRoot(y0, p, "P(0, y0) is nonzero")
    derivative = poly.derivative_y()
    if derivative.evaluate_at_origin(y0) == 0:
        raise NotASimpleRoot(y0, p, "dP/dy vanishes at (0, y0)")
    y = TruncatedSeries(Polynomial(field, [y0]), 1)
    yield y
    precision = 1
    while precision < count:
        precision = min(2 * precision, count)
        y = TruncatedSeries(y.poly, precision)
        y = y - _evaluate(poly, y) / _evaluate(derivative, y)
        yield y


def algebraic_series_mod_p(poly: BivariatePolynomial, y0: int, count: int) -> TruncatedSeries:
    """The unique root ``y(x)`` with ``y(0) = y0``, modulo ``x^count``."""
    *_, result = hensel_steps(poly, y0, count)
    return result


def check_algebraic_relation(series: TruncatedSeries, poly: BivariatePolynomial, count: int) -> bool:
    """Whether ``P(x, s(x)) = 0 mod x^count``."""
    if count > series.order:
        raise ValidationError(
            f"Series known to order {series.order}, asked for {count}", field="terms"
        )
    if poly.field != series.field:
        poly = poly.reduce_mod(series.field.characteristic)
    return _evaluate(poly, series.truncate(count)).is_zero()


# -- diagonals ------------------------------------------------------------


def diagonal_small(
    numerator: MultivariatePolynomial, denominator: MultivariatePolynomial, count: int
) -> TruncatedSeries:
    """
    Diagonal of ``numerator / denominator`` in 2 or 3 variables.

    The expansion ``G = 1/denominator`` is solved monomial by monomial in
    lexicographic order, each exponent below ``count``.

    Raises:
        NoExpansionAtOrigin: the denominator vanishes at the origin
    """
    nvars = denominator.nvars
    if nvars not in (2, 3) or numerator.nvars != nvars:
        raise ValidationError("Diagonals need 2 or 3 variables", field="variables", value=nvars)
    c0 = denominator.constant_term()
    if c0 == 0:
        raise NoExpansionAtOrigin()
    rest = [(m, c) for m, c in denominator.terms.items() if any(m)]
    inverse: Dict[Tuple[int, ...], Fraction] = {}
    for mono in product(range(count), repeat=nvars):
        acc = Fraction(1) if not any(mono) else Fraction(0)
        for d, c in rest:
            prev = tuple(a - b for a, b in zip(mono, d))
            if min(prev) < 0:
                continue
            value = inverse.get(prev)
            if value:
                acc -= c * value
        if acc:
            inverse[mono] = acc / c0
    diagonal = []
    for n in range(count):
        total = Fraction(0)
        for d, c in numerator.terms.items():
            prev = tuple(n - b for b in d)
            if min(prev) >= 0:
                total += c * inverse.get(prev, Fraction(0))
        diagonal.append(total)
    return TruncatedSeries.from_coefficients(QQ, diagonal, count)
