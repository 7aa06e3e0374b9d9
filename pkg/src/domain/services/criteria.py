"""
Algebraicity and rationality criteria.

Order-1 residue tests, the hypergeometric interlacing criterion, prime scans,
integrality checkers and the Kronecker analogue. Scans report per-prime facts;
any global conclusion drawn from them is heuristic.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import gcd
from typing import Iterable, List, Optional, Sequence

from ..entities import (
    DiffOp,
    EisensteinResult,
    FactorDiagnostic,
    HypergeomClass,
    HypergeomVerdict,
    IntegralityResult,
    InterlacingCertificate,
    KroneckerEntry,
    KroneckerReport,
    Order1Verdict,
    PCurvatureStatus,
    Polynomial,
    RationalFunction,
    ScanEntry,
    ScanReport,
    SeriesCongruenceResult,
)
from ..exceptions import BadReduction, Reducible, TruncationTooSmall, ValidationError
from ..value_objects import QQ, HypergeomParams
from .arithmetic import (
    as_fraction,
    factorial_valuation,
    integer_prime_factors,
    is_squarefree,
    nonlinear_factors,
    p_valuation,
    rational_roots,
    squarefree_decomposition,
)
from .matrices import hessenberg_charpoly
from .ore import reduce_op_mod_p
from .pcurvature import cartier_test, pcurvature_order1_closed_form
from .series_lab import series_solve

logger = logging.getLogger(__name__)


# -- order one ------------------------------------------------------------


def _residue_polynomial(residue: Polynomial, q: Polynomial) -> Polynomial:
    """Characteristic polynomial of multiplication by ``residue`` in QQ[x]/(q)."""
    n = q.degree
    basis = [Polynomial.monomial(QQ, k) for k in range(n)]
    columns = [(residue * b) % q for b in basis]
    rows = [
        [RationalFunction.constant(QQ, columns[j].coefficient(i)) for j in range(n)]
        for i in range(n)
    ]
    charpoly = hessenberg_charpoly(rows)
    return Polynomial(QQ, [c.constant_value() for c in charpoly])


def _diagnose(numerator: Polynomial, denominator: Polynomial, q: Polynomial, mult: int) -> FactorDiagnostic:
    if mult > 1:
        return FactorDiagnostic(q, mult, residue_constant=False)
    residue = (numerator * denominator.derivative().invmod(q)) % q
    if residue.degree <= 0:
        value = as_fraction(residue.coefficient(0))
        return FactorDiagnostic(q, 1, True, (value,), value.denominator == 1)
    values = _residue_polynomial(residue, q)
    if nonlinear_factors(values):
        return FactorDiagnostic(q, 1, residue_constant=False)
    roots = tuple(rational_roots(values))
    return FactorDiagnostic(q, 1, False, roots, all(r.denominator == 1 for r in roots))


def order1_char0_classify(a: RationalFunction) -> Order1Verdict:
    """
    Solutions of ``y' = a y`` over QQ(x).

    Algebraic iff ``a`` has only simple poles with rational residues and
    vanishes at infinity; rational iff moreover every residue is an integer.
    """
    if a.field != QQ:
        raise ValidationError("Order-1 classification in characteristic 0 needs QQ", field="a")
    num, den = a.numerator, a.denominator
    at_infinity = num.degree < den.degree
    diagnostics = tuple(
        _diagnose(num, den, q, m) for q, m in squarefree_decomposition(den)
    )
    residues_rational = all(
        d.multiplicity == 1 and (d.residue_constant or d.residues) for d in diagnostics
    )
    algebraic = at_infinity and residues_rational
    rational = algebraic and all(d.integral for d in diagnostics)
    return Order1Verdict(rational, algebraic, at_infinity, diagnostics)


def order1_charp_has_rational(b: RationalFunction) -> bool:
    """``y' + b y = 0`` has a nonzero rational solution iff ``b^(p-1) + b^p = 0``."""
    return pcurvature_order1_closed_form(b).is_zero()


# -- hypergeometric -------------------------------------------------------


def _frac(value: Fraction) -> Fraction:
    return value - (value.numerator // value.denominator)


def hypergeom_classify(params: HypergeomParams) -> HypergeomVerdict:
    """
    Interlacing criterion for ``sFs-1`` with lower list completed by 1.

    Raises:
        Reducible: some upper minus lower parameter is an integer
    """
    upper = list(params.upper)
    lower = list(params.full_lower)
    if len(lower) != len(upper):
        raise ValidationError(
            "Need one lower parameter fewer than upper parameters", field="lower",
            value=len(params.lower),
        )
    for a in upper:
        for b in lower:
            if (a - b).denominator == 1:
                raise Reducible(a, b)

    denominator = params.common_denominator
    certificates = []
    for ell in range(1, max(denominator, 2)):
        if gcd(ell, denominator) != 1:
            continue
        tagged = sorted(
            [(_frac(ell * a), "U") for a in upper] + [(_frac(ell * b), "L") for b in lower]
        )
        pattern = "".join(tag for _, tag in tagged)
        alternates = all(pattern[i] != pattern[i + 1] for i in range(len(pattern) - 1))
        ties = len({v for v, _ in tagged}) < len(tagged)
        certificates.append(InterlacingCertificate(ell, pattern, alternates and not ties))

    algebraic = all(c.interlaces for c in certificates)
    return HypergeomVerdict(
        HypergeomClass.ALGEBRAIC if algebraic else HypergeomClass.TRANSCENDENTAL,
        denominator,
        tuple(certificates),
    )


# -- prime scans ----------------------------------------------------------


def scan_prime(op: DiffOp, p: int) -> ScanEntry:
    """Status of ``op`` at one prime; bad reduction is reported, not raised."""
    try:
        reduced = reduce_op_mod_p(op, p)
    except BadReduction as exc:
        return ScanEntry(p, PCurvatureStatus.BAD_REDUCTION, exc.message)
    return ScanEntry(p, cartier_test(reduced, with_witness=False).status)


def grothendieck_scan(op: DiffOp, primes: Iterable[int], name: Optional[str] = None) -> ScanReport:
    """p-curvature status for every prime, ascending."""
    ordered = sorted(set(primes))
    if not ordered:
        raise ValidationError("Prime range is empty", field="primes")
    if op.order < 1:
        raise ValidationError("Operator must have order at least 1", field="operator")
    entries = tuple(scan_prime(op, p) for p in ordered)
    return ScanReport(name or str(op), entries)


def kronecker_scan(poly: Polynomial, primes: Iterable[int]) -> KroneckerReport:
    """
    Per prime, whether ``X^p = X mod (P, p)``.

    Primes where P loses degree, does not reduce, or stops being squarefree
    are listed with ``splits=None``.
    """
    if poly.field != QQ or poly.degree < 1:
        raise ValidationError("Need a nonconstant polynomial over QQ", field="polynomial")
    if not is_squarefree(poly):
        raise ValidationError("Polynomial must be squarefree", field="polynomial")
    entries = []
    for p in sorted(set(primes)):
        try:
            reduced = poly.reduce_mod(p)
        except BadReduction:
            entries.append(KroneckerEntry(p, None, "coefficient denominator divisible by p"))
            continue
        if reduced.degree != poly.degree:
            entries.append(KroneckerEntry(p, None, "degree drops"))
            continue
        if not is_squarefree(reduced):
            entries.append(KroneckerEntry(p, None, "not squarefree mod p"))
            continue
        x = Polynomial.x(reduced.field)
        entries.append(KroneckerEntry(p, x.powmod(p, reduced) == x % reduced))
    return KroneckerReport(poly, tuple(entries))


# -- integrality ----------------------------------------------------------


def eisenstein_check(coefficients: Sequence[Fraction], bound: int = 10**6) -> EisensteinResult:
    """
    Smallest ``N`` with ``y(Nx) - y(0)`` integral on the given prefix.

    Passing is heuristic; failing (``N`` above ``bound``) is definitive for the
    prefix, with the primes of ``N`` as witnesses.
    """
    coeffs = [Fraction(c) for c in coefficients]
    if len(coeffs) < 2:
        raise TruncationTooSmall(len(coeffs), 2)
    exponents: dict[int, int] = {}
    for k, c in enumerate(coeffs[1:], start=1):
        if c.denominator == 1:
            continue
        for q, e in integer_prime_factors(c.denominator):
            exponents[q] = max(exponents.get(q, 0), -(-e // k))
    scale = 1
    for q, e in exponents.items():
        scale *= q ** e
    if scale <= bound:
        return EisensteinResult(True, len(coeffs), scale=scale)
    return EisensteinResult(
        False, len(coeffs), witness_primes=tuple(sorted(exponents)), heuristic=False
    )


def p_integrality_check(
    op: DiffOp, initial: Sequence[Fraction], p: int, terms: int
) -> IntegralityResult:
    """
    First coefficient of the series solution with negative p-adic valuation.

    Also reports whether ``n! c_n`` vanishes mod p for ``p <= n < terms``.
    """
    series = series_solve(op, initial, terms)
    coeffs = [Fraction(c) for c in series.python_coefficients()]
    first, valuation = None, None
    for n, c in enumerate(coeffs):
        v = p_valuation(c, p)
        if v is not None and v < 0:
            first, valuation = n, v
            break
    scaled = True
    for n in range(p, terms):
        v = p_valuation(coeffs[n], p)
        if v is not None and v + factorial_valuation(n, p) < 1:
            scaled = False
            break
    return IntegralityResult(p, terms, first is None, first, valuation, scaled)


def kelisky_residue(p: int) -> int:
    """``T_p mod p`` for ``T_n = n! [x^n] exp(arctan x)``."""
    t = [1, 1]
    for n in range(p - 1):
        t.append((t[n + 1] - n * (n + 1) * t[n]) % p)
    return t[p] % p


def arctan_frobenius_check(p: int, terms: int) -> SeriesCongruenceResult:
    """Whether ``arctan(x^p) - p arctan(x)`` is divisible by p below ``x^terms``."""
    def arctan_coefficient(n: int) -> Fraction:
        if n % 2 == 0:
            return Fraction(0)
        return Fraction((-1) ** ((n - 1) // 2), n)

    for n in range(terms):
        c = -p * arctan_coefficient(n)
        if n % p == 0:
            c += arctan_coefficient(n // p)
        v = p_valuation(c, p)
        if v is not None and v < 1:
            return SeriesCongruenceResult(False, terms, n)
    return SeriesCongruenceResult(True, terms)


def good_primes(values: Iterable[RationalFunction], primes: Iterable[int]) -> List[int]:
    """
    Primes where every function keeps its pole structure.

    The denominator must keep its degree and its squarefree part must stay
    squarefree of the same degree, so repeated poles such as ``1/x^2`` are
    allowed.
    """
    funcs = list(values)
    radicals = []
    for f in funcs:
        den = f.denominator
        radicals.append(den.exact_div(den.gcd(den.derivative())) if den.degree > 0 else den)
    out = []
    for p in primes:
        ok = True
        for f, rad in zip(funcs, radicals):
            try:
                r = f.reduce_mod(p)
                r_rad = rad.reduce_mod(p)
            except BadReduction:
                ok = False
                break
            if r.denominator.degree != f.denominator.degree:
                ok = False
                break
            if r_rad.degree != rad.degree or not is_squarefree(r_rad):
                ok = False
                break
        if ok:
            out.append(p)
    return out
