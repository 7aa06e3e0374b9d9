"""
p-curvature of differential operators over GF(p)(x).

Conventions: for a monic operator ``Dx^n + b_{n-1} Dx^{n-1} + ... + b_0`` the
companion matrix ``B`` has ``-1`` on the superdiagonal and ``(b_0, ..., b_{n-1})``
as last row, so ``L(y) = 0`` iff ``Y' + B Y = 0`` for ``Y = (y, ..., y^(n-1))``.
``B_0 = I``, ``B_{k+1} = B_k' + B B_k`` and the p-curvature is ``B_p``.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, List, Optional, Sequence, Tuple

import flint

from ..entities import (
    DiffOp,
    HurwitzSeries,
    PCurvatureMatrix,
    PCurvatureMethod,
    PCurvatureReport,
    PCurvatureStatus,
    Polynomial,
    RationalFunction,
    SeriesCongruenceResult,
    TruncatedSeries,
)
from ..entities.reports import Char0RelationsReport, Matrix
from ..exceptions import (
    NonzeroPCurvature,
    NotEnoughSamplePoints,
    PoleAtBasePoint,
    PoleAtOrigin,
    PoleAtSamplePoint,
    PoleEvaluation,
    TruncationTooSmall,
    ValidationError,
)
from ..value_objects import QQ
from .arithmetic import crt_polynomials, factorial_valuation, p_valuation
from .matrices import (
    hessenberg_charpoly,
    nullspace_mod_p,
    polynomial_matrix_rank,
    wronskian_rows,
)
from .ore import dx_power_remainders, monicize, reduce_op_mod_p

logger = logging.getLogger(__name__)


def _freeze(rows: Sequence[Sequence[RationalFunction]]) -> Matrix:
    return tuple(tuple(row) for row in rows)


def _require_prime_field(op: DiffOp) -> int:
    if not op.field.is_prime_field:
        raise ValidationError("Operator must be reduced modulo a prime first", field="prime")
    if op.order < 1:
        raise ValidationError("Operator must have order at least 1", field="operator")
    return op.field.characteristic


# -- companion system ------------------------------------------------------


def companion_matrix(op: DiffOp) -> Matrix:
    """Companion matrix of the monic form of ``op``."""
    if op.order < 1:
        raise ValidationError("Companion matrix needs order at least 1", field="operator")
    monic = monicize(op)
    n = monic.order
    field = op.field
    rows = [[RationalFunction.zero(field)] * n for _ in range(n)]
    for i in range(n - 1):
        rows[i][i + 1] = RationalFunction.constant(field, -1)
    for j in range(n):
        rows[n - 1][j] = monic.coefficient(j)
    return _freeze(rows)


def _scaled_companion(op: DiffOp) -> Tuple[Polynomial, List[List[Polynomial]]]:
    """``(f, A)`` with ``f`` the common denominator and ``A = f * B`` polynomial."""
    monic = monicize(op)
    n = monic.order
    field = op.field
    f = monic.common_denominator()
    zero = Polynomial(field)
    a = [[zero] * n for _ in range(n)]
    for i in range(n - 1):
        a[i][i + 1] = -f
    for j in range(n):
        c = monic.coefficient(j)
        a[n - 1][j] = c.numerator * f.exact_div(c.denominator)
    return f, a


def degree_bound(op: DiffOp) -> int:
    """``d`` with every p-curvature entry of the form ``C / f^p``, ``deg C <= d*p``."""
    f, a = _scaled_companion(op)
    return max([f.degree] + [e.degree for row in a for e in row])


def _polynomial_powers(op: DiffOp, count: int) -> Tuple[Polynomial, List[List[List[Polynomial]]]]:
    """
    ``C_k = f^k B_k`` for ``k = 0 .. count``.

    ``C_{k+1} = f C_k' - k f' C_k + A C_k`` keeps everything polynomial.
    """
    f, a = _scaled_companion(op)
    n = len(a)
    field = op.field
    df = f.derivative()
    one, zero = Polynomial(field, [1]), Polynomial(field)
    c = [[one if i == j else zero for j in range(n)] for i in range(n)]
    out = [c]
    for k in range(count):
        nxt = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = f * c[i][j].derivative() - df * c[i][j] * k
                for t in range(n):
                    if not a[i][t].is_zero() and not c[t][j].is_zero():
                        acc = acc + a[i][t] * c[t][j]
                row.append(acc)
            nxt.append(row)
        c = nxt
        out.append(c)
    return f, out


def connection_powers(op: DiffOp, count: int) -> List[Matrix]:
    """Matrices ``B_0 .. B_count`` of the powers of ``Y -> Y' + B Y``."""
    f, powers = _polynomial_powers(op, count)
    out = []
    for k, c in enumerate(powers):
        den = f ** k
        out.append(_freeze([[RationalFunction(e, den) for e in row] for row in c]))
    return out


# -- three p-curvature algorithms -----------------------------------------


def pcurvature_recurrence(op: DiffOp) -> PCurvatureMatrix:
    """p-curvature by iterating ``B_{k+1} = B_k' + B B_k`` p times."""
    p = _require_prime_field(op)
    f, powers = _polynomial_powers(op, p)
    den = f ** p
    entries = _freeze([[RationalFunction(e, den) for e in row] for row in powers[p]])
    return PCurvatureMatrix(p, entries, PCurvatureMethod.RECURRENCE)


def pcurvature_order1_closed_form(b: RationalFunction) -> RationalFunction:
    """p-curvature of ``Dx + b``: ``b^(p-1) + b^p``."""
    p = b.field.characteristic
    if not p:
        raise ValidationError("Closed form needs a prime field", field="prime")
    return b.nth_derivative(p - 1) + b ** p


def pcurvature_via_remainders(op: DiffOp) -> PCurvatureMatrix:
    """
    p-curvature read off ``rem(Dx^(p+i), L)``.

    Entry ``(i, j)`` is minus the coefficient of ``Dx^j`` in the remainder of
    ``Dx^(p+i)``.
    """
    p = _require_prime_field(op)
    n = op.order
    remainders = dx_power_remainders(op, p + n - 1)
    rows = [[-remainders[p + i].coefficient(j) for j in range(n)] for i in range(n)]
    return PCurvatureMatrix(p, _freeze(rows), PCurvatureMethod.REMAINDERS)


def _local_betas(monic: DiffOp, a: int, p: int) -> List[flint.nmod_mat]:
    """Taylor coefficients of ``B(t + a)`` modulo ``t^p`` as scalar matrices."""
    n = monic.order
    columns = []
    for j in range(n):
        shifted = monic.coefficient(j).taylor_shift(a)
        series = TruncatedSeries.from_rational_function(shifted, p)
        columns.append([int(c) for c in series.coefficients])
    betas = []
    for k in range(p):
        rows = [[0] * n for _ in range(n)]
        if k == 0:
            for i in range(n - 1):
                rows[i][i + 1] = p - 1
        for j in range(n):
            rows[n - 1][j] = columns[j][k]
        betas.append(flint.nmod_mat(rows, p))
    return betas


def _divided_power_solution(
    betas: Sequence[flint.nmod_mat], count: int, p: int
) -> List[flint.nmod_mat]:
    """
    Coefficients ``s_k`` of ``S = sum s_k gamma_k`` solving ``S' = -B S``, ``S(0) = I``.

    ``s_{k+1} = -sum_j C(k, j) j! beta_j s_{k-j}`` over ``j < p``.
    """
    n = betas[0].nrows()
    ident = flint.nmod_mat([[1 if i == j else 0 for j in range(n)] for i in range(n)], p)
    s = [ident]
    for k in range(count - 1):
        acc = flint.nmod_mat(n, n, p)
        for j in range(min(k, p - 1) + 1):
            weight = comb(k, j) * factorial(j) % p
            if weight:
                acc = acc + betas[j] * s[k - j] * weight
        s.append(acc * (p - 1))
    return s


def _series_inverse(coeffs: Sequence[flint.nmod_mat], p: int) -> List[flint.nmod_mat]:
    """Inverse modulo ``t^len`` of a matrix series with identity constant term."""
    v = [coeffs[0]]
    for k in range(1, len(coeffs)):
        acc = coeffs[1] * v[k - 1]
        for j in range(2, k + 1):
            acc = acc + coeffs[j] * v[k - j]
        v.append(acc * (p - 1))
    return v


def default_sample_points(op: DiffOp, count: int) -> List[int]:
    """First ``count`` points ``0, 1, 2, ...`` of GF(p) that are not poles."""
    p = op.field.characteristic
    f = monicize(op).common_denominator()
    points = [a for a in range(p) if f.evaluate(a) != 0]
    if len(points) < count:
        raise NotEnoughSamplePoints(count, len(points), p)
    return points[:count]


def pcurvature_local_series_crt(
    op: DiffOp, points: Optional[Iterable[int]] = None
) -> PCurvatureMatrix:
    """
    p-curvature from local solutions at sample points.

    At each point ``a`` the divided-power solution ``S`` gives
    ``B_p(t + a) = -S^(p) S^-1 mod t^p``; the numerators ``f^p B_p`` are then
    glued by Chinese remaindering over ``(x - a)^p``.

    Raises:
        NotEnoughSamplePoints: fewer regular points than the degree bound needs
        PoleAtSamplePoint: a supplied point is a pole of the companion matrix
    """
    p = _require_prime_field(op)
    monic = monicize(op)
    n = monic.order
    f = monic.common_denominator()
    needed = degree_bound(op) + 1
    if points is None:
        chosen = default_sample_points(op, needed)
    else:
        chosen = sorted({int(a) % p for a in points})
        for a in chosen:
            if f.evaluate(a) == 0:
                raise PoleAtSamplePoint(f"Sample point {a} is a pole", point=a)
        if len(chosen) < needed:
            raise NotEnoughSamplePoints(needed, len(chosen), p)

    field = op.field
    x = Polynomial.x(field)
    residues: List[List[List[Polynomial]]] = [[[] for _ in range(n)] for _ in range(n)]
    moduli = []
    for a in chosen:
        betas = _local_betas(monic, a, p)
        s = _divided_power_solution(betas, 2 * p, p)
        ordinary = [s[k] * int(pow(factorial(k), -1, p)) for k in range(p)]
        derived = [s[k + p] * int(pow(factorial(k), -1, p)) for k in range(p)]
        inverse = _series_inverse(ordinary, p)
        scale = int(f.evaluate(a))
        local = []
        for k in range(p):
            acc = derived[0] * inverse[k]
            for j in range(1, k + 1):
                acc = acc + derived[j] * inverse[k - j]
            local.append(acc * ((p - scale) % p))
        for i in range(n):
            for j in range(n):
                poly = Polynomial(field, [int(local[k][i, j]) for k in range(p)])
                residues[i][j].append(poly.taylor_shift(-a))
        moduli.append((x - a) ** p)
        logger.debug("Local p-curvature at a=%s (p=%s) computed", a, p)

    den = f ** p
    rows = [
        [RationalFunction(crt_polynomials(residues[i][j], moduli), den) for j in range(n)]
        for i in range(n)
    ]
    return PCurvatureMatrix(p, _freeze(rows), PCurvatureMethod.LOCAL_SERIES_CRT)


def compute_pcurvature(
    op: DiffOp,
    method: PCurvatureMethod = PCurvatureMethod.RECURRENCE,
    points: Optional[Iterable[int]] = None,
) -> PCurvatureMatrix:
    """Dispatch on the requested algorithm."""
    if method is PCurvatureMethod.REMAINDERS:
        return pcurvature_via_remainders(op)
    if method is PCurvatureMethod.LOCAL_SERIES_CRT:
        return pcurvature_local_series_crt(op, points)
    if method is PCurvatureMethod.CLOSED_FORM:
        p = _require_prime_field(op)
        if op.order != 1:
            raise ValidationError("Closed form applies to order 1 only", field="method")
        b = monicize(op).coefficient(0)
        return PCurvatureMatrix(
            p, ((pcurvature_order1_closed_form(b),),), PCurvatureMethod.CLOSED_FORM
        )
    return pcurvature_recurrence(op)


# -- characteristic polynomial and Cartier's lemma ------------------------


def pcurvature_charpoly(matrix: PCurvatureMatrix) -> Tuple[RationalFunction, ...]:
    """``det(lambda I - B_p)``, coefficients lowest degree first."""
    return tuple(hessenberg_charpoly(matrix.entries))


def _charpoly_is_nilpotent(charpoly: Sequence[RationalFunction]) -> bool:
    return all(c.is_zero() for c in charpoly[:-1])


def _coefficient_bound(op: DiffOp) -> int:
    monic = monicize(op)
    bound = max(
        max(c.numerator.degree, c.denominator.degree) for c in monic.coefficients
    )
    return max(bound, 1)


def polynomial_solution_space(op: DiffOp, degree_limit: int) -> List[Polynomial]:
    """GF(p)-basis of polynomial solutions of degree below ``degree_limit``."""
    p = op.field.characteristic
    coeffs = op.polynomial_coefficients()
    out_degree = degree_limit + max(c.degree for c in coeffs)
    rows = [[0] * degree_limit for _ in range(out_degree)]
    for k in range(degree_limit):
        falling = 1
        for i, a in enumerate(coeffs):
            if i:
                falling = falling * (k - i + 1) % p
            if not falling or k < i:
                break
            for e, c in enumerate(a.python_coefficients()):
                if c:
                    rows[k - i + e][k] = (rows[k - i + e][k] + falling * c) % p
    basis = nullspace_mod_p(rows, degree_limit, p)
    return [Polynomial(op.field, vec) for vec in basis]


def _independent_solutions(candidates: Sequence[Polynomial], n: int) -> List[Polynomial]:
    """Greedy choice of ``n`` candidates independent over GF(p)(x^p)."""
    chosen: List[Polynomial] = []
    for cand in sorted(candidates, key=lambda q: (q.degree, q.python_coefficients())):
        trial = chosen + [cand.monic()]
        if polynomial_matrix_rank(wronskian_rows(trial)) == len(trial):
            chosen = trial
            if len(chosen) == n:
                break
    return chosen


def cartier_test(op: DiffOp, with_witness: bool = True) -> PCurvatureReport:
    """
    Classify the p-curvature of ``op`` and attach a witness.

    Zero p-curvature comes with ``n`` polynomial solutions of degree below
    ``p*d``; otherwise the nonzero remainder of ``Dx^p`` is returned.
    """
    p = _require_prime_field(op)
    n = op.order
    matrix = pcurvature_recurrence(op)
    if matrix.is_zero():
        field = op.field
        lam = tuple(
            RationalFunction.one(field) if i == n else RationalFunction.zero(field)
            for i in range(n + 1)
        )
        d = _coefficient_bound(op)
        basis: Tuple[Polynomial, ...] = ()
        if with_witness:
            basis = tuple(_independent_solutions(polynomial_solution_space(op, p * d), n))
        return PCurvatureReport(
            prime=p,
            status=PCurvatureStatus.ZERO,
            charpoly=lam,
            matrix=matrix,
            polynomial_basis=basis,
            degree_bound=p * d,
        )

    charpoly = pcurvature_charpoly(matrix)
    status = (
        PCurvatureStatus.NILPOTENT_NONZERO
        if _charpoly_is_nilpotent(charpoly)
        else PCurvatureStatus.NONZERO
    )
    remainder = dx_power_remainders(op, p)[p] if with_witness else None
    return PCurvatureReport(
        prime=p, status=status, charpoly=charpoly, matrix=matrix, remainder=remainder
    )


# -- solution matrices ----------------------------------------------------


def fundamental_matrix_at(op: DiffOp, a: int) -> Matrix:
    """
    ``U_a = sum_{k<p} (-1)^k (x-a)^k / k! * B_k(x)``.

    Raises:
        NonzeroPCurvature: the p-curvature does not vanish
        PoleAtBasePoint: ``a`` is a pole of the companion matrix
    """
    p = _require_prime_field(op)
    f = monicize(op).common_denominator()
    if f.evaluate(a) == 0:
        raise PoleAtBasePoint(f"Base point {a} is a pole", point=a)
    if not pcurvature_recurrence(op).is_zero():
        raise NonzeroPCurvature(p)
    field = op.field
    n = op.order
    powers = connection_powers(op, p - 1)
    shift = Polynomial(field, [-a, 1])
    total = [[RationalFunction.zero(field)] * n for _ in range(n)]
    weight = Polynomial(field, [1])
    for k, bk in enumerate(powers):
        if k:
            weight = weight * shift * field.scalar(Fraction(-1, k))
        w = RationalFunction(weight)
        for i in range(n):
            for j in range(n):
                if not bk[i][j].is_zero():
                    total[i][j] = total[i][j] + w * bk[i][j]
    return _freeze(total)


def hurwitz_fundamental_solution(op: DiffOp, truncation: int) -> List[List[HurwitzSeries]]:
    """
    Divided-power fundamental solution ``S`` with ``S' = -B S`` and ``S(0) = I``.

    Raises:
        PoleAtOrigin: the companion matrix has a pole at 0
        TruncationTooSmall: ``truncation < p``
    """
    p = _require_prime_field(op)
    if truncation < p:
        raise TruncationTooSmall(truncation, p)
    monic = monicize(op)
    if monic.common_denominator().evaluate(0) == 0:
        raise PoleAtOrigin("Companion matrix has a pole at the origin", point=0)
    n = monic.order
    s = _divided_power_solution(_local_betas(monic, 0, p), truncation, p)
    return [
        [HurwitzSeries(p, [int(s[k][i, j]) for k in range(truncation)]) for j in range(n)]
        for i in range(n)
    ]


def divided_power_relation_holds(op: DiffOp, truncation: int) -> bool:
    """Check ``S^(p) = -B_p S`` on the divided-power solution to ``truncation``."""
    p = op.field.characteristic
    s = hurwitz_fundamental_solution(op, truncation)
    n = len(s)
    bp = pcurvature_recurrence(op).entries
    order = truncation - p
    for i in range(n):
        for j in range(n):
            lhs = s[i][j].derivative(p)
            rhs = HurwitzSeries(p, [], order)
            for t in range(n):
                entry = HurwitzSeries.from_power_series(
                    TruncatedSeries.from_rational_function(bp[i][t], order)
                )
                rhs = rhs + entry * s[t][j].truncate(order)
            if lhs != -rhs:
                return False
    return True


# -- series relations -----------------------------------------------------


def order1_series_congruence(b: RationalFunction, count: int) -> SeriesCongruenceResult:
    """
    Check ``u_n = u_{(n+1)p-1}`` for ``n < count`` on the expansion of ``b``.

    This is the coefficientwise form of ``b^(p-1) + b^p = 0``.
    """
    p = b.field.characteristic
    if not p:
        raise ValidationError("Series congruence needs a prime field", field="prime")
    series = TruncatedSeries.from_rational_function(b, count * p)
    u = series.coefficients
    for m in range(count):
        if u[m] != u[(m + 1) * p - 1]:
            return SeriesCongruenceResult(False, count, m)
    return SeriesCongruenceResult(True, count)


def _char0_solution(op: DiffOp, terms: int) -> List[List[List[Fraction]]]:
    """Coefficients ``S_0 .. S_terms`` of ``S' = -B S``, ``S(0) = I`` over QQ."""
    monic = monicize(op)
    n = monic.order
    columns = [
        [Fraction(c) for c in TruncatedSeries.from_rational_function(
            monic.coefficient(j), terms + 1).python_coefficients()]
        for j in range(n)
    ]

    def beta(k: int, i: int, j: int) -> Fraction:
        if i == n - 1:
            return columns[j][k]
        return Fraction(-1) if (k == 0 and j == i + 1) else Fraction(0)

    s = [[[Fraction(int(i == j)) for j in range(n)] for i in range(n)]]
    for m in range(terms):
        nxt = [[Fraction(0)] * n for _ in range(n)]
        for k in range(m + 1):
            prev = s[m - k]
            for i in range(n):
                for t in range(n):
                    bk = beta(k, i, t)
                    if not bk:
                        continue
                    for j in range(n):
                        nxt[i][j] -= bk * prev[t][j]
        s.append([[v / (m + 1) for v in row] for row in nxt])
    return s


def char0_series_relations(op: DiffOp, p: int, terms: int) -> Char0RelationsReport:
    """
    Compare the characteristic-0 fundamental solution with the p-curvature.

    Reports the congruence ``p! S_p = (-1)^p B_p(0) mod p``, the bound
    ``v_p(S_i) >= -v_p(i!)`` and, when the p-curvature vanishes, the stronger
    ``v_p(S_i) >= -v_p(floor(i/p)!)``.
    """
    if op.field != QQ:
        raise ValidationError("Operator must be over QQ", field="operator")
    if terms < p:
        raise TruncationTooSmall(terms, p)
    monic = monicize(op)
    if monic.common_denominator().evaluate(0) == 0:
        raise PoleAtOrigin("Companion matrix has a pole at the origin", point=0)
    reduced = reduce_op_mod_p(op, p)
    bp = pcurvature_recurrence(reduced)
    try:
        bp0 = [[int(e.evaluate(0)) for e in row] for row in bp.entries]
    except PoleEvaluation as exc:
        raise PoleAtOrigin("p-curvature has a pole at the origin", point=0) from exc

    s = _char0_solution(op, terms)
    sign = -1 if p % 2 else 1
    congruence = True
    for i, row in enumerate(s[p]):
        for j, v in enumerate(row):
            scaled = v * factorial(p)
            if scaled.denominator % p == 0 or (scaled.numerator * pow(scaled.denominator, -1, p) - sign * bp0[i][j]) % p:
                congruence = False

    valuations: List[Optional[int]] = []
    factorial_ok, frobenius_ok = True, True
    for i, mat in enumerate(s):
        vals = [p_valuation(v, p) for row in mat for v in row if v]
        low = min(vals) if vals else None
        valuations.append(low)
        if low is None:
            continue
        if low < -factorial_valuation(i, p):
            factorial_ok = False
        if low < -factorial_valuation(i // p, p):
            frobenius_ok = False

    zero = bp.is_zero()
    return Char0RelationsReport(
        prime=p,
        terms=terms,
        sign=sign,
        congruence_holds=congruence,
        pcurvature_zero=zero,
        factorial_bound_holds=factorial_ok,
        frobenius_bound_holds=frobenius_ok if zero else None,
        valuations=tuple(valuations),
    )
