"""
Arithmetic in the Ore ring K(x)<Dx>.

Multiplication follows ``Dx * r = r * Dx + r'``. Division is on the right:
``right_divmod(A, B)`` returns ``(Q, R)`` with ``A = Q * B + R``.
"""

from __future__ import annotations

from math import comb
from typing import List, Tuple, Union

from ..entities import DiffOp, RationalFunction, TruncatedSeries
from ..exceptions import BadReduction, DivisionByZeroOperator, ValidationError
from ..value_objects import GF


def _derivatives(value: RationalFunction, upto: int) -> List[RationalFunction]:
    out = [value]
    for _ in range(upto):
        out.append(out[-1].derivative())
    return out


def ore_mul(a: DiffOp, b: DiffOp) -> DiffOp:
    """Product ``a * b`` using ``Dx^i * c = sum_k C(i, k) c^(k) Dx^(i-k)``."""
    if a.field != b.field:
        raise ValidationError(f"Field mismatch: {a.field} vs {b.field}", field="field")
    if a.is_zero() or b.is_zero():
        return DiffOp(a.field)
    field = a.field
    zero = RationalFunction.zero(field)
    out = [zero] * (a.order + b.order + 1)
    derived = [_derivatives(bj, a.order) for bj in b.coefficients]
    for i, ai in enumerate(a.coefficients):
        if ai.is_zero():
            continue
        for j, ders in enumerate(derived):
            for k in range(i + 1):
                c = comb(i, k) % field.characteristic if field.characteristic else comb(i, k)
                if not c or ders[k].is_zero():
                    continue
                out[i - k + j] = out[i - k + j] + ai * ders[k] * c
    return DiffOp(field, out)


def _left_dx_power_times(coefficient: RationalFunction, shift: int, b: DiffOp) -> DiffOp:
    """``coefficient * Dx^shift * b``."""
    return ore_mul(DiffOp(b.field, [0] * shift + [coefficient]), b)


def right_divmod(a: DiffOp, b: DiffOp) -> Tuple[DiffOp, DiffOp]:
    """
    Euclidean division on the right.

    Returns ``(Q, R)`` with ``a = Q * b + R`` and ``order(R) < order(b)``.

    Raises:
        DivisionByZeroOperator: ``b`` is zero
    """
    if b.is_zero():
        raise DivisionByZeroOperator()
    field = a.field
    m = b.order
    lead = b.leading_coefficient
    quotient = DiffOp(field)
    remainder = a
    while not remainder.is_zero() and remainder.order >= m:
        shift = remainder.order - m
        t = remainder.leading_coefficient / lead
        remainder = remainder - _left_dx_power_times(t, shift, b)
        quotient = quotient + DiffOp(field, [0] * shift + [t])
    return quotient, remainder


def dx_power_remainders(op: DiffOp, upto: int) -> List[DiffOp]:
    """
    ``rem(Dx^k, op)`` for ``k = 0 .. upto``.

    Uses ``rem(Dx * R) = R' + Dx R`` with the top term folded back through the
    monic form of ``op``, one step per power.
    """
    if op.is_zero():
        raise DivisionByZeroOperator()
    field = op.field
    n = op.order
    if n == 0:
        return [DiffOp(field)] * (upto + 1)
    monic = monicize(op)
    b = [monic.coefficient(j) for j in range(n)]
    zero = RationalFunction.zero(field)
    current = [zero] * n
    out: List[DiffOp] = []
    for k in range(upto + 1):
        if k < n:
            current = [RationalFunction.one(field) if j == k else zero for j in range(n)]
        else:
            top = current[n - 1]
            nxt = []
            for j in range(n):
                r = current[j].derivative()
                if j:
                    r = r + current[j - 1]
                if not top.is_zero():
                    r = r - top * b[j]
                nxt.append(r)
            current = nxt
        out.append(DiffOp(field, current))
    return out


def apply_op(
    op: DiffOp, f: Union[RationalFunction, TruncatedSeries]
) -> Union[RationalFunction, TruncatedSeries]:
    """``sum a_i * f^(i)``; series results lose ``order(op)`` terms."""
    if isinstance(f, TruncatedSeries):
        n = max(op.order, 0)
        target = max(f.order - n, 0)
        total = TruncatedSeries(f.poly * 0, target)
        derived = f
        for i, c in enumerate(op.coefficients):
            if i:
                derived = derived.derivative()
            if c.is_zero():
                continue
            scale = TruncatedSeries.from_rational_function(c, target)
            total = total + scale * derived.truncate(target)
        return total
    total_rf = RationalFunction.zero(op.field)
    derived_rf = f
    for i, c in enumerate(op.coefficients):
        if i:
            derived_rf = derived_rf.derivative()
        total_rf = total_rf + c * derived_rf
    return total_rf


def reduce_op_mod_p(op: DiffOp, p: int) -> DiffOp:
    """
    Coefficientwise reduction of a QQ operator modulo ``p``.

    Raises:
        BadReduction: a coefficient does not reduce, or the leading
            coefficient reduces to zero
    """
    if op.field.is_prime_field:
        raise ValidationError("Operator is already over a prime field", field="op")
    reduced = []
    for i, c in enumerate(op.coefficients):
        try:
            reduced.append(c.reduce_mod(p))
        except BadReduction as exc:
            raise BadReduction(
                f"Coefficient of Dx^{i} does not reduce mod {p}",
                prime=p,
                coefficient_index=i,
                leading_degenerate=i == op.order,
            ) from exc
    if reduced and reduced[-1].is_zero():
        raise BadReduction(
            f"Leading coefficient vanishes mod {p}",
            prime=p,
            coefficient_index=op.order,
            leading_degenerate=True,
        )
    return DiffOp(GF(p), reduced)


def monicize(op: DiffOp) -> DiffOp:
    """Divide on the left by the leading coefficient."""
    if op.is_zero():
        raise DivisionByZeroOperator()
    if op.is_monic():
        return op
    inv = op.leading_coefficient.inverse()
    return op.left_scale(inv)
