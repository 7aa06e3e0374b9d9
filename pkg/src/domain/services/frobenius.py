"""Frobenius method at the origin: indicial roots and logarithm detection."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from ..entities import DiffOp, ExponentReport, LocalLogsReport, Polynomial, TruncatedSeries
from ..exceptions import IrregularSingularPoint, UnsupportedOrder, ValidationError
from ..value_objects import QQ
from .arithmetic import nonlinear_factors, rational_roots, squarefree_decomposition
from .ore import monicize

logger = logging.getLogger(__name__)

MAX_ORDER = 4
LEADING_TERMS = 6

LinearForm = Dict[int, Fraction]
"""Coefficient as ``{parameter: weight}``; parameter 0 is the constant 1."""


def _falling(r: Fraction, i: int) -> Fraction:
    out = Fraction(1)
    for t in range(i):
        out *= r - t
    return out


class _EulerForm:
    """``x^n L`` written as ``sum_i q_i(x) (x^i Dx^i)`` with ``q_i`` expanded at 0."""

    def __init__(self, op: DiffOp, terms: int) -> None:
        monic = monicize(op)
        n = monic.order
        x = Polynomial.x(QQ)
        self.order = n
        self.q: List[List[Fraction]] = []
        for i in range(n + 1):
            c = monic.coefficient(i)
            shifted = c * x ** (n - i)
            if not shifted.is_regular_at(0):
                raise IrregularSingularPoint(
                    f"Coefficient of Dx^{i} has a pole of order above {n - i} at 0", point=0
                )
            series = TruncatedSeries.from_rational_function(shifted, terms)
            self.q.append([Fraction(v) for v in series.python_coefficients()])
        self.ordinary = all(monic.coefficient(i).is_regular_at(0) for i in range(n))

    def shifted_indicial(self, j: int, r: Fraction) -> Fraction:
        """``Q_j(r) = sum_i q_{i,j} r^(i)``."""
        return sum((self.q[i][j] * _falling(r, i) for i in range(self.order + 1)), Fraction(0))

    def indicial_polynomial(self) -> Polynomial:
        r = Polynomial.x(QQ)
        total = Polynomial(QQ)
        for i in range(self.order + 1):
            falling = Polynomial(QQ, [1])
            for t in range(i):
                falling = falling * (r - t)
            total = total + falling * self.q[i][0]
        return total


def _solve_consistent(constraints: Sequence[LinearForm]) -> bool:
    """Whether ``form == 0`` for every constraint has a solution in the free parameters."""
    rows = [dict(c) for c in constraints if any(c.values())]
    pivots: List[Tuple[int, LinearForm]] = []
    for row in rows:
        for var, prow in pivots:
            if row.get(var):
                factor = row[var] / prow[var]
                for k, v in prow.items():
                    row[k] = row.get(k, Fraction(0)) - factor * v
        row = {k: v for k, v in row.items() if v}
        free = [k for k in row if k != 0]
        if not free:
            if row.get(0):
                return False
            continue
        pivots.append((min(free), row))
    return True


def _attempt_log_free(form: _EulerForm, root: Fraction, terms: int) -> Tuple[bool, Tuple[Fraction, ...]]:
    """Try ``x^root * sum c_m x^m`` with ``c_0 = 1`` to ``terms`` coefficients."""
    coefficients: List[LinearForm] = [{0: Fraction(1)}]
    constraints: List[LinearForm] = []
    next_param = 1
    for m in range(1, terms):
        rhs: LinearForm = {}
        for j in range(1, m + 1):
            weight = form.shifted_indicial(j, root + m - j)
            if not weight:
                continue
            for var, v in coefficients[m - j].items():
                rhs[var] = rhs.get(var, Fraction(0)) - weight * v
        lead = form.shifted_indicial(0, root + m)
        if lead:
            coefficients.append({k: v / lead for k, v in rhs.items() if v})
        else:
            constraints.append(rhs)
            coefficients.append({next_param: Fraction(1)})
            next_param += 1
    consistent = _solve_consistent(constraints)
    leading = tuple(c.get(0, Fraction(0)) for c in coefficients[:LEADING_TERMS])
    return consistent, leading


def local_logs_at_zero(op: DiffOp, slack: int = 10) -> LocalLogsReport:
    """
    Decide whether the local solutions at 0 involve logarithms.

    Logs are forced by a repeated indicial root or by a resonance (roots at
    integer distance) whose linear constraint cannot be met.

    Raises:
        IrregularSingularPoint: 0 fails the Fuchs criterion
        UnsupportedOrder: order above 4
    """
    if op.field != QQ:
        raise ValidationError("Operator must be over QQ", field="operator")
    n = op.order
    if n < 1:
        raise ValidationError("Operator must have order at least 1", field="operator")
    if n > MAX_ORDER:
        raise UnsupportedOrder(n, MAX_ORDER)

    leading_form = _EulerForm(op, 1)
    indicial = leading_form.indicial_polynomial()
    roots = rational_roots(indicial)
    irrational = tuple(nonlinear_factors(indicial))
    repeated = any(m > 1 for _, m in squarefree_decomposition(indicial))

    gaps = [
        int(b - a) for a in roots for b in roots
        if b > a and (b - a).denominator == 1
    ]
    examined = max(gaps, default=0) + slack
    form = _EulerForm(op, examined + 1)

    exponents = []
    obstructed = False
    for root in roots:
        log_free, leading = _attempt_log_free(form, root, examined + 1)
        obstructed = obstructed or not log_free
        exponents.append(ExponentReport(root, log_free, leading if log_free else ()))

    logs = repeated or obstructed
    logger.debug("Indicial polynomial %s, roots %s, logs=%s", indicial, roots, logs)
    return LocalLogsReport(
        ordinary=form.ordinary,
        logs_present=logs,
        indicial_polynomial=indicial,
        rational_roots=tuple(roots),
        irrational_factors=irrational,
        exponents=tuple(exponents),
        order_examined=examined,
    )

