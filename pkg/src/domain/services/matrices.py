"""Dense matrices over rational-function and polynomial rings."""

from __future__ import annotations

from typing import Any, Callable, List, Sequence

import flint

from ..entities import Polynomial, RationalFunction
from ..value_objects import Field


MutableMatrix = List[List[Any]]


def identity(field: Field, n: int) -> MutableMatrix:
    one, zero = RationalFunction.one(field), RationalFunction.zero(field)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def zeros(field: Field, n: int) -> MutableMatrix:
    zero = RationalFunction.zero(field)
    return [[zero] * n for _ in range(n)]


def mat_mul(a: Sequence[Sequence[Any]], b: Sequence[Sequence[Any]]) -> MutableMatrix:
    n, m, k = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        for j in range(k):
            acc = None
            for t in range(m):
                if a[i][t].is_zero() or b[t][j].is_zero():
                    continue
                term = a[i][t] * b[t][j]
                acc = term if acc is None else acc + term
            row.append(acc if acc is not None else a[i][0] * 0)
        out.append(row)
    return out


def mat_add(a: Sequence[Sequence[Any]], b: Sequence[Sequence[Any]]) -> MutableMatrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_map(fn: Callable[[Any], Any], a: Sequence[Sequence[Any]]) -> MutableMatrix:
    return [[fn(x) for x in row] for row in a]


def mat_derivative(a: Sequence[Sequence[Any]]) -> MutableMatrix:
    return mat_map(lambda e: e.derivative(), a)


def is_zero_matrix(a: Sequence[Sequence[Any]]) -> bool:
    return all(e.is_zero() for row in a for e in row)


def transpose(a: Sequence[Sequence[Any]]) -> MutableMatrix:
    return [list(col) for col in zip(*a)]


def hessenberg_charpoly(matrix: Sequence[Sequence[RationalFunction]]) -> List[RationalFunction]:
    """
    Characteristic polynomial ``det(X*I - M)``, coefficients lowest degree first.

    Reduces to upper Hessenberg form by similarity transforms, then expands
    the determinant along last columns.
    """
    n = len(matrix)
    if n == 0:
        raise ValueError("Empty matrix")
    field = matrix[0][0].field
    h = [list(row) for row in matrix]
    for m in range(1, n - 1):
        pivot = next((i for i in range(m, n) if not h[i][m - 1].is_zero()), None)
        if pivot is None:
            continue
        if pivot != m:
            h[pivot], h[m] = h[m], h[pivot]
            for row in h:
                row[pivot], row[m] = row[m], row[pivot]
        t = h[m][m - 1]
        for i in range(m + 1, n):
            if h[i][m - 1].is_zero():
                continue
            u = h[i][m - 1] / t
            for j in range(n):
                h[i][j] = h[i][j] - u * h[m][j]
            for j in range(n):
                h[j][m] = h[j][m] + u * h[j][i]

    zero, one = RationalFunction.zero(field), RationalFunction.one(field)
    polys: List[List[RationalFunction]] = [[one]]
    for m in range(n):
        prev = polys[m]
        # (X - h_mm) * p_{m}
        nxt = [zero] * (m + 2)
        for d, c in enumerate(prev):
            nxt[d + 1] = nxt[d + 1] + c
            nxt[d] = nxt[d] - h[m][m] * c
        product = one
        for i in range(m - 1, -1, -1):
            product = product * h[i + 1][i]
            if product.is_zero():
                break
            factor = h[i][m] * product
            if factor.is_zero():
                continue
            for d, c in enumerate(polys[i]):
                nxt[d] = nxt[d] - factor * c
        polys.append(nxt)
    return polys[n]


def _bareiss(rows: Sequence[Sequence[Polynomial]]) -> tuple[int, List[List[Polynomial]]]:
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    if not nrows:
        return 0, m
    field = m[0][0].field
    prev = Polynomial(field, [1])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if not m[r][col].is_zero()), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        lead = m[rank][col]
        for r in range(rank + 1, nrows):
            below = m[r][col]
            for c in range(col + 1, ncols):
                m[r][c] = (lead * m[r][c] - below * m[rank][c]).exact_div(prev)
            m[r][col] = Polynomial(field)
        prev = lead
        rank += 1
        if rank == nrows:
            break
    return rank, m


def polynomial_matrix_rank(rows: Sequence[Sequence[Polynomial]]) -> int:
    """Exact rank over the fraction field, by fraction-free elimination."""
    return _bareiss(rows)[0]


def wronskian_rows(polys: Sequence[Polynomial]) -> List[List[Polynomial]]:
    """Rows ``f, f', ..., f^(k-1)`` for ``k = len(polys)``."""
    rows = [list(polys)]
    for _ in range(1, len(polys)):
        rows.append([f.derivative() for f in rows[-1]])
    return rows


def nullspace_mod_p(rows: Sequence[Sequence[int]], ncols: int, p: int) -> List[List[int]]:
    """Basis of the right kernel of an integer matrix read modulo ``p``."""
    if not rows:
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    mat = flint.nmod_mat([[int(v) % p for v in row] for row in rows], p)
    basis, nullity = mat.nullspace()
    return [[int(basis[i, j]) for i in range(ncols)] for j in range(int(nullity))]
