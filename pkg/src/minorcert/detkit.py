"""Determinant engines over any integral-domain scalar.

``det_cofactor`` is the brute-force oracle (Laplace expansion, order <= 7).
``det_bareiss`` is the production engine: one-step fraction-free elimination
whose every intermediate division is exact over an integral domain, so one
code path serves ints, rationals and polynomials; floating matrices run the
same sweep with magnitude pivoting.  ``det_condensation`` iterates the 2x2
condensation recurrence

    det(M_{k+1} block) * interior = m11*m22 - m12*m21

and rescues any entry whose interior divisor vanishes by calling Bareiss on
the corresponding block, so it returns the true determinant on every input.
``adjugate`` (cofactor transpose, computed minor by minor so it stays exact
on singular and polynomial matrices) and the all-ones quadratic form
``s_functional`` sit on top.
"""

from __future__ import annotations

from .matrix import Matrix, max_abs
from .ring import exact_div, is_floating

__all__ = [
    "COFACTOR_CAP",
    "DET_ALGOS",
    "adjugate",
    "det",
    "det_bareiss",
    "det_cofactor",
    "det_condensation",
    "s_functional",
]

COFACTOR_CAP = 7
_FLOAT_PIVOT_REL = 1e-12


def _require_square(a: Matrix):
    if not a.is_square:
        raise ValueError(f"determinant needs a square matrix, got {a.rows}x{a.cols}")


def _is_floating_matrix(a: Matrix) -> bool:
    return any(is_floating(x) for x in a.entries())


def det_cofactor(a: Matrix):
    """Laplace expansion along the first row; the exponential-time oracle."""
    _require_square(a)
    if a.rows > COFACTOR_CAP:
        raise ValueError(
            f"cofactor oracle is capped at order {COFACTOR_CAP}, got {a.rows}"
        )
    return _laplace(a.to_rows())


def _laplace(rows):
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    acc = 0
    first = rows[0]
    rest = rows[1:]
    for j, pivot in enumerate(first):
        sub = [r[:j] + r[j + 1:] for r in rest]
        term = pivot * _laplace(sub)
        acc = acc - term if j % 2 else acc + term
    return acc


def det_bareiss(a: Matrix):
    """Fraction-free (Bareiss) determinant.

    Exact scalars: first nonzero pivot with row swaps, every division exact
    (a remainder raises ExactDivisionError, i.e. a ring-contract bug).
    Floating scalars: magnitude pivoting; a pivot column below
    1e-12 * max|entry| is treated as singular.
    """
    _require_square(a)
    n = a.rows
    if n == 0:
        return 1
    rows = a.to_rows()
    if n == 1:
        return rows[0][0]
    floating = _is_floating_matrix(a)
    tol = _FLOAT_PIVOT_REL * max(abs(x) for r in rows for x in r) if floating else None
    sign = 1
    prev = 1
    for k in range(n - 1):
        if floating:
            pr = max(range(k, n), key=lambda r: abs(rows[r][k]))
            if abs(rows[pr][k]) <= tol:
                return rows[0][0] * 0
        else:
            pr = next((r for r in range(k, n) if rows[r][k]), None)
            if pr is None:
                return 0
        if pr != k:
            rows[k], rows[pr] = rows[pr], rows[k]
            sign = -sign
        pk = rows[k][k]
        base = rows[k]
        for i in range(k + 1, n):
            ri = rows[i]
            rik = ri[k]
            if floating:
                for j in range(k + 1, n):
                    ri[j] = (pk * ri[j] - rik * base[j]) / prev
            else:
                for j in range(k + 1, n):
                    ri[j] = exact_div(pk * ri[j] - rik * base[j], prev)
        prev = pk
    result = rows[n - 1][n - 1]
    return -result if sign < 0 else result


def det_condensation(a: Matrix):
    """Iterated 2x2 condensation with a Bareiss rescue for zero interiors."""
    _require_square(a)
    n = a.rows
    if n == 0:
        return 1
    floating = _is_floating_matrix(a)
    tol = _FLOAT_PIVOT_REL * max_abs(a) if floating else None
    cur = a.to_rows()
    prev = None
    k = 1  # cur[i][j] = det of the k x k block at 1-based (i+1, j+1)
    while len(cur) > 1:
        s = len(cur) - 1
        nxt = [[None] * s for _ in range(s)]
        for i in range(s):
            for j in range(s):
                num = cur[i][j] * cur[i + 1][j + 1] - cur[i][j + 1] * cur[i + 1][j]
                if prev is None:
                    nxt[i][j] = num
                    continue
                d = prev[i + 1][j + 1]
                degenerate = abs(d) <= tol if floating else not d
                if degenerate:
                    nxt[i][j] = det_bareiss(a.block(k + 1, i + 1, j + 1))
                elif floating:
                    nxt[i][j] = num / d
                else:
                    nxt[i][j] = exact_div(num, d)
        prev, cur = cur, nxt
        k += 1
    return cur[0][0]


def adjugate(a: Matrix) -> Matrix:
    """Transpose of the cofactor matrix: adj(A)_{ij} = (-1)^{i+j} det of A
    with row j and column i deleted; satisfies A adj(A) = det(A) I."""
    _require_square(a)
    n = a.rows
    if n == 0:
        raise ValueError("adjugate needs order >= 1")
    if n == 1:
        return Matrix(1, 1, [1])
    rows = a.to_rows()
    out = []
    for i in range(n):
        for j in range(n):
            sub = [r[:i] + r[i + 1:] for p, r in enumerate(rows) if p != j]
            minor = det_bareiss(Matrix.from_rows(sub))
            out.append(-minor if (i + j) % 2 else minor)
    return Matrix(n, n, out)


def s_functional(x: Matrix):
    """Sum of all adjugate entries (the all-ones quadratic form of adj(X))."""
    acc = 0
    for e in adjugate(x).entries():
        acc = acc + e
    return acc


def det(a: Matrix, algo: str = "bareiss"):
    try:
        return DET_ALGOS[algo](a)
    except KeyError:
        raise ValueError(f"unknown determinant algorithm {algo!r}") from None


DET_ALGOS = {
    "cofactor": det_cofactor,
    "bareiss": det_bareiss,
    "condensation": det_condensation,
}
