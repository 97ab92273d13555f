"""Fraction-free exact linear algebra over Z.

All routines use Bareiss-style elimination so intermediate values stay
integral (they are minors of the input) and divisions are exact.
"""

from fractions import Fraction
from typing import List

from .errors import DimensionMismatch, SingularMatrix
from .matrix import IntMatrix, Matrix, RatMatrix


def det(M: Matrix) -> int:
    """Exact determinant of a square integer matrix (Bareiss)."""
    n = M.nrows
    if M.ncols != n:
        raise DimensionMismatch("det of non-square %dx%d matrix" % M.shape)
    if n == 0:
        return 1
    a = M.tolist()
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        p = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            f = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * p - f * rk[j]) // prev
        prev = p
    return sign * a[n - 1][n - 1]


def solve_exact(B: Matrix, C: Matrix) -> RatMatrix:
    """Solve ``B X = C`` exactly for square nonsingular integer ``B``.

    Fraction-free Gauss-Jordan on ``[B | C]``: on exit every diagonal entry
    equals ``+-det(B)`` and the right-hand block holds ``+-det(B) * X``.
    Any other exact solver with this contract can be swapped in here.
    """
    d = B.nrows
    if B.ncols != d:
        raise DimensionMismatch("solve_exact: B is %dx%d, not square" % B.shape)
    if C.nrows != d:
        raise DimensionMismatch("solve_exact: B has %d rows, C has %d" % (d, C.nrows))
    m = C.ncols
    a = [list(rb) + list(rc) for rb, rc in zip(B.rows, C.rows)]
    width = d + m
    prev = 1
    for k in range(d):
        if a[k][k] == 0:
            for i in range(k + 1, d):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    break
            else:
                raise SingularMatrix("solve_exact: singular coefficient matrix")
        rk = a[k]
        p = rk[k]
        for i in range(d):
            if i == k:
                continue
            ri = a[i]
            f = ri[k]
            for j in range(width):
                ri[j] = (ri[j] * p - f * rk[j]) // prev
        prev = p
    return RatMatrix([[Fraction(v, r[i]) for v in r[d:]] for i, r in enumerate(a)], ncols=m)


def _echelon_pivots(rows: List[List[int]], ncols: int) -> List[int]:
    """Pivot columns of a fraction-free row echelon form (left-to-right scan)."""
    a = [list(r) for r in rows]
    nrows = len(a)
    pivots = []
    r, prev = 0, 1
    for c in range(ncols):
        if r == nrows:
            break
        for i in range(r, nrows):
            if a[i][c] != 0:
                break
        else:
            continue
        a[r], a[i] = a[i], a[r]
        rr = a[r]
        p = rr[c]
        for i in range(r + 1, nrows):
            ri = a[i]
            f = ri[c]
            for j in range(c + 1, ncols):
                ri[j] = (ri[j] * p - f * rr[j]) // prev
            ri[c] = 0
        prev = p
        pivots.append(c)
        r += 1
    return pivots


def find_independent_columns(A: Matrix) -> List[int]:
    """Indices of a maximal linearly independent set of columns.

    A column is kept iff it is independent of the columns kept before it, so
    the result is the lexicographically first column basis.
    """
    return _echelon_pivots(A.tolist(), A.ncols)


def find_independent_rows(B: Matrix) -> List[int]:
    return _echelon_pivots(B.T.tolist(), B.nrows)


def rank(A: Matrix) -> int:
    return len(find_independent_columns(A))


def solve_integral(B: Matrix, C: Matrix) -> IntMatrix:
    """Like :func:`solve_exact` but raise if the solution is not integral."""
    X = solve_exact(B, C)
    if not X.is_integral():
        raise ValueError("solution is not integral")
    return IntMatrix(X.rows, ncols=X.ncols)
