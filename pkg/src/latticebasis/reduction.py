"""Post-processing that shortens the columns of ``S = B @ Y``.

Each column ``y`` of ``Y`` is rounded to ``y - E`` with ``E`` in ``{0,1}^d``
chosen greedily so that the running sum ``B (y - E)`` stays short (vector
balancing).  The diagonal of ``Y`` is untouched, so the lattice is preserved.
All norms are compared as exact rational squared norms.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import InvariantViolation
from .euclid_fast import BasisResult, basis_from_coefficients
from .matrix import IntMatrix, Matrix, RatMatrix


def _sqnorm(v) -> Fraction:
    return sum((x * x for x in v), Fraction(0))


@dataclass(frozen=True)
class BalanceChoice:
    column: int
    rounding: Tuple[int, ...]
    partial_sqnorms: Tuple[Fraction, ...]


def balance_column(B: Matrix, y: Sequence[Fraction]) -> Tuple[int, ...]:
    """Greedy 0/1 rounding ``E`` of ``y`` keeping ``||B (y - E)||_2`` small.

    Coordinates are decided in order; ``E_j`` minimizes the squared norm of the
    partial sum ``w + (y_j - E_j) B_j`` (ties pick 0).  The result satisfies
    ``||B(y-E)||^2 <= sum_j y_j (1 - y_j) ||B_j||^2``.
    """
    return balance_column_traced(B, y).rounding


def balance_column_traced(B: Matrix, y: Sequence[Fraction], column: int = -1) -> BalanceChoice:
    if len(y) != B.ncols:
        raise ValueError("balance_column: %d coefficients for %d columns" % (len(y), B.ncols))
    w = [Fraction(0)] * B.nrows
    E, norms = [], []
    for yj, bj in zip(y, B.columns):
        yj = Fraction(yj)
        keep = [wi + yj * b for wi, b in zip(w, bj)]
        drop = [wi + (yj - 1) * b for wi, b in zip(w, bj)]
        nk, nd = _sqnorm(keep), _sqnorm(drop)
        if nd < nk:
            E.append(1)
            w, n = drop, nd
        else:
            E.append(0)
            w, n = keep, nk
        norms.append(n)
    return BalanceChoice(column, tuple(E), tuple(norms))


def reduce_basis(B: Matrix, Y: Matrix, pivot_order: Optional[Sequence[int]] = None) -> IntMatrix:
    """Shorter basis ``B @ Y'`` of the same lattice as ``B @ Y``.

    ``Y`` must be lower triangular once its rows are permuted by
    ``pivot_order`` (default: identity), with diagonal entries 1 or at most
    1/2, as produced by :func:`fast_basis`.  Columns with diagonal 1 become
    the pivot's unit vector; the others are balanced in pivot order, which
    forces the rounding of the diagonal entry to 0.
    """
    B = IntMatrix(B.rows, ncols=B.ncols)
    Y = RatMatrix(Y.rows, ncols=Y.ncols)
    r = Y.ncols
    order = list(pivot_order) if pivot_order is not None else list(range(r))
    Bp = B.select_columns(order)

    cols: List[List[Fraction]] = []
    for i, y in enumerate(Y.columns):
        piv = order[i]
        diag = y[piv]
        if diag == 1:
            cols.append([Fraction(int(k == piv)) for k in range(r)])
            continue
        if not 0 < diag <= Fraction(1, 2):
            raise InvariantViolation("diagonal entry %s of column %d is neither 1 nor <= 1/2" % (diag, i))
        E = balance_column(Bp, [y[k] for k in order])
        new = list(y)
        for pos, e in zip(order, E):
            new[pos] -= e
        if new[piv] != diag:
            raise InvariantViolation("balancing changed diagonal entry of column %d" % i)
        cols.append(new)
    Yp = RatMatrix.from_columns(cols, nrows=r) if r else RatMatrix([], ncols=0)
    S = basis_from_coefficients(B, Yp)
    return S


def reduce_result(result: BasisResult) -> IntMatrix:
    return reduce_basis(result.B, result.Y, result.pivot_order)


def column_sqnorms(M: Matrix) -> Tuple[int, ...]:
    return tuple(sum(v * v for v in c) for c in M.columns)
