"""Reference generalized Euclidean algorithm (modulo + exchange steps).

Starting from ``d`` independent generators ``B``, every remaining generator
``c`` is reduced modulo the parallelepiped of ``B``.  If ``B^{-1} c`` is
integral ``c`` is dropped; otherwise the reduced vector replaces a basis
column whose coordinate was fractional and the old column goes back into the
queue.  With nearest-integer rounding on the exchanged coordinate, ``|det B|``
at least halves on every exchange.
"""

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Callable, List, Optional, Sequence, Tuple

from .arith import round_nearest
from .errors import InvariantViolation, RankDeficient
from .linalg import det, find_independent_columns, solve_exact
from .matrix import IntMatrix, Matrix

NEAREST = "nearest"
FLOOR = "floor"


@dataclass(frozen=True)
class ExchangeStep:
    column: Tuple[int, ...]
    solution: Tuple[Fraction, ...]
    pivot: Optional[int]  # None: the column was already in the lattice of B
    det_before: int
    det_after: int

    @property
    def is_exchange(self) -> bool:
        return self.pivot is not None


@dataclass
class ExchangeTrace:
    steps: List[ExchangeStep] = field(default_factory=list)
    initial_det: int = 0

    @property
    def exchanges(self) -> List[ExchangeStep]:
        return [s for s in self.steps if s.is_exchange]

    @property
    def exchange_count(self) -> int:
        return len(self.exchanges)


def choose_fractional_index(x: Sequence[Fraction]) -> Optional[int]:
    """Smallest index with a non-integral entry, or None."""
    for i, v in enumerate(x):
        if Fraction(v).denominator != 1:
            return i
    return None


def _residue(B_cols, c, x, ell, rounding):
    """``c - (B_ell * round(x_ell) + sum_{j != ell} B_j * floor(x_j))``."""
    coef = []
    for j, v in enumerate(x):
        if j == ell and rounding == NEAREST:
            q = round_nearest(v)
        else:
            q = floor(v)
        rem = v - q
        lo, hi = (-Fraction(1, 2), Fraction(1, 2)) if (j == ell and rounding == NEAREST) else (0, 1)
        if not lo <= rem < hi:
            raise InvariantViolation("residue coordinate %d = %s outside [%s, %s)" % (j, rem, lo, hi))
        coef.append(q)
    return tuple(ci - sum(q * b[r] for q, b in zip(coef, B_cols)) for r, ci in enumerate(c))


def basic_basis(
    A: Matrix,
    rounding: str = NEAREST,
    observer: Optional[Callable[[List[Tuple[int, ...]], List[Tuple[int, ...]]], None]] = None,
) -> Tuple[IntMatrix, ExchangeTrace]:
    """Basis of the full-rank lattice spanned by the columns of ``A``.

    ``rounding`` selects how the exchanged coordinate is rounded: ``"nearest"``
    (floor(x + 1/2), guarantees the determinant halving) or ``"floor"``.
    Columns of ``C`` are processed first-in first-out and the pivot is the
    smallest fractional coordinate.  ``observer(B_columns, C_columns)`` is
    called before every step and once at the end.
    """
    if rounding not in (NEAREST, FLOOR):
        raise ValueError("rounding must be %r or %r" % (NEAREST, FLOOR))
    A = IntMatrix(A.rows, ncols=A.ncols)
    d = A.nrows
    idx = find_independent_columns(A)
    if len(idx) < d:
        raise RankDeficient("basic_basis: rank %d < %d rows" % (len(idx), d))
    chosen = set(idx)
    B_cols = [A.column(j) for j in idx]
    queue = deque(A.column(j) for j in range(A.ncols) if j not in chosen)

    cur = abs(det(IntMatrix.from_columns(B_cols, nrows=d)))
    trace = ExchangeTrace(initial_det=cur)
    while queue:
        if observer is not None:
            observer(list(B_cols), list(queue))
        c = queue.popleft()
        B = IntMatrix.from_columns(B_cols, nrows=d)
        x = solve_exact(B, IntMatrix.from_columns([c], nrows=d)).column(0)
        ell = choose_fractional_index(x)
        if ell is None:
            trace.steps.append(ExchangeStep(c, x, None, cur, cur))
            continue
        r = _residue(B_cols, c, x, ell, rounding)
        queue.append(B_cols[ell])
        B_cols[ell] = r
        new = abs(det(IntMatrix.from_columns(B_cols, nrows=d)))
        if new == 0 or new >= cur:
            raise InvariantViolation("exchange did not shrink |det|: %d -> %d" % (cur, new))
        trace.steps.append(ExchangeStep(c, x, ell, cur, new))
        cur = new
    if observer is not None:
        observer(list(B_cols), [])
    return IntMatrix.from_columns(B_cols, nrows=d), trace
