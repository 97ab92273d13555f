"""Dense immutable matrices over Z and Q, plus the two multiplication routines.

Columns are the primary objects (lattice generators), so every matrix can be
built from and iterated by columns; storage is row-major tuples.
"""

from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import DimensionMismatch

Vector = Tuple


class Matrix:
    """Immutable dense ``nrows x ncols`` matrix.

    A matrix may have zero columns (an empty basis), but always knows its row
    count.
    """

    __slots__ = ("_rows", "nrows", "ncols", "_cols")

    _coerce = staticmethod(lambda v: v)

    def __init__(self, rows: Iterable[Sequence], ncols: Optional[int] = None):
        rows = tuple(tuple(self._coerce(v) for v in r) for r in rows)
        if ncols is None:
            if not rows:
                raise DimensionMismatch("cannot infer column count of an empty matrix")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatch("ragged rows: expected %d entries, got %d" % (ncols, len(r)))
        self._rows = rows
        self.nrows = len(rows)
        self.ncols = ncols
        self._cols = None

    @classmethod
    def from_columns(cls, cols: Iterable[Sequence], nrows: Optional[int] = None):
        cols = [tuple(c) for c in cols]
        if nrows is None:
            if not cols:
                raise DimensionMismatch("cannot infer row count without columns")
            nrows = len(cols[0])
        for c in cols:
            if len(c) != nrows:
                raise DimensionMismatch("column of length %d, expected %d" % (len(c), nrows))
        if not cols:
            return cls([()] * nrows, ncols=0)
        return cls(zip(*cols), ncols=len(cols))

    @classmethod
    def identity(cls, n: int):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int):
        return cls([[0] * ncols for _ in range(nrows)], ncols=ncols)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def rows(self) -> Tuple[Tuple, ...]:
        return self._rows

    @property
    def columns(self) -> Tuple[Tuple, ...]:
        if self._cols is None:
            self._cols = tuple(zip(*self._rows)) if self.nrows else ((),) * self.ncols
        return self._cols

    def row(self, i: int) -> Tuple:
        return self._rows[i]

    def column(self, j: int) -> Tuple:
        return self.columns[j]

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def transpose(self):
        return type(self).from_columns(self._rows, nrows=self.ncols)

    @property
    def T(self):
        return self.transpose()

    def select_columns(self, idx: Sequence[int]):
        return type(self).from_columns([self.column(j) for j in idx], nrows=self.nrows)

    def select_rows(self, idx: Sequence[int]):
        return type(self)([self._rows[i] for i in idx], ncols=self.ncols)

    def hstack(self, other: "Matrix"):
        if other.nrows != self.nrows:
            raise DimensionMismatch("hstack: row counts %d and %d" % (self.nrows, other.nrows))
        return type(self)([a + b for a, b in zip(self._rows, other._rows)],
                          ncols=self.ncols + other.ncols)

    def max_norm(self):
        """Largest absolute entry (0 for an empty matrix)."""
        return max((abs(v) for r in self._rows for v in r), default=0)

    def is_integral(self) -> bool:
        return all(Fraction(v).denominator == 1 for r in self._rows for v in r)

    def tolist(self) -> List[List]:
        return [list(r) for r in self._rows]

    def __matmul__(self, other: "Matrix"):
        return naive_matmul(self, other)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash((self.shape, self._rows))

    def __repr__(self):
        return "%s(%r)" % (type(self).__name__, self.tolist())


class IntMatrix(Matrix):
    __slots__ = ()
    _coerce = staticmethod(int)


class RatMatrix(Matrix):
    __slots__ = ()
    _coerce = staticmethod(Fraction)

    def common_denominators(self) -> Tuple[int, ...]:
        """Per-column lcm of the entry denominators."""
        from .arith import lcm_many
        return tuple(lcm_many(v.denominator for v in c) for c in self.columns)


def _check_inner(M: Matrix, N: Matrix):
    if M.ncols != N.nrows:
        raise DimensionMismatch("cannot multiply %dx%d by %dx%d" % (M.shape + N.shape))


def naive_matmul(M: Matrix, N: Matrix) -> Matrix:
    """Schoolbook product; result type follows the entries."""
    _check_inner(M, N)
    cols = N.columns
    rows = [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in M.rows]
    if isinstance(M, IntMatrix) and isinstance(N, IntMatrix):
        return IntMatrix(rows, ncols=N.ncols)
    return RatMatrix(rows, ncols=N.ncols)


def _split_signs(rows):
    pos = [[v if v > 0 else 0 for v in r] for r in rows]
    neg = [[-v if v < 0 else 0 for v in r] for r in rows]
    return pos, neg


def _nonneg_xadic_product(M: List[List[int]], Ncols: List[List[int]], shift: int, width: int):
    """``M @ N`` for non-negative ``M`` (rows) and ``N`` (columns), base ``2**shift``."""
    nrows = len(M)
    mask = (1 << shift) - 1
    # (target column, digit position, digit column) for every nonzero digit column
    pieces = []
    for j, col in enumerate(Ncols):
        col = list(col)
        pos = 0
        while any(col):
            digits = [v & mask for v in col]
            if any(digits):
                pieces.append((j, pos, digits))
            col = [v >> shift for v in col]
            pos += 1

    out = [[0] * len(Ncols) for _ in range(nrows)]
    for start in range(0, len(pieces), width):
        block = pieces[start:start + width]
        for i, mrow in enumerate(M):
            orow = out[i]
            for j, pos, digits in block:
                s = sum(a * b for a, b in zip(mrow, digits))
                if s:
                    orow[j] += s << (shift * pos)
    return out


def xadic_matmul(M: Matrix, N: Matrix, block_exponent: int = 1) -> IntMatrix:
    """Integer product ``M @ N`` via the X-adic expansion of ``N``.

    ``X`` is the smallest power of two exceeding ``max|M|``.  ``N`` is cut into
    base-``X`` digit columns (all-zero digit columns are dropped), the digit
    columns are multiplied by ``M`` in blocks of ``a**block_exponent`` columns
    and the partial products are recombined with the matching powers of ``X``.
    Signs are handled by splitting both factors into non-negative parts.
    """
    _check_inner(M, N)
    if block_exponent < 1:
        raise ValueError("block_exponent must be >= 1")
    # X = 2**shift > max|M|; base 2 at least so the expansion terminates
    shift = max(1, int(M.max_norm()).bit_length())
    width = max(1, M.ncols ** block_exponent)

    Mp, Mm = _split_signs(M.rows)
    Np, Nm = _split_signs(N.columns)
    out = [[0] * N.ncols for _ in range(M.nrows)]
    for Ms, s1 in ((Mp, 1), (Mm, -1)):
        if not any(any(r) for r in Ms):
            continue
        for Ns, s2 in ((Np, 1), (Nm, -1)):
            if not any(any(c) for c in Ns):
                continue
            part = _nonneg_xadic_product(Ms, Ns, shift, width)
            sign = s1 * s2
            for orow, prow in zip(out, part):
                for j, v in enumerate(prow):
                    orow[j] += sign * v
    return IntMatrix(out, ncols=N.ncols)
