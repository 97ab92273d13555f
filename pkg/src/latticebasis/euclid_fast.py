"""Fast generalized Euclidean algorithm.

Instead of exchanging one residue at a time, each outer iteration fixes a
pivot coordinate ``ell`` and runs the one-dimensional extended Euclidean
algorithm on the *translates* (the ``ell``-th coordinates of all solution
vectors, written over their common denominator).  The resulting gcd
combination is a basis vector lying on the smallest translate; all remaining
generators are moved onto translate 0, i.e. into the span of the other basis
columns, and the next iteration continues there.

Solution entries are kept in ``[0, 1]`` throughout via :func:`altered_mod1`,
which bounds both intermediate numbers and the output basis.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Set, Tuple

from .arith import altered_mod1, ext_gcd, lcm_many
from .errors import InvariantViolation, RankDeficient
from .linalg import find_independent_columns, find_independent_rows, solve_exact
from .matrix import IntMatrix, Matrix, RatMatrix, xadic_matmul

log = logging.getLogger(__name__)

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class TranslateChain:
    """Translates of one pivot and the running gcds over them.

    ``gcds[0] == t`` and ``gcds[j] == gcd(t, t_1, ..., t_j)``;
    ``bezout[j-1] == (alpha_j, beta_j)`` with
    ``alpha_j * gcds[j-1] + beta_j * translates[j-1] == gcds[j]``.
    """

    pivot: int
    t: int
    translates: Tuple[int, ...]
    gcds: Tuple[int, ...]
    bezout: Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class IterationRecord:
    iteration: int
    pivot: int
    row_lcms: Dict[int, int]  # available row -> lcm of its denominators
    chain: TranslateChain


@dataclass
class FastStats:
    entries_checked: int = 0
    integers_mapped_to_one: int = 0
    max_denominator_bits: int = 0


@dataclass
class BasisResult:
    """Output of :func:`fast_basis` / :func:`lowrank_basis`.

    ``S == B @ Y``; column ``i`` of ``Y`` was produced in iteration ``i`` with
    pivot coordinate ``pivot_order[i]``.  For low-rank inputs ``Y`` is
    expressed in the coordinates of ``B`` restricted to ``projection_rows``.
    """

    B: IntMatrix
    Y: RatMatrix
    S: IntMatrix
    pivot_order: Tuple[int, ...]
    trace: List[IterationRecord]
    basis_columns: Tuple[int, ...]
    projection_rows: Tuple[int, ...]
    stats: FastStats = field(default_factory=FastStats)

    @property
    def rank(self) -> int:
        return self.S.ncols


def row_lcms(X: Matrix) -> Tuple[int, ...]:
    """Per row of ``X``: lcm of the entry denominators (1 for integral rows)."""
    return tuple(lcm_many(Fraction(v).denominator for v in r) for r in X.rows)


def choose_max_fractionality_pivot(X: Matrix, available: Sequence[int]) -> int:
    """Available row with the largest denominator lcm; ties go to the smaller index."""
    available = sorted(available)
    if not available:
        raise ValueError("no pivot available")
    lcms = row_lcms(X) if X.ncols else (1,) * X.nrows
    return max(available, key=lambda i: (lcms[i], -i))


def gcd_chain(t: int, translates: Sequence[int], pivot: int = -1) -> TranslateChain:
    if t < 1:
        raise ValueError("gcd_chain: t must be positive, got %d" % t)
    gcds = [t]
    bezout = []
    for tj in translates:
        g, alpha, beta = ext_gcd(gcds[-1], tj)
        gcds.append(g)
        bezout.append((alpha, beta))
    return TranslateChain(pivot, t, tuple(translates), tuple(gcds), tuple(bezout))


def translate_chain(X: Matrix, ell: int) -> TranslateChain:
    """Translates of the columns of ``X`` at coordinate ``ell``.

    The common denominator ``t`` is the lcm of row ``ell``; it doubles as the
    translate of the basis vector ``B_ell`` itself.
    """
    row = X.row(ell) if X.ncols else ()
    t = lcm_many(Fraction(v).denominator for v in row)
    translates = []
    for v in row:
        v = Fraction(v)
        translates.append(v.numerator * (t // v.denominator))
    return gcd_chain(t, translates, pivot=ell)


def update_solution_after_exchange(x: Sequence[Fraction], ell: int) -> Tuple[Fraction, ...]:
    """Coordinates of the old ``B_ell`` after ``B_ell`` is swapped for ``c = B x``.

    ``x_ell -> 1/x_ell`` and ``x_i -> -x_i/x_ell`` for ``i != ell``.
    """
    xl = Fraction(x[ell])
    if xl == 0:
        raise ZeroDivisionError("pivot coordinate is zero")
    return tuple(1 / xl if i == ell else -Fraction(v) / xl for i, v in enumerate(x))


def _exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise InvariantViolation("%d is not divisible by %d" % (a, b))
    return q


class _Reducer:
    """altered_mod1 with bookkeeping."""

    def __init__(self, stats: FastStats):
        self.stats = stats

    def __call__(self, q: Fraction) -> Fraction:
        if q.denominator == 1 and q and q != 1:
            self.stats.integers_mapped_to_one += 1
        return altered_mod1(q)

    def check(self, vec: Sequence[Fraction], what: str):
        st = self.stats
        for q in vec:
            if not (0 <= q <= 1) or q.denominator <= 0:
                raise InvariantViolation("%s entry %s outside [0, 1]" % (what, q))
            bits = q.denominator.bit_length()
            if bits > st.max_denominator_bits:
                st.max_denominator_bits = bits
        st.entries_checked += len(vec)


Observer = Callable[[str, dict], None]


def _euclid_core(Bh: IntMatrix, Ch: IntMatrix, observer: Optional[Observer] = None):
    """Run the pivot iterations on square ``Bh`` and generators ``Ch``.

    Returns ``(Y_columns, pivot_order, trace, stats)``.
    """
    d, m = Bh.nrows, Ch.ncols
    stats = FastStats()
    red = _Reducer(stats)

    X = [list(map(red, col)) for col in solve_exact(Bh, Ch).columns] if m else []
    for col in X:
        red.check(col, "X")
    if observer is not None:
        observer("solve", {"X": [tuple(c) for c in X]})

    available: Set[int] = set(range(d))
    pivots: List[int] = []
    Ycols: List[List[Fraction]] = []
    trace: List[IterationRecord] = []
    for it in range(d):
        Xmat = RatMatrix.from_columns(X, nrows=d) if m else RatMatrix.zeros(d, 1)
        lcms = row_lcms(Xmat)
        ell = max(sorted(available), key=lambda i: (lcms[i], -i))
        chain = translate_chain(Xmat, ell) if m else gcd_chain(1, (), pivot=ell)
        trace.append(IterationRecord(it, ell, {i: lcms[i] for i in sorted(available)}, chain))

        Z = [_ZERO] * d
        Z[ell] = _ONE
        for j in range(m):
            g_prev, g = chain.gcds[j], chain.gcds[j + 1]
            alpha, beta = chain.bezout[j]
            tj = chain.translates[j]
            a = _exact_div(g_prev, g)
            b = _exact_div(tj, g)
            Xj = X[j]
            Znew = [red(alpha * z + beta * x) for z, x in zip(Z, Xj)]
            X[j] = [red(a * x - b * z) for x, z in zip(Xj, Z)]
            Z = Znew
            red.check(Z, "Z")
            red.check(X[j], "X")
            if X[j][ell] != 0:
                raise InvariantViolation("generator %d not moved onto translate 0 at pivot %d" % (j, ell))
            if observer is not None:
                observer("update", {"pivot": ell, "j": j, "Z": tuple(Z), "X_j": tuple(X[j])})

        for p in pivots + [ell]:
            if any(col[p] != 0 for col in X):
                raise InvariantViolation("row %d of X is not zero after pivoting" % p)
        diag = Z[ell]
        if not (diag == 1 or (diag.numerator == 1 and diag.denominator >= 2)):
            raise InvariantViolation("diagonal entry %s is not 1/k" % diag)
        if any(Z[p] != 0 for p in pivots):
            raise InvariantViolation("Y column %d has entries in earlier pivot rows" % it)
        Ycols.append(Z)
        pivots.append(ell)
        available.discard(ell)
        if observer is not None:
            observer("pivot", {"iteration": it, "pivot": ell, "Y_i": tuple(Z)})
    if stats.integers_mapped_to_one:
        log.debug("altered_mod1 mapped %d nonzero integers to 1", stats.integers_mapped_to_one)
    return Ycols, tuple(pivots), trace, stats


def basis_from_coefficients(B: IntMatrix, Y: RatMatrix) -> IntMatrix:
    """``B @ Y`` for a rational ``Y`` whose product is integral.

    Each column of ``Y`` is scaled by its common denominator, the integral
    product is formed with :func:`xadic_matmul` and divided back.
    """
    if Y.ncols == 0:
        return IntMatrix.zeros(B.nrows, 0)
    dens = Y.common_denominators()
    Yint = IntMatrix.from_columns(
        [[int(v * D) for v in col] for col, D in zip(Y.columns, dens)], nrows=Y.nrows)
    P = xadic_matmul(B, Yint, block_exponent=1)
    cols = []
    for col, D in zip(P.columns, dens):
        cols.append([_exact_div(v, D) for v in col])
    return IntMatrix.from_columns(cols, nrows=B.nrows)


def _run(A: IntMatrix, idx, rows, observer):
    chosen = set(idx)
    B = A.select_columns(idx)
    C = A.select_columns([j for j in range(A.ncols) if j not in chosen])
    Bh, Ch = B.select_rows(rows), C.select_rows(rows)
    Ycols, pivots, trace, stats = _euclid_core(Bh, Ch, observer)
    r = len(idx)
    Y = RatMatrix.from_columns(Ycols, nrows=r) if r else RatMatrix([], ncols=0)
    S = basis_from_coefficients(B, Y)
    return BasisResult(B, Y, S, pivots, trace, tuple(idx), tuple(rows), stats)


def fast_basis(A: Matrix, observer: Optional[Observer] = None) -> BasisResult:
    """Basis ``S = B @ Y`` of the full-row-rank lattice spanned by ``A``'s columns."""
    A = IntMatrix(A.rows, ncols=A.ncols)
    idx = find_independent_columns(A)
    if len(idx) < A.nrows:
        raise RankDeficient("fast_basis: rank %d < %d rows; use lowrank_basis" % (len(idx), A.nrows))
    return _run(A, idx, list(range(A.nrows)), observer)


def lowrank_basis(A: Matrix, observer: Optional[Observer] = None) -> BasisResult:
    """Basis of the lattice of ``A`` for any rank; ``S`` has ``rank(A)`` columns.

    The algorithm runs on the rows selected by an independent row set of the
    chosen generators (a projection that is injective on their span) and the
    full basis is recovered as ``S = B @ Y``.
    """
    A = IntMatrix(A.rows, ncols=A.ncols)
    idx = find_independent_columns(A)
    if not idx:
        return BasisResult(IntMatrix.zeros(A.nrows, 0), RatMatrix([], ncols=0),
                           IntMatrix.zeros(A.nrows, 0), (), [], (), ())
    rows = find_independent_rows(A.select_columns(idx))
    return _run(A, idx, rows, observer)
