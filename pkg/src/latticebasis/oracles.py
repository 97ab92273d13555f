"""Brute-force ground truth for small instances.

Nothing here shares code with the basis algorithms beyond the exact
determinant/solver kernels: parallelepiped points are found by scanning a
bounding box, lattice determinants by the gcd of all maximal minors.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import comb, gcd, prod
from typing import List, Optional, Sequence, Tuple

from .arith import lcm_many
from .errors import RankDeficient, TooLarge
from .linalg import det, find_independent_columns, find_independent_rows, solve_exact
from .matrix import IntMatrix, Matrix

DEFAULT_ENUMERATION_CAP = 10 ** 5
DEFAULT_MINOR_CAP = 20_000


@dataclass(frozen=True)
class ParallelepipedCensus:
    """Integer points of the half-open parallelepiped spanned by ``basis``.

    ``coordinates[k]`` is the solution ``x`` with ``basis @ x == points[k]``.
    """

    basis: IntMatrix
    points: Tuple[Tuple[int, ...], ...]
    coordinates: Tuple[Tuple[Fraction, ...], ...]

    @property
    def count(self) -> int:
        return len(self.points)


def _adjugate_and_det(M: IntMatrix):
    """Integer ``adj(M)`` and ``det(M)`` via ``det * M^{-1}``."""
    D = det(M)
    inv = solve_exact(M, IntMatrix.identity(M.nrows))
    adj = [[int(v * D) for v in r] for r in inv.rows]
    return adj, D


def enumerate_parallelepiped(Bp: Matrix, cap: int = DEFAULT_ENUMERATION_CAP) -> ParallelepipedCensus:
    """All integer points ``Bp @ x`` with ``x`` in ``[0,1)^j``.

    Points are scanned in the bounding box of the parallelepiped projected onto
    ``j`` independent rows; a candidate is kept iff its coordinates lie in
    ``[0,1)`` and the unprojected point is integral.  ``TooLarge`` is raised
    when the box holds more than ``cap`` candidates.
    """
    Bp = IntMatrix(Bp.rows, ncols=Bp.ncols)
    j = Bp.ncols
    d = Bp.nrows
    if j == 0:
        return ParallelepipedCensus(Bp, ((0,) * d,), ((),))
    if len(find_independent_columns(Bp)) != j:
        raise RankDeficient("enumerate_parallelepiped: columns are dependent")
    rows = find_independent_rows(Bp)
    Bh = Bp.select_rows(rows)
    adj, D = _adjugate_and_det(Bh)
    # W = Bp @ adj(Bh): Bp @ x == W @ p_hat / D
    W = [[sum(b * adj[k][c] for k, b in enumerate(brow)) for c in range(j)] for brow in Bp.rows]

    ranges = []
    for r in Bh.rows:
        lo = sum(v for v in r if v < 0)
        hi = sum(v for v in r if v > 0)
        ranges.append(range(lo, hi + 1))
    if prod(len(rg) for rg in ranges) > cap:
        raise TooLarge("bounding box holds %d candidates (cap %d)"
                       % (prod(len(rg) for rg in ranges), cap))

    absD = abs(D)
    points, coords = [], []
    for ph in product(*ranges):
        num = [sum(a * p for a, p in zip(arow, ph)) for arow in adj]
        if D < 0:
            num = [-v for v in num]
        # x = num / |D| must lie in [0, 1)
        if any(v < 0 or v >= absD for v in num):
            continue
        full = [sum(w * p for w, p in zip(wrow, ph)) for wrow in W]
        if any(v % D for v in full):
            continue
        points.append(tuple(v // D for v in full))
        coords.append(tuple(Fraction(v, absD) for v in num))
    return ParallelepipedCensus(Bp, tuple(points), tuple(coords))


def fractionality_bruteforce(Bp: Matrix, i: int, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    """Largest reduced denominator of coordinate ``i`` (0-based) over the
    integer points of the parallelepiped.

    The denominators form a cyclic group's orders, so the max equals the lcm;
    the lcm is returned and checked against the max.
    """
    census = enumerate_parallelepiped(Bp, cap=cap)
    dens = [x[i].denominator for x in census.coordinates]
    L = lcm_many(dens)
    assert L == max(dens)
    return L


def lattice_det_minor_gcd(A: Matrix) -> int:
    """gcd of the absolute values of all ``d x d`` minors of a ``d x n`` matrix.

    For full row rank this is the determinant of the lattice spanned by the
    columns.
    """
    d, n = A.shape
    g = 0
    for cols in combinations(range(n), d):
        g = gcd(g, det(A.select_columns(cols)))
        if g == 1:
            break
    if g == 0:
        raise RankDeficient("lattice_det_minor_gcd: rank(A) < %d" % d)
    return g


@dataclass
class BasisCheck:
    """Verdict of :func:`is_basis_of`; truthy iff the basis is confirmed."""

    ok: bool
    det_basis: int
    det_lattice: Optional[int]
    failing_columns: List[int] = field(default_factory=list)
    membership_only: bool = False

    def __bool__(self):
        return self.ok

    def describe(self) -> str:
        if self.failing_columns:
            return "generators not in lattice of basis: %s" % self.failing_columns
        if self.det_lattice is None:
            return "membership ok (determinant check skipped)"
        if self.det_basis != self.det_lattice:
            return "|det| mismatch: basis %d, lattice %d" % (self.det_basis, self.det_lattice)
        return "basis confirmed (|det| = %d)" % self.det_basis


def is_basis_of(S: Matrix, A: Matrix, minor_cap: Optional[int] = None) -> BasisCheck:
    """Check ``L(S) == L(A)`` for square nonsingular ``S``.

    Every column of ``A`` must be an integral combination of ``S`` and
    ``|det S|`` must equal the minor-gcd of ``A``.  If ``A`` has more than
    ``minor_cap`` maximal minors only the membership half is checked and the
    verdict is flagged ``membership_only``.
    """
    X = solve_exact(S, A)
    failing = [j for j, c in enumerate(X.columns) if any(v.denominator != 1 for v in c)]
    dS = abs(det(S))
    d, n = A.shape
    if minor_cap is not None and comb(n, d) > minor_cap:
        return BasisCheck(not failing, dS, None, failing, membership_only=True)
    dL = lattice_det_minor_gcd(A)
    return BasisCheck(not failing and dS == dL, dS, dL, failing)


def is_basis_of_projected(S: Matrix, A: Matrix, rows: Sequence[int],
                          minor_cap: Optional[int] = None) -> BasisCheck:
    """:func:`is_basis_of` for a rank-deficient ``A`` with ``S`` of full column rank.

    ``rows`` must select ``S.ncols`` rows on which ``S`` is nonsingular.  The
    projected check is run and, additionally, every column of ``A`` must be
    reproduced exactly in all rows by the same integral coefficients.
    """
    S = IntMatrix(S.rows, ncols=S.ncols)
    A = IntMatrix(A.rows, ncols=A.ncols)
    if S.ncols == 0:
        zero = all(v == 0 for r in A.rows for v in r)
        return BasisCheck(zero, 1, 1 if zero else None, [] if zero else list(range(A.ncols)))
    Sp, Ap = S.select_rows(rows), A.select_rows(rows)
    check = is_basis_of(Sp, Ap, minor_cap=minor_cap)
    X = solve_exact(Sp, Ap)
    bad = [j for j, (x, a) in enumerate(zip(X.columns, A.columns))
           if any(sum(s * xi for s, xi in zip(srow, x)) != ai for srow, ai in zip(S.rows, a))]
    if bad:
        check.ok = False
        check.failing_columns = sorted(set(check.failing_columns) | set(bad))
    return check
