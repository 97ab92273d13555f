"""Reproducible random generator matrices with a prescribed rank."""

import random
from typing import Optional

from .linalg import rank as matrix_rank
from .matrix import IntMatrix


def random_instance(d: int, n: int, max_entry: int, seed: int, rank: Optional[int] = None,
                    shuffle: bool = True) -> IntMatrix:
    """``d x n`` integer matrix with entries in ``[-max_entry, max_entry]`` and
    exactly the requested rank (default ``min(d, n)``).

    ``rank`` independent columns are drawn by rejection sampling; the
    remaining columns are random in-bound vectors (full rank) or small
    integral combinations of the independent ones (lower rank).  The same
    seed always yields the same matrix.
    """
    if rank is None:
        rank = min(d, n)
    if not 0 <= rank <= min(d, n):
        raise ValueError("rank %d impossible for a %dx%d matrix" % (rank, d, n))
    if max_entry < 1 and rank > 0:
        raise ValueError("max_entry must be >= 1 for a nonzero rank")
    rng = random.Random(seed)

    def vec():
        return [rng.randint(-max_entry, max_entry) for _ in range(d)]

    if rank == 0:
        return IntMatrix.zeros(d, n)
    while True:
        base = [vec() for _ in range(rank)]
        if matrix_rank(IntMatrix.from_columns(base, nrows=d)) == rank:
            break
    extra = []
    while len(extra) < n - rank:
        if rank == d:
            extra.append(vec())
            continue
        coef = [rng.randint(-2, 2) for _ in range(rank)]
        v = [sum(c * b[i] for c, b in zip(coef, base)) for i in range(d)]
        if max(map(abs, v)) <= max_entry:
            extra.append(v)
    cols = base + extra
    if shuffle:
        rng.shuffle(cols)
    return IntMatrix.from_columns(cols, nrows=d)
