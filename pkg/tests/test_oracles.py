import random
from fractions import Fraction
from itertools import product

import pytest

from latticebasis.errors import RankDeficient, TooLarge
from latticebasis.linalg import det
from latticebasis.matrix import IntMatrix
from latticebasis.oracles import (enumerate_parallelepiped, fractionality_bruteforce, is_basis_of,
                                  is_basis_of_projected, lattice_det_minor_gcd)

from conftest import cols


def test_enumerate_basis15(basis15):
    census = enumerate_parallelepiped(basis15)
    assert census.count == 15
    assert len(set(census.points)) == 15


def test_enumerate_identity():
    assert enumerate_parallelepiped(IntMatrix.identity(2)).points == ((0, 0),)


def test_enumerate_segment():
    assert enumerate_parallelepiped(cols((6, 3))).points == ((0, 0), (2, 1), (4, 2))


def test_enumerate_empty_basis():
    assert enumerate_parallelepiped(IntMatrix.zeros(3, 0)).count == 1


def test_enumerate_too_large():
    with pytest.raises(TooLarge):
        enumerate_parallelepiped(cols((1000, 0), (0, 1000)), cap=1000)


def test_enumerate_dependent_columns():
    with pytest.raises(RankDeficient):
        enumerate_parallelepiped(cols((1, 2), (2, 4)))


def test_enumeration_count_equals_det():
    rng = random.Random(4)
    for _ in range(60):
        n = rng.randint(1, 3)
        B = IntMatrix([[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)])
        D = abs(det(B))
        if D == 0:
            continue
        census = enumerate_parallelepiped(B)
        assert census.count == D
        for p, x in zip(census.points, census.coordinates):
            assert all(0 <= v < 1 for v in x)
            assert tuple(sum(b * xi for b, xi in zip(row, x)) for row in B.rows) == p


def test_enumeration_against_naive_scan():
    # independent check on a 3x2 basis: scan a box in all three coordinates
    B = cols((2, 1, 3), (0, 3, 1))
    lo = [sum(min(0, v) for v in r) for r in B.rows]
    hi = [sum(max(0, v) for v in r) for r in B.rows]
    found = set()
    for p in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        # x from the first two rows, then check the third
        x1 = Fraction(p[0], 2)
        x2 = Fraction(p[1] - x1, 3)
        if 0 <= x1 < 1 and 0 <= x2 < 1 and 3 * x1 + x2 == p[2]:
            found.add(p)
    assert set(enumerate_parallelepiped(B).points) == found


def test_fractionality_basis15(basis15):
    assert fractionality_bruteforce(basis15, 1) == 5
    assert fractionality_bruteforce(basis15, 0) == 15


def test_fractionality_identity():
    for i in range(3):
        assert fractionality_bruteforce(IntMatrix.identity(3), i) == 1


def test_fractionality_diagonal_two():
    B = cols((2, 0, 0), (0, 2, 0), (0, 0, 2))
    assert [fractionality_bruteforce(B, i) for i in range(3)] == [2, 2, 2]


def test_minor_gcd_examples(gens4):
    assert lattice_det_minor_gcd(gens4) == 1
    assert lattice_det_minor_gcd(IntMatrix([[12, 18]])) == 6
    assert lattice_det_minor_gcd(cols((2, 0, 0), (0, 2, 0), (0, 0, 2))) == 8
    with pytest.raises(RankDeficient):
        lattice_det_minor_gcd(cols((1, 2), (2, 4)))


def test_gens4_minors(gens4):
    minors = sorted(abs(det(gens4.select_columns(p))) for p in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert minors == sorted([27, 18, 12, 6, 16, 8])


def test_is_basis_of_examples():
    A = IntMatrix([[12, 18]])
    assert is_basis_of(IntMatrix([[6]]), A)
    assert is_basis_of(IntMatrix([[-6]]), A)
    check = is_basis_of(IntMatrix([[4]]), A)
    assert not check
    assert check.failing_columns == [1]
    check = is_basis_of(IntMatrix([[3]]), A)
    assert not check and check.det_basis == 3 and check.det_lattice == 6


def test_is_basis_of_membership_only(gens4):
    check = is_basis_of(IntMatrix.identity(2), gens4, minor_cap=2)
    assert check.ok and check.membership_only and check.det_lattice is None


def test_is_basis_of_projected():
    A = cols((4, 6, 8), (4, 6, 8), (2, 3, 4))
    assert is_basis_of_projected(cols((2, 3, 4)), A, [0])
    assert not is_basis_of_projected(cols((4, 6, 8)), A, [0])
    assert is_basis_of_projected(IntMatrix.zeros(2, 0), IntMatrix.zeros(2, 3), [])


def _lemma_holds(B):
    total = enumerate_parallelepiped(B).count
    for ell in range(B.ncols):
        rest = B.select_columns([k for k in range(B.ncols) if k != ell])
        if total != fractionality_bruteforce(B, ell) * enumerate_parallelepiped(rest).count:
            return False
    return True


def test_face_multiplicativity_examples(basis15):
    assert _lemma_holds(basis15)
    assert _lemma_holds(cols((6, 3)))
    assert _lemma_holds(cols((2, 1, 3), (0, 3, 1)))


def test_face_multiplicativity_random():
    rng = random.Random(99)
    seen = 0
    while seen < 25:
        n = rng.choice((2, 3))
        B = IntMatrix([[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)])
        if det(B) == 0:
            continue
        assert _lemma_holds(B)
        seen += 1
