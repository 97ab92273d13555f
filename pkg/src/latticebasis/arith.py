"""Integer and rational primitives.

Integers are plain Python ``int`` (arbitrary precision) and rationals are
:class:`fractions.Fraction`, which is always kept in lowest terms with a
positive denominator.
"""

from fractions import Fraction
from functools import reduce
from math import floor, gcd, lcm
from typing import Iterable, Tuple

Rational = Fraction

_HALF = Fraction(1, 2)


def ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return ``(g, alpha, beta)`` with ``alpha*a + beta*b == g == gcd(a, b)``.

    ``g`` is non-negative; ``ext_gcd(0, 0) == (0, 0, 0)``.
    """
    if a == 0 and b == 0:
        return 0, 0, 0
    # x*a + y*b == g and nx*a + ny*b == ng hold throughout
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


def gcd_many(values: Iterable[int]) -> int:
    return reduce(gcd, values, 0)


def lcm_many(values: Iterable[int]) -> int:
    """Least common multiple of nonzero integers (1 for an empty input)."""
    values = list(values)
    if any(v == 0 for v in values):
        raise ValueError("lcm_many: zero entry")
    return abs(reduce(lcm, values, 1))


def frac_part(q: Fraction) -> Fraction:
    """``q - floor(q)``, always in ``[0, 1)``."""
    q = Fraction(q)
    return q - (q.numerator // q.denominator)


def altered_mod1(q: Fraction) -> Fraction:
    """Fractional part, except that nonzero integers map to 1 instead of 0."""
    q = Fraction(q)
    if q.denominator == 1:
        return Fraction(1) if q else Fraction(0)
    return q - (q.numerator // q.denominator)


def round_nearest(q: Fraction) -> int:
    """Nearest integer as ``floor(q + 1/2)``; halves round up."""
    return floor(Fraction(q) + _HALF)


def is_integral(q: Fraction) -> bool:
    return Fraction(q).denominator == 1
