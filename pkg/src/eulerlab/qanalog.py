"""Binomial polynomials, t-analogs, Stirling numbers, counting sequences.

Everything here returns exact integers or :class:`~eulerlab.mpoly.MPoly`
values.  The binomial helpers follow the falling-factorial definition,
so a negative upper argument is meaningful: for example the value of
``binom_poly(j, shift=-1)`` at 0 is ``(-1)**j``, not 0.  That sign is
load-bearing for the determinant recurrences in this package, which are
polynomial identities in the shifted argument and must hold at 0 too.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .mpoly import MPoly


def gen_binomial(a: int, j: int) -> int:
    """Binomial coefficient ``C(a, j)`` for any integer ``a``, ``j >= 0``."""
    if j < 0:
        raise ValueError("lower index must be nonnegative")
    num = 1
    for m in range(j):
        num *= a - m
    return num // factorial(j)


def binom_poly(j: int, shift: int = 0) -> MPoly:
    """``C(r + shift, j)`` as a polynomial in ``r`` with rational coefficients."""
    if j < 0:
        raise ValueError("lower index must be nonnegative")
    r = MPoly.variable("r")
    prod = MPoly.const(("r",), 1)
    for m in range(j):
        prod = prod * (r + (shift - m))
    return prod * Fraction(1, factorial(j))


def t_analog(m: int) -> MPoly:
    """The polynomial ``1 + t + ... + t**(m-1)``; zero when ``m == 0``."""
    if m < 0:
        raise ValueError("t-analog of a negative integer")
    return MPoly(("t",), {(i,): 1 for i in range(m)})


@lru_cache(maxsize=None)
def stirling2(m: int, k: int) -> int:
    """Stirling number of the second kind: partitions of an m-set into k blocks."""
    if m < 0 or k < 0:
        raise ValueError("negative argument")
    if m == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > m:
        return 0
    return k * stirling2(m - 1, k) + stirling2(m - 1, k - 1)


@lru_cache(maxsize=None)
def subfactorial(n: int) -> int:
    """Number of derangements of n letters."""
    if n < 0:
        raise ValueError("negative argument")
    if n == 0:
        return 1
    if n == 1:
        return 0
    return (n - 1) * (subfactorial(n - 1) + subfactorial(n - 2))


def fubini_number(n: int) -> int:
    """Number of ordered set partitions of an n-set."""
    if n < 0:
        raise ValueError("negative argument")
    return sum(factorial(k) * stirling2(n, k) for k in range(n + 1))
