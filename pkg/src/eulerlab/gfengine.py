"""Series-side identities for the joint descent/excedance polynomials.

The driving identity: summing A_n(s, t) * u**n / (1 - s)**(n + 1) over n
and regrouping by powers of s gives, for each exponent r, the closed
series

    g_r = (1 - t) * (1 - u*t)**r / ((1 - u) * ((1 - u)**r - t*(1 - u*t)**r))

so [u**n] g_r must equal sum_j [s**j] A_n * C(n + r - j, n).  The same
regrouping applied to the palindromic parts a_n produces a companion
series w_r, and the two telescope: g_r - (1 - u*t) * w_r == 1 for every
r.  :func:`verify_foata` checks all three statements coefficientwise at
a chosen truncation order, entirely in exact arithmetic.

Integer coefficient extraction (:func:`f_nkr` and its closed form) and
the binomial resummation used by the determinant route live here too.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .distributions import eulerian_st
from .mpoly import MPoly
from .qanalog import stirling2
from .series import USeries
from .symmetry import a_part
from .univariate import RatFunc, UPoly

_MAX_N = 9
_MAX_ORDER = 8

_T = RatFunc(UPoly((0, 1)))
_ONE_MINUS_T = RatFunc(UPoly((1, -1)))


def _joint(n: int) -> MPoly:
    if n == 0:
        return MPoly.const(("s", "t"), 1)
    return eulerian_st(n)


@lru_cache(maxsize=None)
def _pow_one_minus_u(r: int, order: int) -> USeries:
    """(1 - u)**r truncated; coefficients are rational constants."""
    return USeries(order, [Fraction((-1) ** j * comb(r, j))
                           for j in range(min(r, order) + 1)])


@lru_cache(maxsize=None)
def _pow_one_minus_ut(r: int, order: int) -> USeries:
    """(1 - u*t)**r truncated; coefficient of u**j is C(r, j)(-t)**j."""
    return USeries(order, [RatFunc(UPoly.term(j, (-1) ** j * comb(r, j)))
                           for j in range(min(r, order) + 1)])


def _joint_denominator(r: int, order: int) -> USeries:
    return (_pow_one_minus_u(r, order)
            - _pow_one_minus_ut(r, order).scale(_T))


def foata_term(r: int, order: int) -> USeries:
    """The series g_r, truncated at the given order in u."""
    if r < 0 or order < 0:
        raise ValueError("r and order must be nonnegative")
    num = _pow_one_minus_ut(r, order).scale(_ONE_MINUS_T)
    den = _joint_denominator(r, order) * _pow_one_minus_u(1, order)
    return num * den.inverse()


def a_series_term(r: int, order: int) -> USeries:
    """The companion series w_r carrying the palindromic parts."""
    if r < 0 or order < 0:
        raise ValueError("r and order must be nonnegative")
    num = _pow_one_minus_ut(r + 1, order) - _pow_one_minus_u(r + 1, order)
    den = (_pow_one_minus_u(1, order) * _pow_one_minus_ut(1, order)
           * _joint_denominator(r, order))
    return num * den.inverse()


def f_series(r: int, order: int) -> USeries:
    """Series whose u**n coefficient matches the determinant recurrence.

    Equals ((1-u)**(r-1) - t**2 (1-u*t)**(r-1)) / ((1-u)**r - t (1-u*t)**r);
    at r = 0 the negative powers are expanded as series inverses.
    """
    if r < 0 or order < 0:
        raise ValueError("r and order must be nonnegative")
    if r >= 1:
        left = _pow_one_minus_u(r - 1, order)
        right = _pow_one_minus_ut(r - 1, order)
    else:
        left = _pow_one_minus_u(1, order).inverse()
        right = _pow_one_minus_ut(1, order).inverse()
    num = left - right.scale(_T * _T)
    return num * _joint_denominator(r, order).inverse()


def _resummed_coeff(poly: MPoly, n: int, r: int) -> UPoly:
    """sum_j [s**j] poly * C(n + r - j, n) as a polynomial in t."""
    acc = UPoly()
    for j in range(poly.degree("s") + 1):
        slice_t = poly.coeff_of("s", j)
        if slice_t.is_zero():
            continue
        acc = acc + UPoly(slice_t.to_dense("t")) * comb(n + r - j, n)
    return acc


def lhs_coeff(n: int, r: int) -> UPoly:
    """[s**r u**n] of the assembled joint generating function, in t."""
    if n < 0 or r < 0:
        raise ValueError("n and r must be nonnegative")
    if n > _MAX_N:
        raise ValueError(f"n must be at most {_MAX_N}, got {n}")
    return _resummed_coeff(_joint(n), n, r)


def lhs_coeff_a(n: int, r: int) -> UPoly:
    """Same extraction applied to the palindromic parts a_n."""
    if n < 0 or r < 0:
        raise ValueError("n and r must be nonnegative")
    if n > _MAX_N:
        raise ValueError(f"n must be at most {_MAX_N}, got {n}")
    if n == 0:
        return UPoly()
    return _resummed_coeff(a_part(n), n, r)


@dataclass(frozen=True)
class FoataReport:
    max_order: int
    max_r: int
    joint_ok: bool
    a_ok: bool
    telescope_ok: bool
    passed: bool
    failures: tuple[str, ...]


def verify_foata(max_order: int, max_r: int) -> FoataReport:
    """Check the three series statements for all n <= max_order, r <= max_r."""
    if not 0 <= max_order <= _MAX_ORDER:
        raise ValueError(f"max_order must be in 0..{_MAX_ORDER}")
    if not 0 <= max_r <= _MAX_ORDER:
        raise ValueError(f"max_r must be in 0..{_MAX_ORDER}")
    failures: list[str] = []
    joint_ok = a_ok = telescope_ok = True
    one = USeries.constant(1, max_order)
    one_minus_ut = _pow_one_minus_ut(1, max_order)
    for r in range(max_r + 1):
        g = foata_term(r, max_order)
        w = a_series_term(r, max_order)
        for n in range(max_order + 1):
            got = g.coeff(n)
            if not got.is_polynomial():
                joint_ok = False
                failures.append(f"joint r={r} n={n}: non-polynomial {got!r}")
                continue
            want = lhs_coeff(n, r)
            if got.as_upoly() != want:
                joint_ok = False
                failures.append(
                    f"joint r={r} n={n}: series {got!r} vs direct {want!r}")
            got_a = w.coeff(n)
            if not got_a.is_polynomial():
                a_ok = False
                failures.append(f"a-part r={r} n={n}: non-polynomial {got_a!r}")
                continue
            want_a = lhs_coeff_a(n, r)
            if got_a.as_upoly() != want_a:
                a_ok = False
                failures.append(
                    f"a-part r={r} n={n}: series {got_a!r} vs direct {want_a!r}")
        if g - one_minus_ut * w != one:
            telescope_ok = False
            failures.append(f"telescope r={r}: g - (1-ut)w is not 1")
    passed = joint_ok and a_ok and telescope_ok
    return FoataReport(max_order=max_order, max_r=max_r, joint_ok=joint_ok,
                       a_ok=a_ok, telescope_ok=telescope_ok, passed=passed,
                       failures=tuple(failures))


# ----------------------------------------------------------------------
# integer coefficient extraction and its closed form

def f_nkr(n: int, k: int, r: int) -> int:
    """[s**r t**k u**n] of the joint generating function, by direct expansion."""
    if n < 0 or k < 0 or r < 0:
        raise ValueError("all indices must be nonnegative")
    if n > _MAX_N:
        raise ValueError(f"n must be at most {_MAX_N}, got {n}")
    acc = 0
    for (j, e), c in _joint(n).terms.items():
        if e == k:
            acc += int(c) * comb(n + r - j, n)
    return acc


def f_nkr_closed(n: int, k: int, r: int, literal: bool = False) -> int:
    """Closed-form lattice count matching :func:`f_nkr`.

    Counts integer points y in the box [0, r]**n whose coordinate sum
    lies in a window of r consecutive values ending at k*r + r (for
    k >= 1) or in the closed window [0, r] (for k = 0, where there is
    no lower face to remove).  Equivalently, the coefficient of
    x**(k*r + r) in (1 - x**r) * (1 - x**(r+1))**n / (1 - x)**(n+1),
    with the first factor dropped when k = 0.

    With ``literal=True`` the roles of k and r in the extraction are
    swapped: coefficient of x**(k*r + k) in
    (1 - x**k) * (1 - x**(k+1))**n / (1 - x)**(n+1).  That reading does
    not agree with :func:`f_nkr`; it is kept so the disagreement can be
    demonstrated rather than asserted.
    """
    if n < 0 or k < 0 or r < 0:
        raise ValueError("all indices must be nonnegative")
    if literal:
        target = k * r + k
        window, bracket = k, k + 1
    else:
        target = k * r + r
        window, bracket = (r if k >= 1 else 0), r + 1
    # numerator (1 - x**window) * (1 - x**bracket)**n, sparse in x;
    # window == 0 with k == 0 means the factor is absent (closed window),
    # while a genuine 1 - x**0 factor is identically zero.
    numer: dict[int, int] = {}
    for i in range(n + 1):
        numer[i * bracket] = numer.get(i * bracket, 0) + (-1) ** i * comb(n, i)
    if window == 0 and (literal or k >= 1):
        return 0
    if window > 0:
        shifted = {}
        for m, c in numer.items():
            shifted[m] = shifted.get(m, 0) + c
            shifted[m + window] = shifted.get(m + window, 0) - c
        numer = shifted
    return sum(c * comb(target - m + n, n)
               for m, c in numer.items() if m <= target)


# ----------------------------------------------------------------------
# binomial resummation

def binom_resum(poly: MPoly, n: int) -> MPoly:
    """Resum sum_r poly(r) s**r against the weight (1 - s)**(n + 1).

    ``poly`` is a polynomial in r, possibly with coefficients in t, of
    degree at most n.  Writing poly(r) = sum_m q_m r**m and converting
    powers to falling factorials with Stirling numbers gives

        (1 - s)**(n+1) * sum_r poly(r) s**r
            = sum_k c_k s**k (1 - s)**(n - k),
        c_k = sum_m q_m S(m, k) k!

    which is what this returns, as a polynomial in s and t.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    poly = poly.with_vars(("t", "r"))
    if poly.degree("r") > n:
        raise ValueError(
            f"degree {poly.degree('r')} in r exceeds n = {n}")
    s = MPoly.variable("s", ("s", "t"))
    acc = MPoly.zero(("s", "t"))
    for k in range(n + 1):
        c_k = MPoly.zero(("t",))
        for m in range(k, n + 1):
            q_m = poly.coeff_of("r", m)
            if q_m:
                c_k = c_k + q_m * (stirling2(m, k) * factorial(k))
        if c_k:
            acc = acc + c_k.with_vars(("s", "t")) * s ** k * (1 - s) ** (n - k)
    return acc
