"""Symmetric decompositions, gamma expansions and coefficient shape tests.

Fix a variable x and an ambient degree d.  Every polynomial f with
deg_x(f) <= d splits uniquely as f = a + x*b where a is palindromic at
ambient degree d and b is palindromic at ambient degree d - 1:

    a = (f - x**(d+1) * f(1/x)) / (1 - x)
    b = (x**d * f(1/x) - f) / (1 - x)

Both divisions are exact for every input, so a failure here is a bug,
not a data error.  A palindromic polynomial at ambient degree d has a
unique expansion in the basis x**i * (1 + x)**(d - 2*i); nonnegativity
of those expansion coefficients is the gamma-positivity property that
the scan command hunts for.

The joint descent/excedance polynomial has ambient degree n - 1 in the
excedance variable.  Its palindromic part satisfies a two-term recursion
against the previous n which :func:`verify_thm20` checks; the seed of
that recursion at n = 0 is the zero polynomial by convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .distributions import eulerian_st, trivariate
from .mpoly import MPoly, exact_divide, reciprocal_in


@dataclass(frozen=True)
class SymDecomp:
    """The pair (a, b) with f = a + var * b, both parts palindromic."""
    a: MPoly
    b: MPoly
    var: str
    ambient_degree: int

    def recombined(self) -> MPoly:
        x = MPoly.variable(self.var, self.a.vars)
        return self.a + x * self.b


def is_palindromic(f: MPoly, var: str, d: int) -> bool:
    return f.degree(var) <= d and reciprocal_in(f, var, d) == f


def sym_decompose(f: MPoly, var: str, d: int) -> SymDecomp:
    """Split f into its palindromic parts at ambient degree d."""
    if f.degree(var) > d:
        raise ValueError(
            f"degree {f.degree(var)} in {var!r} exceeds ambient degree {d}")
    x = MPoly.variable(var, f.vars)
    flip = reciprocal_in(f, var, d)
    a = exact_divide(f - x * flip, 1 - x)
    b = exact_divide(flip - f, 1 - x)
    assert a + x * b == f, "decomposition failed to recombine"
    return SymDecomp(a=a, b=b, var=var, ambient_degree=d)


@lru_cache(maxsize=None)
def a_part(n: int) -> MPoly:
    """Palindromic part of the joint (des, exc) polynomial; zero at n = 0."""
    if n < 0:
        raise ValueError("negative n")
    if n == 0:
        return MPoly.zero(("s", "t"))
    return sym_decompose(eulerian_st(n), "t", n - 1).a


@dataclass(frozen=True)
class RecursionReport:
    n: int
    b_recursion_ok: bool
    recombination_ok: bool
    passed: bool
    witness: str | None = None


def verify_thm20(n: int) -> RecursionReport:
    """Check the decomposition recursion at one n.

    Confirms that the antisymmetric part of the joint polynomial equals
    (s - 1) times the previous palindromic part, and that the recombined
    identity A_n = a_n + (s - 1) * t * a_{n-1} holds exactly.
    """
    if not 2 <= n <= 9:
        raise ValueError(f"n must be between 2 and 9, got {n}")
    joint = eulerian_st(n)
    dec = sym_decompose(joint, "t", n - 1)
    s, t = (MPoly.variable(v, ("s", "t")) for v in ("s", "t"))
    prev = a_part(n - 1)
    b_ok = dec.b == (s - 1) * prev
    recomb_ok = joint == dec.a + (s - 1) * t * prev
    witness = None
    if not (b_ok and recomb_ok):
        witness = (f"b_part={dec.b.dumps()} "
                   f"expected={((s - 1) * prev).dumps()}")
    return RecursionReport(n=n, b_recursion_ok=b_ok, recombination_ok=recomb_ok,
                           passed=b_ok and recomb_ok, witness=witness)


# ----------------------------------------------------------------------
# gamma expansion

@dataclass(frozen=True)
class GammaExpansion:
    """Coefficients against the basis var**i * (1 + var)**(d - 2*i)."""
    var: str
    ambient_degree: int
    gammas: tuple[MPoly, ...]

    def reconstructed(self) -> MPoly:
        if not self.gammas:
            raise ValueError("empty expansion has no variable context")
        vars = self.gammas[0].vars
        x = MPoly.variable(self.var, vars)
        d = self.ambient_degree
        acc = MPoly.zero(vars)
        for i, g in enumerate(self.gammas):
            acc = acc + g * x ** i * (1 + x) ** (d - 2 * i)
        return acc

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for g in self.gammas for c in g.terms.values())


def gamma_expand(f: MPoly, var: str, d: int) -> GammaExpansion:
    """Expand a palindromic f in the gamma basis at ambient degree d.

    Works top down: the coefficient of var**i in the running remainder
    is the next gamma, because every later basis element starts at a
    higher power of var.  Raises ValueError when f is not palindromic
    at ambient degree d (the basis only spans those).
    """
    if f.is_zero():
        return GammaExpansion(var=var, ambient_degree=d, gammas=())
    if not is_palindromic(f, var, d):
        raise ValueError(
            f"not palindromic at ambient degree {d} in {var!r}: {f}")
    x = MPoly.variable(var, f.vars)
    rem = f
    gammas = []
    for i in range(d // 2 + 1):
        g = rem.coeff_keeping(var, i)
        gammas.append(g)
        if g:
            rem = rem - g * x ** i * (1 + x) ** (d - 2 * i)
    assert rem.is_zero(), "gamma elimination left a remainder"
    return GammaExpansion(var=var, ambient_degree=d, gammas=tuple(gammas))


def gamma_expand_coeffs(coeffs: Sequence[Fraction | int]) -> tuple[Fraction, ...]:
    """Gamma vector of a palindromic coefficient list.

    The list fixes the ambient degree: its length is d + 1, trailing
    zeros included.  An empty or all-zero list has an empty gamma vector.
    """
    cs = [Fraction(c) for c in coeffs]
    if not cs or all(c == 0 for c in cs):
        return ()
    f = MPoly(("t",), {(i,): c for i, c in enumerate(cs) if c})
    expansion = gamma_expand(f, "t", len(cs) - 1)
    return tuple(g.constant() for g in expansion.gammas)


# ----------------------------------------------------------------------
# shape predicates on coefficient lists

@dataclass(frozen=True)
class ShapeFlags:
    palindromic: bool
    unimodal: bool
    alternatingly_increasing: bool
    gamma_nonnegative: bool


def _is_unimodal(cs: Sequence[Fraction]) -> bool:
    rising = True
    for a, b in zip(cs, cs[1:]):
        if rising and b < a:
            rising = False
        elif not rising and b > a:
            return False
    return True


def _is_alternatingly_increasing(cs: Sequence[Fraction]) -> bool:
    # chain c_0 <= c_d <= c_1 <= c_{d-1} <= ... from the outside in
    d = len(cs) - 1
    chain = []
    lo, hi = 0, d
    while lo <= hi:
        chain.append(cs[lo])
        if hi != lo:
            chain.append(cs[hi])
        lo += 1
        hi -= 1
    return all(a <= b for a, b in zip(chain, chain[1:]))


def shape_checks(coeffs: Sequence[Fraction | int]) -> ShapeFlags:
    """Palindromicity, unimodality, alternating increase, gamma sign."""
    cs = [Fraction(c) for c in coeffs]
    if not cs:
        raise ValueError("empty coefficient list")
    palin = cs == cs[::-1]
    gamma_ok = False
    if palin:
        gamma_ok = all(g >= 0 for g in gamma_expand_coeffs(cs))
    return ShapeFlags(
        palindromic=palin,
        unimodal=_is_unimodal(cs),
        alternatingly_increasing=_is_alternatingly_increasing(cs),
        gamma_nonnegative=gamma_ok,
    )


# ----------------------------------------------------------------------
# numeric scan of the three-variable refinement

@dataclass(frozen=True)
class ScanReport:
    n: int
    p: Fraction
    q: Fraction
    in_hypothesis: bool
    gamma_a: tuple[Fraction, ...]
    gamma_b: tuple[Fraction, ...]
    gamma_a_nonneg: bool
    gamma_b_nonneg: bool
    alternatingly_increasing: bool
    unimodal: bool
    mode_indices: tuple[int, ...]


def conjecture_scan(n: int, p, q, force: bool = False) -> ScanReport:
    """Decompose the specialized refinement and report its shape.

    Specializes the (exc, des, maj-exc) polynomial at rational p, q,
    splits it in t at ambient degree n - 1, and reports the gamma
    vectors of both parts together with shape flags of the recombined
    coefficient list.  The hypothesis zone is p > 1, q >= 1; points
    outside it need ``force=True``.  Reports never raise on a shape
    violation; they record it.
    """
    if not 1 <= n <= 9:
        raise ValueError(f"n must be between 1 and 9, got {n}")
    p, q = Fraction(p), Fraction(q)
    in_hyp = p > 1 and q >= 1
    if not in_hyp and not force:
        raise ValueError(
            f"(p, q) = ({p}, {q}) is outside p > 1, q >= 1; pass force=True")
    f = trivariate(n).subs({"p": p, "q": q})
    d = n - 1
    dense = f.to_dense("t")
    dense += [Fraction(0)] * (d + 1 - len(dense))
    if d == 0:
        a_cs, b_cs = dense, []
    else:
        dec = sym_decompose(f, "t", d)
        a_cs = dec.a.to_dense("t")
        a_cs += [Fraction(0)] * (d + 1 - len(a_cs))
        b_cs = dec.b.to_dense("t")
        b_cs += [Fraction(0)] * (d - len(b_cs))
        if dec.b.is_zero():
            b_cs = []
    gamma_a = gamma_expand_coeffs(a_cs)
    gamma_b = gamma_expand_coeffs(b_cs) if b_cs else ()
    top = max(dense)
    modes = tuple(i for i, c in enumerate(dense) if c == top)
    return ScanReport(
        n=n, p=p, q=q, in_hypothesis=in_hyp,
        gamma_a=gamma_a, gamma_b=gamma_b,
        gamma_a_nonneg=all(g >= 0 for g in gamma_a),
        gamma_b_nonneg=all(g >= 0 for g in gamma_b),
        alternatingly_increasing=_is_alternatingly_increasing(dense),
        unimodal=_is_unimodal(dense),
        mode_indices=modes,
    )
