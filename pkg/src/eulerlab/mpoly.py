"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is a mapping from exponent vectors to nonzero ``Fraction``
coefficients, together with a tuple of variable names.  Exponent vectors
are tuples of nonnegative ints, one entry per variable.  Zero terms are
never stored, so two polynomials are equal exactly when their variable
tuples and term dictionaries are equal.

Variable tuples are kept in one global order (``VAR_ORDER``) so that
polynomials built independently in different modules can be compared and
serialized without ambiguity.  Binary operations require both operands
to carry the same variable tuple; use :meth:`MPoly.with_vars` to embed a
polynomial into a larger variable set first.  This is deliberate: silent
alignment hides bugs where a coefficient ring was mixed up.

All arithmetic is exact.  There are no floats anywhere in this package.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Scalar = Union[int, Fraction]

#: Every variable this package uses, in display and serialization order.
VAR_ORDER = ("s", "t", "u", "p", "q", "x", "r")


class DivisibilityError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


def _var_key(name: str):
    try:
        return (0, VAR_ORDER.index(name), "")
    except ValueError:
        return (1, 0, name)


def canonical_vars(names: Iterable[str]) -> tuple[str, ...]:
    """Sort variable names into the package-wide canonical order."""
    names = tuple(names)
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate variable names in {names!r}")
    return tuple(sorted(names, key=_var_key))


class MPoly:
    """Immutable sparse polynomial over the rationals."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Iterable[str],
                 terms: Mapping[tuple[int, ...], Scalar] | Iterable = ()):
        vars = tuple(vars)
        order = canonical_vars(vars)
        perm = None
        if order != vars:
            perm = tuple(vars.index(v) for v in order)
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[tuple[int, ...], Fraction] = {}
        width = len(vars)
        for exp, coeff in items:
            exp = tuple(exp)
            if len(exp) != width:
                raise ValueError(
                    f"exponent {exp} has length {len(exp)}, expected {width}")
            for e in exp:
                if not isinstance(e, int) or e < 0:
                    raise ValueError(f"bad exponent entry in {exp}")
            if perm is not None:
                exp = tuple(exp[i] for i in perm)
            c = clean.get(exp, _ZERO) + Fraction(coeff)
            if c:
                clean[exp] = c
            elif exp in clean:
                del clean[exp]
        object.__setattr__(self, "vars", order)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("MPoly is immutable")

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, vars: Iterable[str]) -> "MPoly":
        return cls(vars, {})

    @classmethod
    def const(cls, vars: Iterable[str], value: Scalar) -> "MPoly":
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): Fraction(value)})

    @classmethod
    def variable(cls, name: str, vars: Iterable[str] | None = None) -> "MPoly":
        vars = (name,) if vars is None else tuple(vars)
        if name not in vars:
            raise ValueError(f"{name!r} not among {vars!r}")
        exp = tuple(1 if v == name else 0 for v in canonical_vars(vars))
        return cls(canonical_vars(vars), {exp: Fraction(1)})

    # ------------------------------------------------------------------
    # predicates and coercion

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exp) for exp in self.terms)

    def constant(self) -> Fraction:
        """The value of a polynomial with no effective variables."""
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self}")
        zero_exp = (0,) * len(self.vars)
        return self.terms.get(zero_exp, _ZERO)

    def _coerce(self, other) -> "MPoly | None":
        if isinstance(other, MPoly):
            if other.vars != self.vars:
                raise ValueError(
                    f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.const(self.vars, other)
        return None

    # ------------------------------------------------------------------
    # ring operations

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for exp, c in other.terms.items():
            v = out.get(exp, _ZERO) + c
            if v:
                out[exp] = v
            elif exp in out:
                del out[exp]
        return _raw(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return _raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return MPoly.zero(self.vars)
            return _raw(self.vars, {e: k * c for e, k in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(exp, _ZERO) + c1 * c2
                if v:
                    out[exp] = v
                elif exp in out:
                    del out[exp]
        return _raw(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MPoly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant() == other
        return NotImplemented

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # ------------------------------------------------------------------
    # degrees, coefficients, substitution

    def _vi(self, var: str) -> int:
        try:
            return self.vars.index(var)
        except ValueError:
            raise ValueError(f"{var!r} not among variables {self.vars}") from None

    def degree(self, var: str) -> int:
        """Degree in one variable; the zero polynomial has degree -1."""
        i = self._vi(var)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def coeff_of(self, var: str, k: int) -> "MPoly":
        """Coefficient of ``var**k`` as a polynomial in the other variables."""
        i = self._vi(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        out: dict[tuple[int, ...], Fraction] = {}
        for exp, c in self.terms.items():
            if exp[i] == k:
                out[exp[:i] + exp[i + 1:]] = c
        return _raw(rest, out)

    def coeff_keeping(self, var: str, k: int) -> "MPoly":
        """Like :meth:`coeff_of` but the result stays over the same variables."""
        i = self._vi(var)
        out: dict[tuple[int, ...], Fraction] = {}
        for exp, c in self.terms.items():
            if exp[i] == k:
                out[exp[:i] + (0,) + exp[i + 1:]] = c
        return _raw(self.vars, out)

    def subs(self, assignments: Mapping[str, Scalar]) -> "MPoly":
        """Substitute rational values for some variables."""
        for name in assignments:
            self._vi(name)
        keep = tuple(v for v in self.vars if v not in assignments)
        idx = [self.vars.index(v) for v in keep]
        values = {self.vars.index(v): Fraction(val)
                  for v, val in assignments.items()}
        out: dict[tuple[int, ...], Fraction] = {}
        for exp, c in self.terms.items():
            for i, val in values.items():
                c = c * val ** exp[i]
            if not c:
                continue
            nexp = tuple(exp[i] for i in idx)
            v = out.get(nexp, _ZERO) + c
            if v:
                out[nexp] = v
            elif nexp in out:
                del out[nexp]
        return _raw(keep, out)

    def evaluate(self, assignments: Mapping[str, Scalar]) -> Fraction:
        """Evaluate fully; every variable must receive a value."""
        missing = [v for v in self.vars if v not in assignments]
        if missing:
            raise ValueError(f"no value given for {missing}")
        return self.subs(assignments).constant()

    def rename(self, mapping: Mapping[str, str]) -> "MPoly":
        """Rename variables; target names must not collide."""
        new = tuple(mapping.get(v, v) for v in self.vars)
        if len(set(new)) != len(new):
            raise ValueError(f"renaming collides: {new}")
        order = canonical_vars(new)
        perm = tuple(new.index(v) for v in order)
        return _raw(order, {tuple(e[i] for i in perm): c
                            for e, c in self.terms.items()})

    def with_vars(self, vars: Iterable[str]) -> "MPoly":
        """Reinterpret over another variable tuple.

        New variables are added with exponent zero.  Dropping a variable
        is allowed only when it does not occur in any term.
        """
        target = canonical_vars(vars)
        for i, v in enumerate(self.vars):
            if v not in target and any(e[i] for e in self.terms):
                raise ValueError(f"cannot drop live variable {v!r}")
        pos = {v: j for j, v in enumerate(target)}
        out: dict[tuple[int, ...], Fraction] = {}
        for exp, c in self.terms.items():
            nexp = [0] * len(target)
            for i, v in enumerate(self.vars):
                if exp[i]:
                    nexp[pos[v]] = exp[i]
            out[tuple(nexp)] = c
        return _raw(target, out)

    def to_dense(self, var: str) -> list[Fraction]:
        """Coefficient list in ``var`` for an effectively univariate polynomial."""
        i = self._vi(var)
        for exp in self.terms:
            for j, e in enumerate(exp):
                if j != i and e:
                    raise ValueError(
                        f"polynomial is not univariate in {var!r}: {self}")
        n = max((exp[i] for exp in self.terms), default=0)
        dense = [_ZERO] * (n + 1)
        for exp, c in self.terms.items():
            dense[exp[i]] = c
        return dense

    # ------------------------------------------------------------------
    # serialization

    def terms_sorted(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self.terms.items())

    def to_json_dict(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [
                {"e": list(exp),
                 "n": str(c.numerator),
                 "d": str(c.denominator)}
                for exp, c in self.terms_sorted()
            ],
        }

    def dumps(self) -> str:
        """Canonical JSON text: fixed key order, sorted terms, no whitespace."""
        return json.dumps(self.to_json_dict(), separators=(",", ":"))

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "MPoly":
        try:
            vars = data["vars"]
            terms = {
                tuple(item["e"]): Fraction(int(item["n"]), int(item["d"]))
                for item in data["terms"]
            }
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed polynomial JSON: {exc}") from exc
        return cls(vars, terms)

    @classmethod
    def loads(cls, text: str) -> "MPoly":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"malformed polynomial JSON: {exc}") from exc
        return cls.from_json_dict(data)

    # ------------------------------------------------------------------
    # rendering

    def _display_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self._display_terms():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self.vars, exp) if e)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append((c < 0, body))
        first_neg, first = parts[0]
        out = ("-" if first_neg else "") + first
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def latex(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self._display_terms():
            mono = "".join(
                v if e == 1 else f"{v}^{{{e}}}"
                for v, e in zip(self.vars, exp) if e)
            a = abs(c)
            if a.denominator == 1:
                num = str(a.numerator)
            else:
                num = rf"\frac{{{a.numerator}}}{{{a.denominator}}}"
            if mono and a == 1:
                body = mono
            elif mono:
                body = num + mono
            else:
                body = num
            parts.append((c < 0, body))
        first_neg, first = parts[0]
        out = ("-" if first_neg else "") + first
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __repr__(self):
        return f"MPoly[{','.join(self.vars)}]({self.text()})"

    __str__ = text


_ZERO = Fraction(0)


def _raw(vars: tuple[str, ...], terms: dict) -> MPoly:
    """Internal constructor bypassing validation; callers guarantee invariants."""
    obj = MPoly.__new__(MPoly)
    object.__setattr__(obj, "vars", vars)
    object.__setattr__(obj, "terms", terms)
    return obj


def variables(names: Sequence[str]) -> tuple[MPoly, ...]:
    """Generators of a common polynomial ring, in the caller's order.

    ``s, t = variables(("s", "t"))`` gives two polynomials over the same
    variable tuple, so they can be combined freely.
    """
    vars = canonical_vars(names)
    return tuple(MPoly.variable(name, vars) for name in names)


def exact_divide(f: MPoly, g: MPoly) -> MPoly:
    """Quotient f / g when the division is exact.

    Runs multivariate long division with the lexicographic term order on
    the canonical variable tuple.  Raises :class:`DivisibilityError` as
    soon as the leading term of the running remainder is not divisible
    by the leading term of ``g``, which for an inexact input always
    happens after finitely many steps.
    """
    if not isinstance(g, MPoly):
        g = MPoly.const(f.vars, g)
    if f.vars != g.vars:
        raise ValueError(f"variable mismatch: {f.vars} vs {g.vars}")
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return f
    g_lead = max(g.terms)
    g_lc = g.terms[g_lead]
    rem = dict(f.terms)
    quo: dict[tuple[int, ...], Fraction] = {}
    while rem:
        r_lead = max(rem)
        diff = tuple(a - b for a, b in zip(r_lead, g_lead))
        if any(d < 0 for d in diff):
            raise DivisibilityError(
                f"not divisible: leading term {r_lead} vs divisor {g_lead}")
        c = rem[r_lead] / g_lc
        quo[diff] = quo.get(diff, _ZERO) + c
        for exp, gc in g.terms.items():
            key = tuple(a + b for a, b in zip(diff, exp))
            v = rem.get(key, _ZERO) - c * gc
            if v:
                rem[key] = v
            elif key in rem:
                del rem[key]
    return _raw(f.vars, {e: c for e, c in quo.items() if c})


def reciprocal_in(f: MPoly, var: str, d: int) -> MPoly:
    """Reverse the coefficient sequence in ``var`` at ambient degree ``d``.

    Sends the coefficient of ``var**e`` to ``var**(d-e)``; other variables
    ride along untouched.  Requires ``deg_var(f) <= d``.
    """
    i = f._vi(var)
    if f.degree(var) > d:
        raise ValueError(
            f"degree {f.degree(var)} in {var!r} exceeds ambient degree {d}")
    out = {}
    for exp, c in f.terms.items():
        out[exp[:i] + (d - exp[i],) + exp[i + 1:]] = c
    return _raw(f.vars, out)
