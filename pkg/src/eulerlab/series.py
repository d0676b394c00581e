"""Truncated power series with rational-function coefficients.

A :class:`USeries` of order N stores coefficients for u**0 .. u**N and
silently discards everything above.  Operands must share the same order;
mixing truncation levels is almost always a bug in the calling code, so
it raises instead of guessing.
"""

from __future__ import annotations

from typing import Iterable

from .univariate import RatFunc


class USeries:
    """Power series in one formal variable, truncated at a fixed order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable = ()):
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = [c if isinstance(c, RatFunc) else RatFunc(c) for c in coeffs]
        if len(cs) > order + 1:
            raise ValueError(f"{len(cs)} coefficients for order {order}")
        cs.extend([RatFunc(0)] * (order + 1 - len(cs)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("USeries is immutable")

    @classmethod
    def constant(cls, value, order: int) -> "USeries":
        return cls(order, (value,))

    def coeff(self, k: int) -> RatFunc:
        if not 0 <= k <= self.order:
            raise ValueError(f"order {self.order} series has no u^{k} term")
        return self.coeffs[k]

    def _check(self, other: "USeries"):
        if self.order != other.order:
            raise ValueError(
                f"truncation orders differ: {self.order} vs {other.order}")

    def __add__(self, other):
        if not isinstance(other, USeries):
            return NotImplemented
        self._check(other)
        return USeries(self.order,
                       [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if not isinstance(other, USeries):
            return NotImplemented
        self._check(other)
        return USeries(self.order,
                       [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return USeries(self.order, [-a for a in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, USeries):
            return NotImplemented
        self._check(other)
        out = []
        for k in range(self.order + 1):
            acc = RatFunc(0)
            for i in range(k + 1):
                a, b = self.coeffs[i], other.coeffs[k - i]
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return USeries(self.order, out)

    def scale(self, factor) -> "USeries":
        factor = factor if isinstance(factor, RatFunc) else RatFunc(factor)
        return USeries(self.order, [c * factor for c in self.coeffs])

    def inverse(self) -> "USeries":
        """Multiplicative inverse; needs an invertible constant term."""
        c0 = self.coeffs[0]
        if c0.is_zero():
            raise ZeroDivisionError("series has no constant term")
        inv0 = c0.inverse()
        out = [inv0]
        for k in range(1, self.order + 1):
            acc = RatFunc(0)
            for j in range(1, k + 1):
                a = self.coeffs[j]
                if a:
                    acc = acc + a * out[k - j]
            out.append(-(inv0 * acc))
        return USeries(self.order, out)

    def __eq__(self, other):
        if not isinstance(other, USeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"USeries(order={self.order}, {list(self.coeffs)!r})"
