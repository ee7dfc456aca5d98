"""Truncated power series in Z with coefficients in A = Q[x]."""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .unipoly import ONE, ZERO, UniPoly, as_poly

DEFAULT_ORDER = 20

__all__ = ["TruncSeries", "DEFAULT_ORDER", "taylor"]


class TruncSeries:
    """Element of A[[Z]] kept modulo Z^(N+1)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order=DEFAULT_ORDER):
        cs = [as_poly(c) for c in coeffs][: order + 1]
        cs += [ZERO] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, a, order=DEFAULT_ORDER):
        return cls([a], order)

    @classmethod
    def Z(cls, order=DEFAULT_ORDER):
        return cls([ZERO, ONE], order)

    def _check(self, other):
        if not isinstance(other, TruncSeries):
            other = TruncSeries.const(other, self.order)
        if other.order != self.order:
            raise ValueError("truncation orders differ")
        return other

    def __getitem__(self, n):
        return self.coeffs[n]

    def __add__(self, other):
        other = self._check(other)
        return TruncSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            if isinstance(other, UniPoly) or isinstance(other, (int, Fraction)):
                return TruncSeries([a * other for a in self.coeffs], self.order)
            return NotImplemented
        other = self._check(other)
        N = self.order
        out = [ZERO] * (N + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(N + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return TruncSeries(out, N)

    __rmul__ = __mul__

    def inverse(self):
        """Inverse when the constant term is a nonzero rational."""
        c0 = self.coeffs[0]
        if not c0 or not c0.is_const():
            raise ArithmeticError("series is not invertible in A[[Z]]")
        inv0 = 1 / c0.const_value()
        N = self.order
        out = [ZERO] * (N + 1)
        out[0] = UniPoly.const(inv0)
        for n in range(1, N + 1):
            acc = ZERO
            for k in range(1, n + 1):
                if self.coeffs[k] and out[n - k]:
                    acc = acc + self.coeffs[k] * out[n - k]
            out[n] = -acc * inv0
        return TruncSeries(out, N)

    def dZ(self):
        """d/dZ; the top coefficient becomes unknown and is set to zero."""
        cs = [self.coeffs[k + 1] * (k + 1) for k in range(self.order)] + [ZERO]
        return TruncSeries(cs, self.order)

    def eq_upto(self, other, n):
        other = self._check(other)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def __eq__(self, other):
        return isinstance(other, TruncSeries) and self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        terms = [f"({c})*Z^{n}" for n, c in enumerate(self.coeffs) if c]
        return "TruncSeries(" + (" + ".join(terms) or "0") + f", order={self.order})"


def taylor(a, order=DEFAULT_ORDER, delta=None):
    """Universal Taylor series  sum_n delta^n(a)/n! Z^n.

    ``delta`` is the derivation, given by its value on ``x`` (default 1, the
    plain d/dx).  For ``delta = x`` one gets ``taylor(x) = x*exp(Z)``.
    """
    a = as_poly(a)
    h = ONE if delta is None else as_poly(delta)
    cs, cur = [], a
    for n in range(order + 1):
        cs.append(cur * Fraction(1, factorial(n)))
        cur = h * cur.derivative()
    return TruncSeries(cs, order)
