"""Univariate polynomials over Q in the variable ``x``.

A :class:`UniPoly` keeps an integer numerator coefficient list together with
a positive common denominator, normalised so that the gcd of the numerator
content and the denominator is one.  That keeps the hot loops on machine-ish
ints (see :mod:`hopfoid._kernels`).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational as _Rational

from .. import _kernels as K

NEG_INF = float("-inf")

__all__ = ["UniPoly", "NEG_INF", "X", "ONE", "ZERO", "as_poly"]


def _lcm(a, b):
    return a // gcd(a, b) * b


class UniPoly:
    __slots__ = ("num", "den", "_hash")

    def __init__(self, coeffs=(), den=None):
        """Build from little-endian coefficients (ints / Fractions / strings).

        With ``den`` given, ``coeffs`` must be ints and are taken as the
        numerator over ``den``.
        """
        if den is not None:
            self._set(list(coeffs), den)
            return
        fr = [Fraction(c) for c in coeffs]
        d = 1
        for c in fr:
            if c.denominator != 1:
                d = _lcm(d, c.denominator)
        self._set([c.numerator * (d // c.denominator) for c in fr], d)

    def _set(self, num, den):
        num = K.trim(num)
        if not num:
            self.num, self.den, self._hash = (), 1, None
            return
        if den < 0:
            num, den = [-c for c in num], -den
        g = gcd(K.content(num), den)
        if g != 1:
            num = K.exact_div(num, g)
            den //= g
        self.num = tuple(num)
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, num, den=1):
        p = cls.__new__(cls)
        p._set(num, den)
        return p

    # -- construction helpers
    @classmethod
    def const(cls, c):
        c = Fraction(c)
        return cls._raw([c.numerator], c.denominator)

    @classmethod
    def monomial(cls, n, c=1):
        c = Fraction(c)
        return cls._raw([0] * n + [c.numerator], c.denominator)

    # -- inspection
    @property
    def degree(self):
        return len(self.num) - 1 if self.num else NEG_INF

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def coeffs(self):
        return [Fraction(c, self.den) for c in self.num]

    def __getitem__(self, i):
        if 0 <= i < len(self.num):
            return Fraction(self.num[i], self.den)
        return Fraction(0)

    @property
    def lc(self):
        return Fraction(self.num[-1], self.den) if self.num else Fraction(0)

    def is_const(self):
        return len(self.num) <= 1

    def const_value(self):
        if len(self.num) > 1:
            raise ValueError("not a constant polynomial")
        return self[0]

    # -- arithmetic
    def __add__(self, other):
        other = as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        d = _lcm(self.den, other.den)
        return UniPoly._raw(K.lincomb(list(self.num), d // self.den,
                                      list(other.num), d // other.den), d)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._raw([-c for c in self.num], self.den)

    def __sub__(self, other):
        other = as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        d = _lcm(self.den, other.den)
        return UniPoly._raw(K.lincomb(list(self.num), d // self.den,
                                      list(other.num), -(d // other.den)), d)

    def __rsub__(self, other):
        return as_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            return UniPoly._raw(K.mul(list(self.num), list(other.num)),
                                self.den * other.den)
        if isinstance(other, (int, _Rational)):
            c = Fraction(other)
            return UniPoly._raw([x * c.numerator for x in self.num],
                                self.den * c.denominator)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def derivative(self):
        return UniPoly._raw(K.deriv(list(self.num)), self.den)

    def divmod(self, other):
        other = as_poly(other)
        if not other.num:
            raise ZeroDivisionError("division by the zero polynomial")
        if len(other.num) == 1:
            c = Fraction(other.num[0], other.den)
            return self * (1 / c), ZERO
        q, r, k = K.pseudo_divmod(list(self.num), list(other.num))
        scale = other.num[-1] ** k
        # self = A/da, other = B/db ; lc^k A = qB + r
        quo = UniPoly._raw(q, scale * self.den) * other.den
        rem = UniPoly._raw(r, scale * self.den)
        return quo, rem

    __divmod__ = divmod

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        return q

    def __truediv__(self, c):
        c = Fraction(c)
        return self * (1 / c)

    def monic(self):
        if not self.num:
            return self
        return UniPoly._raw(list(self.num), self.num[-1])

    def primitive(self):
        """Integer primitive part with positive leading coefficient."""
        if not self.num:
            return []
        g = K.content(list(self.num))
        if self.num[-1] < 0:
            g = -g
        return K.exact_div(list(self.num), g)

    def __call__(self, t):
        if isinstance(t, UniPoly):
            return self.compose(t)
        acc = 0
        for c in reversed(self.num):
            acc = acc * t + c
        return Fraction(acc) / self.den

    def compose(self, q):
        acc = ZERO
        for c in reversed(self.coeffs()):
            acc = acc * q + c
        return acc

    # -- comparison / hashing
    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, _Rational)):
            return self == UniPoly.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"UniPoly({self})"

    def __str__(self):
        return format_poly(self.coeffs(), "x")


def _fmt_coeff(c):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(coeffs, var):
    """Canonical text, descending degree: ``x^2 - 1/2*x + 3``."""
    parts = []
    for n in range(len(coeffs) - 1, -1, -1):
        c = coeffs[n]
        if c == 0:
            continue
        neg = c < 0
        a = -c if neg else c
        if n == 0:
            body = _fmt_coeff(a)
        else:
            mon = var if n == 1 else f"{var}^{n}"
            body = mon if a == 1 else f"{_fmt_coeff(a)}*{mon}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts) if parts else "0"


def as_poly(v):
    if isinstance(v, UniPoly):
        return v
    if isinstance(v, (int, _Rational)):
        return UniPoly.const(v)
    return NotImplemented


def gcd_poly(a, b):
    """Monic gcd (zero if both zero)."""
    a, b = as_poly(a), as_poly(b)
    while b:
        a, b = b, a % b
    return a.monic()


def xgcd(a, b):
    """Return ``(g, s, t)`` with ``s*a + t*b == g`` and ``g`` monic."""
    a, b = as_poly(a), as_poly(b)
    r0, r1, s0, s1, t0, t1 = a, b, ONE, ZERO, ZERO, ONE
    while r1:
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return ZERO, ZERO, ZERO
    c = 1 / r0.lc
    return r0 * c, s0 * c, t0 * c


ZERO = UniPoly()
ONE = UniPoly([1])
X = UniPoly([0, 1])
