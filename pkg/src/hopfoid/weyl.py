"""The first Weyl algebra A[Y; d/dx] in right normal form.

An element is ``sum_n Y^n * a_n(x)`` with coefficients written to the right
of the powers of ``Y``.  Moving a coefficient past ``Y`` uses

    a * Y = Y * a + delta(a),

where ``delta = h(x) * d/dx`` (``h = 1`` is the Weyl algebra proper; ``h = x``
gives the ring generated by x*d/dx).
"""

from __future__ import annotations

from math import comb

from .algebra.unipoly import ONE, ZERO, UniPoly, as_poly

__all__ = ["WeylAlgebra", "WeylElement", "WEYL", "Y", "weyl_mul",
           "weyl_coproduct", "weyl_counit", "weyl_translation"]


class WeylAlgebra:
    """Carries the commutation polynomial ``h`` with ``a*Y = Y*a + h*a'``."""

    __slots__ = ("h",)

    def __init__(self, h=ONE):
        self.h = as_poly(h)

    def delta(self, a):
        return self.h * a.derivative()

    def element(self, terms):
        return WeylElement(terms, self)

    def gen(self):
        return WeylElement({1: ONE}, self)

    def coeff(self, a):
        return WeylElement({0: as_poly(a)}, self)

    def __eq__(self, other):
        return isinstance(other, WeylAlgebra) and self.h == other.h

    def __hash__(self):
        return hash(self.h)

    def __repr__(self):
        return f"WeylAlgebra(h={self.h})"


WEYL = WeylAlgebra()


class WeylElement:
    __slots__ = ("terms", "algebra")

    def __init__(self, terms=None, algebra=WEYL):
        """``terms``: mapping or iterable of ``(degree, coefficient)``."""
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        acc = {}
        for n, a in items:
            if n < 0:
                raise ValueError("negative Y-degree")
            a = as_poly(a)
            acc[n] = acc.get(n, ZERO) + a
        self.terms = {n: a for n, a in sorted(acc.items()) if a}
        self.algebra = algebra

    @property
    def degree(self):
        return max(self.terms, default=-1)

    def coefficient(self, n):
        return self.terms.get(n, ZERO)

    def is_zero(self):
        return not self.terms

    def _same(self, other):
        if isinstance(other, WeylElement):
            if other.algebra != self.algebra:
                raise ValueError("elements of different Weyl algebras")
            return other
        p = as_poly(other)
        if p is NotImplemented:
            return None
        return WeylElement({0: p}, self.algebra)

    def __add__(self, other):
        o = self._same(other)
        if o is None:
            return NotImplemented
        t = dict(self.terms)
        for n, a in o.terms.items():
            t[n] = t.get(n, ZERO) + a
        return WeylElement(t, self.algebra)

    __radd__ = __add__

    def __neg__(self):
        return WeylElement({n: -a for n, a in self.terms.items()}, self.algebra)

    def __sub__(self, other):
        o = self._same(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return self._same(other) - self

    def __mul__(self, other):
        o = self._same(other)
        if o is None:
            return NotImplemented
        return weyl_mul(self, o)

    def __rmul__(self, other):
        return weyl_mul(self._same(other), self)

    def __pow__(self, n):
        out = WeylElement({0: ONE}, self.algebra)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        o = self._same(other) if not isinstance(other, WeylElement) else other
        if o is None:
            return NotImplemented
        return self.algebra == o.algebra and self.terms == o.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for n in sorted(self.terms, reverse=True):
            a = self.terms[n]
            ystr = "" if n == 0 else ("Y" if n == 1 else f"Y^{n}")
            astr = str(a)
            if not ystr:
                body = astr
            elif a.is_const():
                c = a.const_value()
                cs = str(abs(c))
                body = ("-" if c < 0 else "") + (ystr if abs(c) == 1 else f"{cs}*{ystr}")
            elif len([c for c in a.num if c]) == 1:
                c = a.lc
                mono = str(UniPoly.monomial(a.degree))
                cs = "" if abs(c) == 1 else f"{abs(c)}*"
                body = ("-" if c < 0 else "") + f"{cs}{ystr}*{mono}"
            else:
                body = f"{ystr}*({astr})"
            if parts and body.startswith("-"):
                parts.append(" - " + body[1:])
            elif parts:
                parts.append(" + " + body)
            else:
                parts.append(body)
        return "".join(parts)

    def __repr__(self):
        return f"WeylElement({self})"

    def to_pairs(self):
        return [[n, str(a)] for n, a in self.terms.items()]


Y = WEYL.gen()


def _left_coeff(alg, a, m):
    """a * Y^m in normal form: sum_k C(m,k) Y^(m-k) delta^k(a)."""
    out = {}
    d = a
    for k in range(m + 1):
        if not d:
            break
        out[m - k] = d * comb(m, k)
        d = alg.delta(d)
    return out


def weyl_mul(u, v):
    if u.algebra != v.algebra:
        raise ValueError("elements of different Weyl algebras")
    alg = u.algebra
    acc = {}
    for n, a in u.terms.items():
        for m, b in v.terms.items():
            for j, c in _left_coeff(alg, a, m).items():
                acc[n + j] = acc.get(n + j, ZERO) + c * b
    return WeylElement(acc, alg)


def weyl_coproduct(u):
    """Delta(Y^n a) = sum_k C(n,k) Y^k (x) Y^(n-k) a, as a list of pairs."""
    alg = u.algebra
    pairs = []
    for n, a in u.terms.items():
        for k in range(n + 1):
            left = WeylElement({k: ONE}, alg)
            right = WeylElement({n - k: a * comb(n, k)}, alg)
            pairs.append((left, right))
    return pairs


def weyl_counit(u):
    return u.terms.get(0, ZERO)


def weyl_translation(u):
    """Translation map on generators: Y -> 1(x)Y - Y(x)1, a -> 1(x)a.

    Returns a list of ``(left, right)`` pairs.  Only A-combinations of 1 and
    Y are supported.
    """
    if u.degree >= 2:
        raise ValueError("translation map is only provided on generators (deg_Y <= 1)")
    alg = u.algebra
    one = WeylElement({0: ONE}, alg)
    pairs = []
    a0, a1 = u.coefficient(0), u.coefficient(1)
    if a0:
        pairs.append((one, WeylElement({0: a0}, alg)))
    if a1:
        # Y*a1 = (Y (x) 1)-part ... written with a1 on the right factor
        pairs.append((one, WeylElement({1: a1}, alg)))
        pairs.append((WeylElement({1: -ONE}, alg), WeylElement({0: a1}, alg)))
    return pairs
