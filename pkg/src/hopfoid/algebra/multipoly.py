"""Multivariate Laurent-style polynomials over Q.

Each :class:`MultiPoly` lives over a :class:`GenTable`: an ordered tuple of
variable names, each flagged invertible or not.  Only invertible generators
may carry negative exponents.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _Rational

from .. import _kernels as K
from .unipoly import _fmt_coeff

__all__ = ["GenTable", "MultiPoly", "IllegalInversion", "TableMismatch"]


class IllegalInversion(ArithmeticError):
    pass


class TableMismatch(ValueError):
    pass


class GenTable:
    __slots__ = ("names", "invertible", "_index")

    def __init__(self, names, invertible=()):
        self.names = tuple(names)
        inv = set(invertible)
        unknown = inv - set(self.names)
        if unknown:
            raise ValueError(f"unknown invertible generators {sorted(unknown)}")
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate generator names")
        self.invertible = tuple(n in inv for n in self.names)
        self._index = {n: i for i, n in enumerate(self.names)}

    def __len__(self):
        return len(self.names)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"no generator {name!r} in table") from None

    def __contains__(self, name):
        return name in self._index

    def __eq__(self, other):
        return isinstance(other, GenTable) and self.names == other.names and self.invertible == other.invertible

    def __hash__(self):
        return hash((self.names, self.invertible))

    def var(self, name, power=1):
        i = self.index(name)
        if power < 0 and not self.invertible[i]:
            raise IllegalInversion(f"{name} is not invertible")
        e = [0] * len(self.names)
        e[i] = power
        return MultiPoly(self, {tuple(e): Fraction(1)})

    def one(self):
        return MultiPoly(self, {(0,) * len(self.names): Fraction(1)})

    def zero(self):
        return MultiPoly(self, {})

    def const(self, c):
        return MultiPoly(self, {(0,) * len(self.names): Fraction(c)})

    def gens(self):
        return [self.var(n) for n in self.names]

    def __repr__(self):
        return "GenTable(" + ", ".join(n + ("^±" if f else "") for n, f in zip(self.names, self.invertible)) + ")"


class MultiPoly:
    __slots__ = ("table", "terms", "_hash")

    def __init__(self, table, terms):
        self.table = table
        clean = {}
        for e, c in terms.items():
            if c:
                clean[tuple(e)] = Fraction(c)
        inv = table.invertible
        for e in clean:
            for k, f in zip(e, inv):
                if k < 0 and not f:
                    raise IllegalInversion("negative exponent on a non-invertible generator")
        self.terms = clean
        self._hash = None

    @classmethod
    def _fast(cls, table, terms):
        p = cls.__new__(cls)
        p.table, p.terms, p._hash = table, terms, None
        return p

    # -- helpers
    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.table != self.table:
                raise TableMismatch("polynomials over different generator tables")
            return other
        if isinstance(other, (int, _Rational)):
            return self.table.const(other)
        return None

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.table, frozenset(self.terms.items())))
        return self._hash

    # -- arithmetic
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiPoly._fast(self.table, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._fast(self.table, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, _Rational)):
            c = Fraction(other)
            if not c:
                return self.table.zero()
            return MultiPoly._fast(self.table, {e: v * c for e, v in self.terms.items()})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return MultiPoly._fast(self.table, K.mpoly_mul(self.terms, o.terms))

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (1 / Fraction(c))

    def unit_monomial(self):
        """Return ``(exponent, coeff)`` if this is a unit (a single monomial in
        invertible generators), else ``None``."""
        if len(self.terms) != 1:
            return None
        (e, c), = self.terms.items()
        for k, f in zip(e, self.table.invertible):
            if k and not f:
                return None
        return e, c

    def inverse(self):
        um = self.unit_monomial()
        if um is None:
            raise IllegalInversion("element is not a unit monomial")
        e, c = um
        return MultiPoly._fast(self.table, {tuple(-k for k in e): 1 / c})

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out, base = self.table.one(), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- structure
    def total_degree(self):
        return max((sum(e) for e in self.terms), default=None)

    def variables(self):
        used = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used.add(self.table.names[i])
        return used

    def coeff(self, exps):
        return self.terms.get(tuple(exps), Fraction(0))

    def constant_term(self):
        return self.terms.get((0,) * len(self.table), Fraction(0))

    def substitute(self, images, target=None):
        """Ring homomorphism sending generator ``name`` to ``images[name]``.

        Unlisted generators map to the generator of the same name in the
        target table.  Negative powers need the image to be a unit monomial.
        """
        target = target or self.table
        imgs = []
        for n in self.table.names:
            if n in images:
                v = images[n]
                if not isinstance(v, MultiPoly):
                    v = target.const(v)
                elif v.table != target:
                    raise TableMismatch(f"image of {n} lives over a different table")
            else:
                v = target.var(n) if n in target else None
            imgs.append(v)
        cache = {}

        def power(i, k):
            key = (i, k)
            if key not in cache:
                base = imgs[i]
                if base is None:
                    raise TableMismatch(f"no image for generator {self.table.names[i]}")
                if k < 0:
                    if base.unit_monomial() is None:
                        raise IllegalInversion(
                            f"{self.table.names[i]} is inverted but its image is not a unit monomial")
                    cache[key] = base.inverse() ** (-k)
                elif k == 1:
                    cache[key] = base
                else:
                    cache[key] = power(i, k - 1) * base if k > 1 else base ** k
            return cache[key]

        acc = {}
        one_e = (0,) * len(target)
        for e, c in self.terms.items():
            term = {one_e: c}
            for i, k in enumerate(e):
                if k:
                    term = K.mpoly_mul(term, power(i, k).terms)
                    if not term:
                        break
            for te, tc in term.items():
                v = acc.get(te, 0) + tc
                if v:
                    acc[te] = v
                else:
                    acc.pop(te, None)
        return MultiPoly._fast(target, acc)

    def partial(self, name):
        i = self.table.index(name)
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * k
        return MultiPoly._fast(self.table, out)

    def derive(self, images):
        """Apply the derivation determined by its values on generators."""
        acc = self.table.zero()
        for n in self.variables():
            img = images.get(n)
            if img is None:
                raise KeyError(f"derivation undefined on {n}")
            if img:
                acc = acc + self.partial(n) * img
        return acc

    # -- printing
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __str__(self):
        return format_terms(self.sorted_terms(), self.table.names)

    def __repr__(self):
        return f"MultiPoly({self})"


def format_monomial(e, names):
    parts = []
    for n, k in zip(names, e):
        if k == 1:
            parts.append(n)
        elif k:
            parts.append(f"{n}^{k}")
    return "*".join(parts)


def format_terms(terms, names):
    out = []
    for e, c in terms:
        mon = format_monomial(e, names)
        neg = c < 0
        a = -c if neg else c
        if not mon:
            body = _fmt_coeff(a)
        elif a == 1:
            body = mon
        else:
            body = f"{_fmt_coeff(a)}*{mon}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out) if out else "0"
