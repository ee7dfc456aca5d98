"""Hermite normal form for submodules of A^m, A = Q[x].

Columns are kept in echelon form: each basis column has a pivot row (its
first nonzero entry), pivot rows strictly increase along the basis, and
pivot entries are monic.  Because A is a PID this gives exact membership by
successive division against the pivots.
"""

from __future__ import annotations

from .unipoly import ZERO, xgcd

__all__ = ["SubmoduleBasis", "hnf", "membership"]


def _pivot(v):
    for i, e in enumerate(v):
        if e:
            return i
    return None


def _axpy(v, a, w):
    """v + a*w"""
    if not a:
        return v
    return tuple(x + a * y if y else x for x, y in zip(v, w))


def _scale(v, a):
    return tuple(x * a for x in v)


class SubmoduleBasis:
    __slots__ = ("rank_m", "cols", "pivots")

    def __init__(self, m, cols=(), pivots=None):
        self.rank_m = m
        self.cols = tuple(cols)
        self.pivots = tuple(pivots) if pivots is not None else tuple(_pivot(c) for c in self.cols)

    def __len__(self):
        return len(self.cols)

    @property
    def rank(self):
        return len(self.cols)

    def insert(self, v):
        """Return the echelon basis of span(self) + A·v."""
        v = tuple(v)
        if len(v) != self.rank_m:
            raise ValueError("column length does not match ambient rank")
        cols = list(self.cols)
        piv = list(self.pivots)
        while True:
            p = _pivot(v)
            if p is None:
                break
            # advance past columns with earlier pivots (v is zero there)
            j = 0
            while j < len(piv) and piv[j] < p:
                j += 1
            if j == len(piv) or piv[j] > p:
                lc = v[p].lc
                cols.insert(j, _scale(v, 1 / lc))
                piv.insert(j, p)
                break
            b = cols[j]
            bp, vp = b[p], v[p]
            q, r = vp.divmod(bp)
            if not r:
                v = _axpy(v, -q, b)
                continue
            g, s, t = xgcd(bp, vp)
            nb = tuple(s * x + t * y for x, y in zip(b, v))
            bq, vq = bp.exact_div(g), vp.exact_div(g)
            v = tuple(vq * x - bq * y for x, y in zip(b, v))
            cols[j] = nb
        return SubmoduleBasis(self.rank_m, cols, piv)

    def reduced(self):
        """Canonical form: entries in pivot rows reduced modulo the pivot."""
        cols = list(self.cols)
        for k in range(len(cols)):
            pk = self.pivots[k]
            bk = cols[k]
            for j in range(k):
                e = cols[j][pk]
                if e and bk[pk].degree <= e.degree:
                    q = e.divmod(bk[pk])[0]
                    cols[j] = _axpy(cols[j], -q, bk)
        return SubmoduleBasis(self.rank_m, cols, self.pivots)

    def membership(self, v):
        """Return ``(True, cofactors)`` or ``(False, None)``."""
        v = tuple(v)
        if len(v) != self.rank_m:
            raise ValueError("column length does not match ambient rank")
        cof = [ZERO] * len(self.cols)
        for j, (b, p) in enumerate(zip(self.cols, self.pivots)):
            first = _pivot(v)
            if first is None:
                return True, cof
            if first < p:
                return False, None
            if first > p:
                continue
            q, r = v[p].divmod(b[p])
            if r:
                return False, None
            cof[j] = q
            v = _axpy(v, -q, b)
        if _pivot(v) is None:
            return True, cof
        return False, None

    def __contains__(self, v):
        return self.membership(v)[0]

    def __eq__(self, other):
        if not isinstance(other, SubmoduleBasis):
            return NotImplemented
        a, b = self.reduced(), other.reduced()
        return a.rank_m == b.rank_m and a.cols == b.cols

    def __repr__(self):
        return "SubmoduleBasis(" + ", ".join("(" + ", ".join(map(str, c)) + ")" for c in self.cols) + ")"


def hnf(cols, m=None):
    cols = [tuple(c) for c in cols]
    if m is None:
        if not cols:
            raise ValueError("ambient rank needed for an empty column list")
        m = len(cols[0])
    basis = SubmoduleBasis(m)
    for c in cols:
        basis = basis.insert(c)
    return basis.reduced()


def membership(v, basis):
    return basis.membership(v)
