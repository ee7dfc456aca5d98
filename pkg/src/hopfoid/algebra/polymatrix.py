"""Matrices and column vectors over A = Q[x]."""

from __future__ import annotations

from itertools import permutations

from .unipoly import ONE, ZERO, UniPoly, as_poly

__all__ = ["PolyMatrix", "perm_sign", "vec_add", "vec_scale", "vec_derivative",
           "dot"]


def perm_sign(p):
    sign, seen = 1, [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, n = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            n += 1
        if n % 2 == 0:
            sign = -sign
    return sign


def _sum(items):
    acc = ZERO
    for it in items:
        acc = acc + it
    return acc


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_scale(v, a):
    return tuple(e * a for e in v)


def vec_derivative(v):
    return tuple(e.derivative() for e in v)


def dot(row, col):
    return _sum(a * b for a, b in zip(row, col) if a and b)


class PolyMatrix:
    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows, ncols=None):
        self.rows = tuple(tuple(as_poly(e) if not isinstance(e, UniPoly) else e
                                for e in r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else (ncols or 0)
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def zero(cls, n, m=None):
        m = n if m is None else m
        return cls([[ZERO] * m for _ in range(n)], m)

    @classmethod
    def identity(cls, n):
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], n)

    @classmethod
    def diag(cls, entries):
        n = len(entries)
        return cls([[as_poly(entries[i]) if i == j else ZERO for j in range(n)]
                    for i in range(n)], n)

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other):
        return PolyMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other):
        return PolyMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __neg__(self):
        return PolyMatrix([[-a for a in r] for r in self.rows], self.ncols)

    def scale(self, c):
        return PolyMatrix([[a * c for a in r] for r in self.rows], self.ncols)

    def __mul__(self, other):
        if isinstance(other, PolyMatrix):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch")
            cols = [other.col(j) for j in range(other.ncols)]
            return PolyMatrix([[dot(r, c) for c in cols] for r in self.rows], other.ncols)
        return self.scale(other)

    __rmul__ = scale

    def matvec(self, v):
        return tuple(dot(r, v) for r in self.rows)

    def vecmat(self, row):
        """Row vector times matrix."""
        return tuple(dot(row, self.col(j)) for j in range(self.ncols))

    def transpose(self):
        return PolyMatrix([list(self.col(j)) for j in range(self.ncols)], self.nrows)

    T = property(transpose)

    def derivative(self):
        return PolyMatrix([[a.derivative() for a in r] for r in self.rows], self.ncols)

    def trace(self):
        return _sum(self.rows[i][i] for i in range(min(self.nrows, self.ncols)))

    def det(self):
        n = self.nrows
        if n != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        if n == 0:
            return ONE
        if n <= 4:
            return _sum(self._perm_term(p) for p in permutations(range(n)))
        # cofactor expansion along the first row for larger sizes
        acc = ZERO
        for j in range(n):
            if self.rows[0][j]:
                term = self.rows[0][j] * self.minor(0, j).det()
                acc = acc + term if j % 2 == 0 else acc - term
        return acc

    def _perm_term(self, p):
        t = ONE
        for i, j in enumerate(p):
            e = self.rows[i][j]
            if not e:
                return ZERO
            t = t * e
        return t if perm_sign(p) > 0 else -t

    def minor(self, i, j):
        return PolyMatrix([[e for c, e in enumerate(r) if c != j]
                           for k, r in enumerate(self.rows) if k != i], self.ncols - 1)

    def adjugate(self):
        n = self.nrows
        return PolyMatrix([[self.minor(j, i).det() * (1 if (i + j) % 2 == 0 else -1)
                            for j in range(n)] for i in range(n)], n)

    def kron(self, other):
        return PolyMatrix([[a * b for a in r for b in s]
                           for r in self.rows for s in other.rows],
                          self.ncols * other.ncols)

    def block_diag(self, other):
        m1, m2 = self.ncols, other.ncols
        rows = [list(r) + [ZERO] * m2 for r in self.rows]
        rows += [[ZERO] * m1 + list(r) for r in other.rows]
        return PolyMatrix(rows, m1 + m2)

    def max_degree(self):
        d = -1
        for r in self.rows:
            for e in r:
                if e and e.degree > d:
                    d = e.degree
        return d

    def to_lists(self):
        return [[str(e) for e in r] for r in self.rows]

    def __repr__(self):
        return f"PolyMatrix({self.to_lists()})"
