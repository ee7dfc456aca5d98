"""Differential modules over A = Q[x] in coordinates.

A rank-m module is a square matrix ``M``; vectors are columns of ``UniPoly``
and functionals are rows.  The differential (the right action of ``Y``) is

    D(v) = v' - M v,

so that the basis satisfies ``D e_i = -sum_j e_j M[j][i]``.  The dual module
has matrix ``-M^T``, which makes ``(p*(p))' = (D*p*)(p) + p*(D p)``.  The top
exterior power is the rank-one module ``[tr M]``: with this convention the
generator ``e_1 ^ ... ^ e_m`` satisfies ``D(w) = -tr(M) w``.

Vectors and functionals are plain tuples of UniPoly.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .algebra.linalg import nullspace
from .algebra.polymatrix import PolyMatrix
from .algebra.series import DEFAULT_ORDER, TruncSeries, taylor
from .algebra.unipoly import ONE, ZERO, UniPoly, as_poly

__all__ = ["DiffModule", "trivial_module", "apply_D", "apply_dual_D", "act_weyl",
           "tensor", "tensor_vectors", "dual", "hom_module", "hom_vector", "wedge_top",
           "direct_sum", "is_morphism", "SolutionSpace", "poly_solutions",
           "default_degree_bound", "taylor", "recurrence_pn", "recurrence_Mn",
           "fundamental_series", "series_matmul", "series_det"]


def _vec(v, m):
    v = tuple(as_poly(e) for e in v)
    if len(v) != m:
        raise ValueError(f"expected a length-{m} vector, got length {len(v)}")
    return v


class DiffModule:
    __slots__ = ("matrix", "label")

    def __init__(self, matrix, label=None):
        if not isinstance(matrix, PolyMatrix):
            matrix = PolyMatrix(matrix)
        if matrix.nrows != matrix.ncols:
            raise ValueError("module matrix must be square")
        self.matrix = matrix
        self.label = label

    @property
    def rank(self):
        return self.matrix.nrows

    def basis(self, i):
        return tuple(ONE if k == i else ZERO for k in range(self.rank))

    def zero(self):
        return (ZERO,) * self.rank

    def D(self, v):
        return apply_D(self, v)

    def __eq__(self, other):
        return isinstance(other, DiffModule) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"DiffModule({self.matrix.to_lists()})"

    def to_json(self):
        return {"rank": self.rank, "matrix": self.matrix.to_lists()}


def trivial_module():
    return DiffModule(PolyMatrix([[ZERO]]), "A")


def apply_D(M, v):
    v = _vec(v, M.rank)
    Mv = M.matrix.matvec(v)
    return tuple(e.derivative() - f for e, f in zip(v, Mv))


def apply_dual_D(M, phi):
    """Differential of a functional (row): phi' + phi M."""
    phi = _vec(phi, M.rank)
    pm = M.matrix.vecmat(phi)
    return tuple(e.derivative() + f for e, f in zip(phi, pm))


def act_weyl(M, v, u):
    """Right action v . sum Y^n a_n = sum D^n(v) a_n."""
    v = _vec(v, M.rank)
    if u.algebra.h != ONE:
        raise ValueError("modules carry the d/dx action only")
    out = M.zero()
    cur, k = v, 0
    for n in sorted(u.terms):
        while k < n:
            cur = apply_D(M, cur)
            k += 1
        a = u.terms[n]
        out = tuple(o + c * a for o, c in zip(out, cur))
    return out


def tensor(M, N):
    m, n = M.rank, N.rank
    return DiffModule(M.matrix.kron(PolyMatrix.identity(n)) + PolyMatrix.identity(m).kron(N.matrix))


def tensor_vectors(v, w):
    return tuple(a * b for a in v for b in w)


def dual(M):
    return DiffModule(-M.matrix.transpose())


def hom_module(M, N):
    """Hom(M, N) realised as dual(M) (x) N, basis e_i* (x) f_j (i major)."""
    return tensor(dual(M), N)


def hom_vector(L, M, N):
    """Coordinates of the n x m matrix L in hom_module(M, N)."""
    L = L if isinstance(L, PolyMatrix) else PolyMatrix(L)
    if L.shape != (N.rank, M.rank):
        raise ValueError("shape mismatch")
    return tuple(L[j, i] for i in range(M.rank) for j in range(N.rank))


def wedge_top(M):
    return DiffModule(PolyMatrix([[M.matrix.trace()]]))


def direct_sum(M, N):
    return DiffModule(M.matrix.block_diag(N.matrix))


def is_morphism(M, N, L):
    """True iff L D_M = D_N L, checked on the standard basis of M."""
    L = L if isinstance(L, PolyMatrix) else PolyMatrix(L)
    if L.shape != (N.rank, M.rank):
        raise ValueError("morphism matrix must be rank(N) x rank(M)")
    for i in range(M.rank):
        e = M.basis(i)
        if L.matvec(apply_D(M, e)) != apply_D(N, L.matvec(e)):
            return False
    return True


class SolutionSpace:
    __slots__ = ("module", "solutions", "degree_bound", "saturated")

    def __init__(self, module, solutions, degree_bound, saturated):
        self.module = module
        self.solutions = tuple(solutions)
        self.degree_bound = degree_bound
        self.saturated = saturated

    def __len__(self):
        return len(self.solutions)

    def __iter__(self):
        return iter(self.solutions)

    def __repr__(self):
        sols = ["(" + ", ".join(map(str, s)) + ")" for s in self.solutions]
        return f"SolutionSpace([{', '.join(sols)}], bound={self.degree_bound}, saturated={self.saturated})"


def default_degree_bound(M):
    return 2 * max(M.matrix.max_degree(), 0) * M.rank + M.rank + 5


def poly_solutions(M, degree_bound=None):
    """Q-basis of polynomial vectors v, deg v <= bound, with D(v) = 0."""
    B = default_degree_bound(M) if degree_bound is None else degree_bound
    if B < 0:
        raise ValueError("degree bound must be >= 0")
    m = M.rank
    unknowns = [(i, d) for i in range(m) for d in range(B + 1)]
    images = []
    for i, d in unknowns:
        v = [ZERO] * m
        v[i] = UniPoly.monomial(d)
        images.append(apply_D(M, v))
    top = B + max(M.matrix.max_degree(), 0) + 1
    rows = []
    for comp in range(m):
        for e in range(top + 1):
            row = [img[comp][e] for img in images]
            if any(row):
                rows.append(row)
    ns = nullspace(rows, len(unknowns))
    # bring the basis to reduced echelon form for a canonical answer
    if ns:
        from .algebra.linalg import _dm, _frac
        R, _ = _dm(ns, len(unknowns)).rref()
        ns = [[_frac(c) for c in r] for r in R.to_list() if any(r)]
    sols, saturated = [], False
    for vec in ns:
        comps = [[Fraction(0)] * (B + 1) for _ in range(m)]
        for (i, d), c in zip(unknowns, vec):
            comps[i][d] = c
            if c and d == B:
                saturated = True
        sols.append(tuple(UniPoly(c) for c in comps))
    sols.sort(key=lambda s: [(-1 if not e else e.degree) for e in s])
    return SolutionSpace(M, sols, B, saturated)


def recurrence_pn(k):
    """p_0 = 1, p_{n+1} = x p_n + p_n'."""
    x = UniPoly([0, 1])
    out = [ONE]
    for _ in range(k):
        p = out[-1]
        out.append(x * p + p.derivative())
    return out


def recurrence_Mn(mat, k):
    """M_0 = I, M_{n+1} = M_n' + M_n M."""
    mat = mat if isinstance(mat, PolyMatrix) else PolyMatrix(mat)
    if mat.nrows != mat.ncols:
        raise ValueError("matrix must be square")
    out = [PolyMatrix.identity(mat.nrows)]
    for _ in range(k):
        G = out[-1]
        out.append(G.derivative() + G * mat)
    return out


def fundamental_series(mat, order=DEFAULT_ORDER):
    """F(Z) = sum_n M_n Z^n / n!, satisfying d_Z F = iota(M) F and F(0) = I.

    ``iota`` is the Taylor map a(x) -> a(x + Z).  Returned as a tuple of
    rows of :class:`TruncSeries`.
    """
    mat = mat if isinstance(mat, PolyMatrix) else PolyMatrix(mat)
    Ms = recurrence_Mn(mat, order)
    n = mat.nrows
    return tuple(tuple(TruncSeries([Ms[k][i, j] * Fraction(1, factorial(k)) for k in range(order + 1)], order)
                       for j in range(n)) for i in range(n))


def series_matmul(F, G):
    n, m, p = len(F), len(G), len(G[0])
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = None
            for k in range(m):
                t = F[i][k] * G[k][j]
                acc = t if acc is None else acc + t
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def series_det(F):
    from itertools import permutations
    from .algebra.polymatrix import perm_sign
    n = len(F)
    acc = None
    for p in permutations(range(n)):
        t = F[0][p[0]]
        for i in range(1, n):
            t = t * F[i][p[i]]
        if perm_sign(p) < 0:
            t = -t
        acc = t if acc is None else acc + t
    return acc
