"""The Hopf algebroid generated by the matrix coefficients of one module.

Generators are ``u_ij = [e_j* (x) e_i]``.  Polynomials in the generators
(with two-sided base coefficients) are turned into a single class by packing
monomials that share their functional indices, which keeps ranks small.

Conventions (see also :func:`convention_report` in :mod:`hopfoid.suite`):

* ``det`` uses the functional ``e_1* (x) ... (x) e_m*`` slotwise and the
  vector ``sum_sigma sgn(sigma) e_sigma(1) (x) ... (x) e_sigma(m)``, so its
  counit is 1.  It is zeta-equal to ``[1 (x) 1]`` over ``wedge_top(M) = [tr M]``.
* ``det^{-1}`` is ``[1 (x) 1]`` over ``wedge_top(dual M) = [-tr M]``; the
  carried rank-one module is ``a -> a' + tr(M) a``.
"""

from __future__ import annotations

from itertools import permutations

from .algebra.multipoly import GenTable, MultiPoly
from .algebra.polymatrix import perm_sign
from .algebra.unipoly import ONE, ZERO, UniPoly
from .diffmod import DiffModule, dual, tensor, trivial_module, wedge_top
from .finite_dual import (DualClass, antipode, basis_class, equal, mul,
                          normalize_sum, compact, zero_class)

__all__ = ["GaloisContext", "PresentationRing", "presentation_structure",
           "presentation_map", "antipode_cofactor_check", "laplace_check"]

MAX_COFACTOR_RANK = 4


class GaloisContext:
    def __init__(self, module):
        if not isinstance(module, DiffModule):
            module = DiffModule(module)
        self.module = module
        self.m = module.rank
        self._gens = {(i, j): basis_class(module, j, i)
                      for i in range(self.m) for j in range(self.m)}
        self._det = None
        self._ring = None

    # -- generators (0-based indices)
    def generator(self, i, j):
        if not (0 <= i < self.m and 0 <= j < self.m):
            raise IndexError(f"generator index ({i + 1},{j + 1}) out of range 1..{self.m}")
        return self._gens[(i, j)]

    def det_class(self):
        if self._det is None:
            M = self.module
            T = M
            for _ in range(self.m - 1):
                T = tensor(T, M)
            n = T.rank
            m = self.m
            vec = [ZERO] * n
            for p in permutations(range(m)):
                idx = 0
                for k in p:
                    idx = idx * m + k
                vec[idx] = vec[idx] + perm_sign(p)
            fidx = 0
            for k in range(m):
                fidx = fidx * m + k
            fun = [ONE if t == fidx else ZERO for t in range(n)]
            self._det = DualClass(T, fun, vec)
        return self._det

    def det_normal_form(self):
        """Rank-one grouplike class [1 (x) 1] over wedge_top(M)."""
        return DualClass(wedge_top(self.module), (ONE,), (ONE,))

    def det_inverse(self):
        return DualClass(wedge_top(dual(self.module)), (ONE,), (ONE,))

    def grouplike_twist(self):
        """Rank-one module carried by det^{-1}: D(a) = a' + tr(M) a."""
        return wedge_top(dual(self.module))

    @property
    def ring(self):
        if self._ring is None:
            self._ring = PresentationRing(self.m)
        return self._ring

    def cofactor(self, j, i):
        """v_ji = (-1)^(i+j) times the minor of (u) without row j, column i."""
        if self.m > MAX_COFACTOR_RANK:
            raise ValueError(f"cofactor expansion limited to rank <= {MAX_COFACTOR_RANK}")
        if not (0 <= i < self.m and 0 <= j < self.m):
            raise IndexError("cofactor index out of range")
        return presentation_map(self, self.ring.cofactor_poly(j, i))

    def det_from_generators(self):
        return presentation_map(self, self.ring.det_poly())


def presentation_map(ctx, q):
    """phi_M: X_ij -> u_ij, x -> source, y -> target, d -> det^{-1}."""
    R = ctx.ring
    if q.table != R.table:
        raise ValueError("polynomial does not belong to this presentation ring")
    M = ctx.module
    m = ctx.m
    ix, iy, idd = R.table.index("x"), R.table.index("y"), R.table.index("d")
    # group monomials by (sorted functional indices, x power, d power)
    groups = {}
    for e, c in q.terms.items():
        pairs = []
        for (i, j), pos in R.xpos.items():
            pairs += [(i, j)] * e[pos]
        if e[idd] < 0:
            raise ValueError("negative power of det^{-1} is not supported; use det_X")
        pairs.sort(key=lambda t: (t[1], t[0]))
        js = tuple(j for _, j in pairs)
        key = (js, e[ix], e[idd])
        vecidx = tuple(i for i, _ in pairs)
        groups.setdefault(key, []).append((vecidx, e[iy], c))
    classes = []
    for (js, xp, dp), items in groups.items():
        r = len(js)
        T = trivial_module() if r == 0 else M
        for _ in range(max(r - 1, 0)):
            T = tensor(T, M)
        n = T.rank
        if r == 0:
            fun = [UniPoly.monomial(xp)]
            vec = [ZERO]
            for _, yp, c in items:
                vec[0] = vec[0] + UniPoly.monomial(yp, c)
        else:
            fidx = 0
            for j in js:
                fidx = fidx * m + j
            fun = [UniPoly.monomial(xp) if t == fidx else ZERO for t in range(n)]
            vec = [ZERO] * n
            for vi, yp, c in items:
                idx = 0
                for i in vi:
                    idx = idx * m + i
                vec[idx] = vec[idx] + UniPoly.monomial(yp, c)
        cls = compact(DualClass(T, fun, vec))
        for _ in range(dp):
            cls = mul(cls, ctx.det_inverse())
        classes.append(cls)
    if not classes:
        return zero_class()
    return compact(normalize_sum(classes))


class PresentationRing:
    """(A (x) A)[X_ij, det_X^{-1}] with position variables x (source), y (target).

    ``d`` denotes det_X^{-1}.  Tensor squares use families ``Xij.1``, ``d.1``
    and ``Xij.2``, ``d.2`` with a shared middle position variable ``m``.
    """

    def __init__(self, m):
        self.m = m
        self.xnames = {(i, j): f"X{i + 1}{j + 1}" for i in range(m) for j in range(m)}
        names = ["x", "y"] + [self.xnames[(i, j)] for i in range(m) for j in range(m)] + ["d"]
        self.table = GenTable(names, ["d"])
        self.xpos = {k: self.table.index(v) for k, v in self.xnames.items()}
        t2 = ["x", "m", "y"]
        for s in ("1", "2"):
            t2 += [f"{self.xnames[(i, j)]}.{s}" for i in range(m) for j in range(m)] + [f"d.{s}"]
        self.table2 = GenTable(t2, ["d.1", "d.2"])
        self.base = GenTable(["x"])

    def X(self, i, j):
        return self.table.var(self.xnames[(i, j)])

    def var(self, name):
        return self.table.var(name)

    def matrix(self, table=None, suffix=""):
        table = table or self.table
        return [[table.var(self.xnames[(i, j)] + suffix) for j in range(self.m)] for i in range(self.m)]

    def det_poly(self, table=None, suffix=""):
        return _det(self.matrix(table, suffix), (table or self.table))

    def cofactor_poly(self, j, i, table=None, suffix=""):
        table = table or self.table
        X = self.matrix(table, suffix)
        minor = [[X[r][c] for c in range(self.m) if c != i] for r in range(self.m) if r != j]
        sgn = 1 if (i + j) % 2 == 0 else -1
        return _det(minor, table) * sgn

    def clear(self, p, N):
        """p * det^N with every d^k replaced by det^(N-k)."""
        idd = self.table.index("d")
        det = self.det_poly()
        out = self.table.zero()
        parts = {}
        for e, c in p.terms.items():
            k = e[idd]
            ne = list(e)
            ne[idd] = 0
            parts.setdefault(k, {})[tuple(ne)] = c
        for k, terms in parts.items():
            if N - k < 0:
                raise ValueError("clearing exponent too small")
            out = out + MultiPoly(self.table, terms) * det ** (N - k)
        return out

    def equal(self, p, q):
        """Equality in the localisation at det_X."""
        idd = self.table.index("d")
        N = max([e[idd] for e in list(p.terms) + list(q.terms)] + [0])
        return self.clear(p, N) == self.clear(q, N)


def _det(X, table):
    n = len(X)
    if n == 0:
        return table.one()
    acc = table.zero()
    for p in permutations(range(n)):
        t = table.one()
        for r in range(n):
            t = t * X[r][p[r]]
        acc = acc + t * perm_sign(p)
    return acc


def presentation_structure(R, q, which):
    """Structure maps of the presentation Hopf algebroid.

    ``coproduct`` lands in ``R.table2``; ``counit`` in the base ring Q[x];
    ``antipode`` in ``R.table``.
    """
    m = R.m
    if which == "coproduct":
        T = R.table2
        imgs = {"x": T.var("x"), "y": T.var("y"), "d": T.var("d.1") * T.var("d.2")}
        for (i, j), name in R.xnames.items():
            acc = T.zero()
            for k in range(m):
                acc = acc + T.var(f"{R.xnames[(i, k)]}.1") * T.var(f"{R.xnames[(k, j)]}.2")
            imgs[name] = acc
        return q.substitute(imgs, T)
    if which == "counit":
        B = R.base
        imgs = {"x": B.var("x"), "y": B.var("x"), "d": B.one()}
        for (i, j), name in R.xnames.items():
            imgs[name] = B.one() if i == j else B.zero()
        return q.substitute(imgs, B)
    if which == "antipode":
        T = R.table
        imgs = {"x": T.var("y"), "y": T.var("x"), "d": R.det_poly()}
        for (i, j), name in R.xnames.items():
            imgs[name] = T.var("d") * R.cofactor_poly(j, i)
        return q.substitute(imgs, T)
    raise ValueError(f"unknown structure map {which!r}")


def antipode_cofactor_check(ctx, detail=False):
    """mul(det^{-1}, v_ji) == S(u_ij) for all i, j (exact equality)."""
    results = {}
    dinv = ctx.det_inverse()
    for i in range(ctx.m):
        for j in range(ctx.m):
            lhs = mul(dinv, ctx.cofactor(j, i))
            rhs = antipode(ctx.generator(i, j))
            results[(i, j)] = equal(lhs, rhs)
    ok = all(results.values())
    return (ok, results) if detail else ok


def laplace_check(ctx, detail=False):
    """sum_k u_ik v_jk == delta_ij det, using class products and sums."""
    results = {}
    det = ctx.det_class()
    cof = {(j, k): ctx.cofactor(j, k) for j in range(ctx.m) for k in range(ctx.m)}
    for i in range(ctx.m):
        for j in range(ctx.m):
            lhs = normalize_sum([mul(ctx.generator(i, k), cof[(j, k)], minimal=False) for k in range(ctx.m)])
            rhs = det if i == j else zero_class()
            results[(i, j)] = equal(lhs, rhs)
    ok = all(results.values())
    return (ok, results) if detail else ok
