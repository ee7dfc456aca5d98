"""Picard-Vessiot ring of a differential module, at desk scale.

The presentation ring is ``A[X_ij, d]`` with ``d = det_X^{-1}`` and
derivation ``delta(X) = M X``, ``delta(x) = 1``.  Evaluating ``X -> F`` on the
truncated fundamental matrix (and ``x -> x + Z``) is a morphism of
differential rings up to the truncation order.

No attempt is made to compute the maximal differential ideal; the
isotropy-quotient report only lists relations it can certify by exact class
equality in the finite dual.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra.multipoly import GenTable
from .algebra.polymatrix import PolyMatrix
from .algebra.series import DEFAULT_ORDER, TruncSeries, taylor
from .algebra.unipoly import ONE, ZERO, UniPoly
from .diffmod import (DiffModule, dual, fundamental_series, is_morphism, poly_solutions,
                      series_det, series_matmul, trivial_module)
from .finite_dual import (DualClass, basis_class, bimodule_act, compare, mul, normalize_sum,
                          scale, unit_class)
from .galois import GaloisContext, _det

__all__ = ["PVRing", "pv_derive", "pv_fundamental", "pv_evaluate", "FundamentalMatrix",
           "pv_isotropy_quotient_report", "PVReport", "az_example"]


class PVRing:
    """A[X_ij, det_X^{-1}] with the derivation delta(X) = M X."""

    def __init__(self, module):
        if not isinstance(module, DiffModule):
            module = DiffModule(module)
        self.module = module
        m = self.m = module.rank
        self.xnames = {(i, j): f"X{i + 1}{j + 1}" for i in range(m) for j in range(m)}
        names = ["x"] + [self.xnames[(i, j)] for i in range(m) for j in range(m)] + ["d"]
        self.table = GenTable(names, ["d"])
        mat = module.matrix
        self._table_images = {}
        for (i, j), name in self.xnames.items():
            acc = self.table.zero()
            for k in range(m):
                if mat[i, k]:
                    acc = acc + self.poly(mat[i, k]) * self.X(k, j)
            self._table_images[name] = acc
        self._table_images["x"] = self.table.one()
        ddet = self.det_X().derive(self._table_images)
        self._table_images["d"] = -ddet * self.table.var("d") ** 2

    def X(self, i, j):
        return self.table.var(self.xnames[(i, j)])

    def d(self):
        return self.table.var("d")

    def poly(self, a):
        """Embed a in A = Q[x]."""
        x = self.table.var("x")
        acc = self.table.zero()
        for k, c in enumerate(a.coeffs()):
            if c:
                acc = acc + x ** k * c
        return acc

    def det_X(self):
        return _det([[self.X(i, j) for j in range(self.m)] for i in range(self.m)], self.table)

    def derivation_table(self):
        return dict(self._table_images)

    def abel_identity(self):
        """delta(det_X) == tr(M) det_X."""
        return pv_derive(self, self.det_X()) == self.poly(self.module.matrix.trace()) * self.det_X()

    def leibniz_on_generators(self):
        """delta(g h) = delta(g) h + g delta(h) for all pairs of generators."""
        gens = self.table.gens()
        for g in gens:
            for h in gens:
                if pv_derive(self, g * h) != pv_derive(self, g) * h + g * pv_derive(self, h):
                    return False
        # d stands for det_X^{-1}: delta(d det) = delta(det) d (1 - d det), which
        # vanishes modulo d det - 1
        d, det = self.d(), self.det_X()
        return pv_derive(self, d * det) == pv_derive(self, det) * d * (self.table.one() - d * det)


def pv_derive(ring, q):
    if q.table != ring.table:
        raise ValueError("polynomial does not belong to this PV ring")
    return q.derive(ring._table_images)


@dataclass
class FundamentalMatrix:
    rows: tuple
    order: int
    matrix: PolyMatrix = field(repr=False, default=None)

    @property
    def size(self):
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def coefficient_matrix(self, n):
        """Coefficient of Z^n, as a PolyMatrix."""
        return PolyMatrix([[e[n] for e in row] for row in self.rows])

    def at_zero_is_identity(self):
        m = self.size
        return all(self.rows[i][j][0] == (ONE if i == j else ZERO) for i in range(m) for j in range(m))

    def satisfies_system(self):
        """d_Z F == iota(M) F up to the truncation order."""
        N, m = self.order, self.size
        iota = [[taylor(self.matrix[i, j], N) for j in range(m)] for i in range(m)]
        rhs = series_matmul(iota, self.rows)
        return all(self.rows[i][j].dZ().eq_upto(rhs[i][j], N - 1) for i in range(m) for j in range(m))

    def det(self):
        return series_det(self.rows)

    def abel(self):
        """d_Z det F == iota(tr M) det F up to the truncation order."""
        N = self.order
        dF = self.det()
        return dF.dZ().eq_upto(taylor(self.matrix.trace(), N) * dF, N - 1)

    def to_json(self):
        return {"order": self.order,
                "entries": [[[str(c) for c in e.coeffs] for e in row] for row in self.rows]}

    @classmethod
    def from_json(cls, data, matrix=None):
        from .parser import parse_unipoly
        N = data["order"]
        rows = tuple(tuple(TruncSeries([parse_unipoly(c) for c in e], N) for e in row)
                     for row in data["entries"])
        return cls(rows, N, matrix)

    def table(self):
        """Order-by-order text table."""
        lines = []
        for n in range(self.order + 1):
            C = self.coefficient_matrix(n)
            if not any(C[i, j] for i in range(self.size) for j in range(self.size)):
                continue
            rows = ["[" + ", ".join(str(C[i, j]) for j in range(self.size)) + "]" for i in range(self.size)]
            lines.append(f"Z^{n}: " + " ".join(rows))
        return "\n".join(lines)


def pv_fundamental(ring, order=DEFAULT_ORDER):
    if order < 0:
        raise ValueError("truncation order must be >= 0")
    mat = ring.module.matrix
    return FundamentalMatrix(fundamental_series(mat, order), order, mat)


def pv_evaluate(ring, q, F):
    """psi: x -> x + Z, X -> F, d -> (det F)^{-1}, as a truncated series."""
    N = F.order
    x_img = TruncSeries([UniPoly([0, 1]), ONE], N)
    imgs = [x_img] + [F[i, j] for i in range(ring.m) for j in range(ring.m)]
    det = F.det()
    imgs.append(det.inverse())
    dpos = len(imgs) - 1
    pw = {}

    def power(k, e):
        if e < 0:
            if k != dpos:
                raise ValueError("only det_X^{-1} may carry a negative exponent")
            return power_base(det, -e, ("det", -e))
        return power_base(imgs[k], e, (k, e))

    def power_base(base, e, key):
        if key not in pw:
            acc = TruncSeries.const(ONE, N)
            for _ in range(e):
                acc = acc * base
            pw[key] = acc
        return pw[key]

    total = TruncSeries([], N)
    for e, c in q.terms.items():
        t = TruncSeries.const(UniPoly([c]), N)
        for k, ek in enumerate(e):
            if ek:
                t = t * power(k, ek)
        total = total + t
    return total


# ---------------------------------------------------------------------------
# isotropy quotient report

@dataclass
class Relation:
    statement: str
    lhs: DualClass = field(repr=False)
    rhs: DualClass = field(repr=False)
    verdict: object = None
    quotient_effect: str = ""

    @property
    def certified(self):
        return bool(self.verdict and self.verdict.equal)


@dataclass
class PVReport:
    rank: int
    generators: list
    relations: list
    conclusion: str
    fundamental: FundamentalMatrix = field(repr=False, default=None)
    quotient_values: dict = field(default_factory=dict)

    @property
    def all_certified(self):
        return all(r.certified for r in self.relations)

    def text(self):
        lines = [f"rank {self.rank}; generators " + ", ".join(self.generators)]
        for r in self.relations:
            tag = "certified" if r.certified else "NOT certified"
            lines.append(f"  [{tag}] {r.statement}" + (f"  => {r.quotient_effect}" if r.quotient_effect else ""))
        if self.quotient_values:
            vals = ", ".join(f"{k} = {v}" for k, v in sorted(self.quotient_values.items()))
            lines.append("  in P: " + vals)
        lines.append("conclusion: " + self.conclusion)
        if self.fundamental is not None:
            lines.append("fundamental matrix (analytic shadow):")
            lines.append(self.fundamental.table())
        return "\n".join(lines)

    def to_json(self):
        return {"rank": self.rank, "generators": self.generators,
                "relations": [{"statement": r.statement, "certified": r.certified,
                               "quotient": r.quotient_effect} for r in self.relations],
                "quotient_values": {k: str(v) for k, v in sorted(self.quotient_values.items())},
                "conclusion": self.conclusion,
                "fundamental": None if self.fundamental is None else self.fundamental.to_json()}


def _fname(i, j):
    return f"f{i + 1}{j + 1}"


def _vec_str(v):
    return "(" + ", ".join(str(e) for e in v) + ")"


def _unimodular_inverse(S):
    """Inverse over A of a matrix with nonzero constant determinant, else None."""
    det = S.det()
    if not det or not det.is_const():
        return None
    return S.adjugate().scale(1 / det.const_value())


def pv_isotropy_quotient_report(ctx, order=6):
    """Relations among f_ij = [e_i* (x) e_j] certified by exact class equality.

    Uses horizontal sections s of M (``D s = 0``) and of the dual module: for
    every functional phi, ``[phi (x) s b] = [phi(s) (x) b]``, so modulo
    ``s = t`` the generators satisfy ``sum_j f_ij s_j = s_i``; dually
    ``sum_i phi_i f_ij = phi_j``.  When the sections form a unimodular matrix
    S, each ``[e_i* (x) e_j]`` equals ``sum_k [S_ik (x) (S^-1)_kj]`` and the
    quotient collapses to f = identity.
    """
    if not isinstance(ctx, GaloisContext):
        ctx = GaloisContext(ctx)
    M = ctx.module
    m = ctx.m
    gens = [_fname(i, j) for i in range(m) for j in range(m)]
    rels, qvals = [], {}
    F = pv_fundamental(PVRing(M), order)

    if m == 1:
        f = basis_class(M, 0, 0)
        v = compare(mul(f, ctx.det_inverse()), unit_class())
        rels.append(Relation("f11 * det^-1 == 1", mul(f, ctx.det_inverse()), unit_class(), v,
                             "f11 is invertible"))
    sols = poly_solutions(M).solutions
    dsols = poly_solutions(dual(M)).solutions
    for s in sols:
        for i in range(m):
            lhs = normalize_sum([bimodule_act(basis_class(M, i, j), right=s[j]) for j in range(m) if s[j]])
            rhs = unit_class(s[i], ONE)
            st = f"sum_j [e{i + 1}*(x)e_j s_j] == [{s[i]}(x)1] for horizontal s = {_vec_str(s)}"
            terms = " + ".join(f"({s[j]})*{_fname(i, j)}" for j in range(m) if s[j]) or "0"
            rels.append(Relation(st, lhs, rhs, compare(lhs, rhs), f"{terms} = {s[i]}"))
    for phi in dsols:
        for j in range(m):
            lhs = normalize_sum([bimodule_act(basis_class(M, i, j), left=phi[i]) for i in range(m) if phi[i]])
            rhs = unit_class(ONE, phi[j])
            st = f"sum_i [phi_i e_i*(x)e{j + 1}] == [1(x){phi[j]}] for horizontal phi = {_vec_str(phi)}"
            terms = " + ".join(f"({phi[i]})*{_fname(i, j)}" for i in range(m) if phi[i]) or "0"
            rels.append(Relation(st, lhs, rhs, compare(lhs, rhs), f"{terms} = {phi[j]}"))

    conclusion = None
    if len(sols) == m and m > 0:
        S = PolyMatrix([[sols[k][i] for k in range(m)] for i in range(m)])
        Si = _unimodular_inverse(S)
        if Si is not None:
            ok = True
            for i in range(m):
                for j in range(m):
                    rhs = normalize_sum([unit_class(S[i, k], Si[k, j]) for k in range(m)
                                         if S[i, k] and Si[k, j]])
                    lhs = basis_class(M, i, j)
                    v = compare(lhs, rhs)
                    val = sum((S[i, k] * Si[k, j] for k in range(m)), ZERO)
                    qvals[_fname(i, j)] = val
                    rels.append(Relation(f"[e{i + 1}*(x)e{j + 1}] == sum_k [S{i + 1}k (x) Sinv_k{j + 1}]",
                                         lhs, rhs, v, f"{_fname(i, j)} = {val}"))
                    ok = ok and v.equal
            if ok:
                conclusion = "P = A: every f_ij is certified constant (f = identity); trivial isotropy group"
    if conclusion is None:
        if m == 1:
            conclusion = ("P generated by one invertible element f11 (inverse det^-1): "
                          "a quotient of (A (x) A)[T, T^-1]")
        else:
            conclusion = (f"P generated by the {m * m} elements f_ij and det^-1; "
                          f"{sum(r.certified for r in rels)} relation(s) certified; no complete presentation claimed")
    return PVReport(m, gens, rels, conclusion, F, qvals)


# ---------------------------------------------------------------------------
# the nilpotent rank-two example


def az_example(b):
    """Checks for M = [[0, a], [0, 0]] with a = b'.

    Returns a dict of named items, each ``(ok, detail)``.  Both the literal
    displayed morphism ``1 -> e2 - e1 b`` and the sign-corrected one
    ``1 -> e2 + e1 b`` are checked; under D(v) = v' - M v only the latter is
    a differential morphism.
    """
    b = b if isinstance(b, UniPoly) else UniPoly(b)
    a = b.derivative()
    if not a:
        raise ValueError("b must be non-constant")
    M = DiffModule([[ZERO, a], [ZERO, ZERO]])
    A = trivial_module()
    out = {}
    out["morphism 1 -> e1"] = (is_morphism(A, M, PolyMatrix([[ONE], [ZERO]])), "A -> M")
    out["morphism (a1,a2) -> a2"] = (is_morphism(M, A, PolyMatrix([[ZERO, ONE]])), "M -> A")
    out["displayed morphism 1 -> e2 - e1*b"] = (is_morphism(A, M, PolyMatrix([[-b], [ONE]])), "A -> M")
    out["corrected morphism 1 -> e2 + e1*b"] = (is_morphism(A, M, PolyMatrix([[b], [ONE]])), "A -> M")

    e12 = basis_class(M, 0, 1)
    e11b = bimodule_act(basis_class(M, 0, 0), right=b)
    # displayed chain: [e1*(x)e2] = [e1*(x)(e2 - e1 b)] + [e1*(x)e1 b] = -[b(x)1] + [e1*(x)e1 b]
    step1 = normalize_sum([DualClass(M, (ONE, ZERO), (-b, ONE)), e11b])
    out["displayed chain step 1 (linearity)"] = _eq(e12, step1)
    disp = normalize_sum([scale(unit_class(b, ONE), -1), e11b])
    out["displayed chain final -[b(x)1] + [e1*(x)e1 b]"] = _eq(e12, disp)
    corr = normalize_sum([unit_class(b, ONE), scale(e11b, -1)])
    out["corrected chain final [b(x)1] - [e1*(x)e1 b]"] = _eq(e12, corr)
    out["f11 = 1: [e1*(x)e1] == [1(x)1]"] = _eq(basis_class(M, 0, 0), unit_class())
    out["f22 = 1: [e2*(x)e2] == [1(x)1]"] = _eq(basis_class(M, 1, 1), unit_class())
    out["f21 = 0: [e2*(x)e1] == 0"] = _eq(basis_class(M, 1, 0), DualClass(A, (ZERO,), (ZERO,)))
    rep = pv_isotropy_quotient_report(GaloisContext(M))
    f = rep.quotient_values
    triv = bool(f) and all(f[_fname(i, j)] == (ONE if i == j else ZERO) for i in range(2) for j in range(2))
    out["pv_report f11 = f22 = 1, f12 = f21 = 0"] = (triv and rep.all_certified, rep.conclusion)
    return out


def _eq(c, d):
    v = compare(c, d)
    return v.equal, v.describe()
