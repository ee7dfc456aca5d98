"""Classes [p* (x) p] of the finite dual of the Weyl algebra.

A :class:`DualClass` is a triple (module, functional, vector).  Its value
under the evaluation map is the functional on the Weyl algebra

    zeta(c)(sum Y^n a_n) = sum_n phi(D^n v) a_n.

Sums are packed into one class over a direct sum, products live over tensor
modules, and equality is decided exactly by saturating the cyclic
D-submodule generated by the difference vector.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra.hnf import SubmoduleBasis
from .algebra.krylov import FractionFreeEchelon
from .algebra.polymatrix import PolyMatrix, dot
from .algebra.unipoly import ONE, ZERO, as_poly
from .diffmod import (DiffModule, apply_D, direct_sum, dual,
                      tensor, tensor_vectors, trivial_module)
from .weyl import WeylElement, weyl_coproduct

__all__ = ["DualClass", "unit_class", "zero_class", "zeta_eval", "zeta_table", "mul",
           "normalize_sum", "negate", "scale", "coproduct", "counit", "antipode",
           "equal", "compare", "compare_hnf", "Verdict", "bimodule_act", "coaction", "coaction_roundtrip",
           "minimize", "compact", "convolution", "reduce_class", "saturate", "basis_class"]


class DualClass:
    __slots__ = ("module", "functional", "vector")

    def __init__(self, module, functional, vector):
        m = module.rank
        functional = tuple(as_poly(e) for e in functional)
        vector = tuple(as_poly(e) for e in vector)
        if len(functional) != m or len(vector) != m:
            raise ValueError("functional and vector must have the module's rank")
        self.module = module
        self.functional = functional
        self.vector = vector

    @property
    def rank(self):
        return self.module.rank

    def zeta(self, u):
        return zeta_eval(self, u)

    def __add__(self, other):
        return normalize_sum([self, other])

    def __sub__(self, other):
        return normalize_sum([self, negate(other)])

    def __neg__(self):
        return negate(self)

    def __mul__(self, other):
        return mul(self, other)

    def __repr__(self):
        return (f"DualClass(rank={self.rank}, functional=({', '.join(map(str, self.functional))}), "
                f"vector=({', '.join(map(str, self.vector))}))")

    def to_json(self):
        return {"module": self.module.to_json(),
                "functional": [str(e) for e in self.functional],
                "vector": [str(e) for e in self.vector]}


def unit_class(a=ONE, b=ONE):
    """[l_a (x) b] over the trivial module; zeta is u -> a * eps(b u)."""
    return DualClass(trivial_module(), (a,), (b,))


def zero_class():
    return DualClass(trivial_module(), (ZERO,), (ZERO,))


def basis_class(M, i, j):
    """[e_i* (x) e_j] over M."""
    return DualClass(M, M.basis(i), M.basis(j))


def zeta_eval(c, u):
    if isinstance(u, int) or not isinstance(u, WeylElement):
        u = WeylElement({0: as_poly(u)})
    acc = ZERO
    cur, k = c.vector, 0
    for n in sorted(u.terms):
        while k < n:
            cur = apply_D(c.module, cur)
            k += 1
        acc = acc + dot(c.functional, cur) * u.terms[n]
    return acc


def zeta_table(c, n):
    """[zeta(c)(Y^k) for k = 0..n]."""
    out, cur = [], c.vector
    for k in range(n + 1):
        out.append(dot(c.functional, cur))
        if k < n:
            cur = apply_D(c.module, cur)
    return out


def mul(c, d, minimal=True):
    """Product over tensor(module_d, module_c) with vector v_d (x) v_c."""
    prod = DualClass(tensor(d.module, c.module),
                     tensor_vectors(d.functional, c.functional),
                     tensor_vectors(d.vector, c.vector))
    return compact(prod) if minimal else prod


def normalize_sum(cs):
    cs = list(cs)
    if not cs:
        return zero_class()
    if len(cs) == 1:
        return cs[0]
    M, phi, v = cs[0].module, cs[0].functional, cs[0].vector
    for c in cs[1:]:
        M = direct_sum(M, c.module)
        phi = phi + c.functional
        v = v + c.vector
    return DualClass(M, phi, v)


def negate(c):
    return DualClass(c.module, tuple(-e for e in c.functional), c.vector)


def scale(c, q):
    return DualClass(c.module, tuple(e * q for e in c.functional), c.vector)


def coproduct(c):
    """The pairs ([p* (x) e_a], [e_a* (x) p]) over the standard basis."""
    M = c.module
    return [(DualClass(M, c.functional, M.basis(a)), DualClass(M, M.basis(a), c.vector))
            for a in range(M.rank)]


def counit(c):
    return dot(c.functional, c.vector)


def antipode(c):
    return DualClass(dual(c.module), c.vector, c.functional)


def bimodule_act(c, left=ONE, right=ONE):
    left, right = as_poly(left), as_poly(right)
    return DualClass(c.module, tuple(e * left for e in c.functional),
                     tuple(e * right for e in c.vector))


def convolution(c, d, u, placement="right"):
    """sum over Delta(u) of zeta(c)(u2 . zeta(d)(u1)).

    ``placement`` says on which side of u2 the scalar zeta(d)(u1) is put;
    ``zeta(mul(c, d))`` agrees with the right placement.
    """
    if not isinstance(u, WeylElement):
        u = WeylElement({0: as_poly(u)})
    acc = ZERO
    for u1, u2 in weyl_coproduct(u):
        a = WeylElement({0: zeta_eval(d, u1)}, u.algebra)
        acc = acc + zeta_eval(c, u2 * a if placement == "right" else a * u2)
    return acc


def coaction(M, p):
    """chi(p) = sum_a e_a (x) [e_a* (x) p]."""
    p = tuple(as_poly(e) for e in p)
    return [(M.basis(a), DualClass(M, M.basis(a), p)) for a in range(M.rank)]


def coaction_roundtrip(M, p, u):
    """sum_a e_a * zeta([e_a* (x) p])(u); equals the action p . u."""
    out = [ZERO] * M.rank
    for e, cls in coaction(M, p):
        z = zeta_eval(cls, u)
        out = [o + b * z for o, b in zip(out, e)]
    return tuple(out)


def _saturation_steps(M, w, probe=None):
    """Generator driving the saturation of A-span{w, Dw, D^2 w, ...}.

    Yields after each inserted iterate and finishes (StopIteration value)
    with ``(basis, k, witness)``.  With ``probe`` (a row) the run stops at
    the first iterate the probe does not annihilate.
    """
    basis = SubmoduleBasis(M.rank)
    cur, k = tuple(w), 0
    while True:
        if probe is not None and dot(probe, cur):
            return basis, k, k
        if basis.membership(cur)[0]:
            return basis, k, None
        basis = basis.insert(cur).reduced()
        cur = apply_D(M, cur)
        k += 1
        yield None


def saturate(M, w, functional=None):
    """Saturate N = A-span{w, Dw, D^2 w, ...} until it is D-stable.

    Returns ``(basis, k, witness)`` where k is the number of iterates used.
    If ``functional`` is given the loop stops at the first iterate where it
    does not vanish, and ``witness`` is that index (else ``None``).
    """
    gen = _saturation_steps(M, w, functional)
    while True:
        try:
            next(gen)
        except StopIteration as stop:
            return stop.value


@dataclass(frozen=True)
class Verdict:
    equal: bool
    saturation_rank: int
    steps: int
    witness: int | None = None
    side: str = "vector"

    def __bool__(self):
        return self.equal

    def describe(self):
        if self.equal:
            return f"equal (saturation rank {self.saturation_rank})"
        return f"not equal (witness Y^{self.witness})"


def _first_difference(P, w, phi):
    cur, n = w, 0
    while not dot(phi, cur):
        cur = apply_D(P, cur)
        n += 1
    return n


def _krylov_steps(M, w, probe=None):
    """Krylov sequence of D over Q(x); finishes with ``(rank, k, witness)``.

    Stops at the first iterate dependent on its predecessors over Q(x) (the
    Q(x)-span is then D-stable), or at the first iterate the probe does not
    annihilate.
    """
    ech = FractionFreeEchelon(M.rank)
    cur, k = tuple(w), 0
    while True:
        if probe is not None and dot(probe, cur):
            return ech.rank, k, k
        if not ech.add(cur):
            return ech.rank, k, None
        cur = apply_D(M, cur)
        k += 1
        yield None


def _lockstep(runs):
    while True:
        for side, gen in runs:
            try:
                next(gen)
            except StopIteration as stop:
                return side, stop.value


def compare(c, d):
    """Exact decision of c == d in the finite dual, with a witness if not.

    The difference [phi (x) w] over P = M_c + M_d vanishes iff phi kills
    D^i w for all i.  The iterates are saturated over Q(x): once D^k w is
    dependent on w..D^(k-1) w their span is D-stable, so vanishing on the
    first k iterates decides.  The same test on the dual side (phi under D*,
    probed by w) is run in lockstep and the first run to close decides.  A
    "not equal" verdict carries the least n with zeta(c)(Y^n) != zeta(d)(Y^n).
    """
    P = direct_sum(c.module, d.module)
    w = c.vector + d.vector
    phi = c.functional + tuple(-e for e in d.functional)
    side, (rank, k, wit) = _lockstep([("vector", _krylov_steps(P, w, phi)),
                                      ("functional", _krylov_steps(dual(P), phi, w))])
    if wit is None:
        return Verdict(True, rank, k, None, side)
    n = wit if side == "vector" else _first_difference(P, w, phi)
    return Verdict(False, rank, k, n, side)


def compare_hnf(c, d):
    """Equality through saturation of the A-lattice (Hermite normal form).

    Slower than :func:`compare` but independent of it.
    """
    P = direct_sum(c.module, d.module)
    w = c.vector + d.vector
    phi = c.functional + tuple(-e for e in d.functional)
    basis, k, wit = saturate(P, w, phi)
    return Verdict(wit is None, basis.rank, k, wit, "vector")


def equal(c, d):
    return compare(c, d).equal


def _restrict(M, c, basis):
    """Class over the D-stable submodule spanned by ``basis``."""
    basis = basis.reduced()
    r = basis.rank
    cols = basis.cols
    G = []
    for b in cols:
        ok, cof = basis.membership(apply_D(M, b))
        if not ok:  # pragma: no cover - saturation guarantees closure
            raise AssertionError("saturated submodule not D-stable")
        G.append(cof)
    # column j of the new matrix is -cofactors of D(b_j)
    mat = PolyMatrix([[-G[j][i] for j in range(r)] for i in range(r)])
    ok, vec = basis.membership(c.vector)
    fun = tuple(dot(c.functional, b) for b in cols)
    return DualClass(DiffModule(mat), fun, vec)


def minimize(c):
    """Restrict to the D-cyclic submodule generated by the vector."""
    M = c.module
    if not any(c.vector) or not any(c.functional):
        return zero_class()
    basis, _, _ = saturate(M, c.vector)
    if basis.rank == M.rank and _is_standard(basis.reduced()):
        return c
    return _restrict(M, c, basis)


def compact(c):
    """A zeta-equal class of small rank.

    Finds, in lockstep, the Q(x)-rank of the vector's D-orbit and of the
    functional's D*-orbit.  If the smaller one is below the module rank the
    class is restricted to the corresponding saturated A-lattice (the
    functional side is carried back through the antipode).
    """
    M = c.module
    if not any(c.vector) or not any(c.functional):
        return zero_class()
    side, (rank, _, _) = _lockstep([("vector", _krylov_steps(M, c.vector)),
                                    ("functional", _krylov_steps(dual(M), c.functional))])
    if rank == M.rank:
        return c
    if side == "vector":
        return _restrict(M, c, saturate(M, c.vector)[0])
    D = dual(M)
    return antipode(_restrict(D, antipode(c), saturate(D, c.functional)[0]))


def _is_standard(basis):
    for j, col in enumerate(basis.cols):
        for i, e in enumerate(col):
            if e != (ONE if i == j else ZERO):
                return False
    return True


def reduce_class(c):
    """Two-sided reduction: reachable part, then observable part."""
    c = minimize(c)
    if not any(c.functional):
        return zero_class()
    return antipode(minimize(antipode(c)))
