from hypothesis import given
from hypothesis import strategies as st

from hopfoid.algebra.hnf import hnf
from hopfoid.algebra.krylov import FractionFreeEchelon
from hopfoid.algebra.linalg import nullspace, rank, solve
from hopfoid.algebra.unipoly import ONE, ZERO, UniPoly
from conftest import polys

X = UniPoly([0, 1])


def test_simple_hnf():
    B = hnf([(X, ZERO), (ZERO, X), (ONE, ONE)])
    assert B.rank == 2
    # the span is {(p, q) : p = q mod x}
    assert (ONE, ONE) in B and (X, ZERO) in B
    assert (ONE, ZERO) not in B


def test_proper_submodule():
    B = hnf([(X, X * X), (X * X, X)])
    assert (X, X * X) in B
    assert (ONE, ZERO) not in B
    ok, cof = B.membership((X + X * X, X * X + X))
    assert ok


@given(st.lists(st.tuples(polys(2), polys(2), polys(2)), min_size=1, max_size=4), st.randoms())
def test_canonical_and_order_independent(cols, rnd):
    B = hnf(cols, 3)
    shuffled = list(cols)
    rnd.shuffle(shuffled)
    assert hnf(shuffled, 3) == B
    for c in cols:
        ok, cof = B.membership(c)
        assert ok
        acc = [ZERO] * 3
        for k, b in zip(cof, B.cols):
            acc = [a + k * e for a, e in zip(acc, b)]
        assert tuple(acc) == tuple(c)


@given(st.lists(st.tuples(polys(2), polys(2), polys(2)), max_size=5))
def test_fraction_free_rank_matches_sympy(vecs):
    E = FractionFreeEchelon(3)
    for v in vecs:
        E.add(v)
    # the Q(x)-rank equals the Q-rank after a random evaluation, generically
    import sympy
    x = sympy.Symbol("x")
    M = sympy.Matrix([[sum(sympy.Rational(c.numerator, c.denominator) * x ** k for k, c in enumerate(e.coeffs()))
                       for e in v] for v in vecs]) if vecs else sympy.zeros(0, 3)
    assert E.rank == M.rank()


def test_linalg_helpers():
    rows = [[1, 2, 3], [2, 4, 6]]
    assert rank(rows, 3) == 1
    ns = nullspace(rows, 3)
    assert len(ns) == 2
    assert solve([[1, 1], [1, -1]], 2, [3, 1]) == [2, 1]
    assert solve([[1, 1], [1, 1]], 2, [1, 2]) is None
