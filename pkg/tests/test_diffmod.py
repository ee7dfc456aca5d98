import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopfoid.algebra.polymatrix import PolyMatrix, dot
from hopfoid.algebra.unipoly import ONE, ZERO, UniPoly
from hopfoid.diffmod import (DiffModule, apply_D, apply_dual_D, direct_sum, dual, hom_module,
                             hom_vector, is_morphism, poly_solutions, recurrence_Mn, recurrence_pn,
                             tensor, tensor_vectors, trivial_module, wedge_top)
from conftest import modules, polys

X = UniPoly([0, 1])


def vec(data, m, deg=2):
    return tuple(data.draw(polys(deg)) for _ in range(m))


@given(modules(), modules(), st.data())
def test_tensor_leibniz(M, N, data):
    v, w = vec(data, M.rank), vec(data, N.rank)
    lhs = apply_D(tensor(M, N), tensor_vectors(v, w))
    rhs = [a + b for a, b in zip(tensor_vectors(apply_D(M, v), w), tensor_vectors(v, apply_D(N, w)))]
    assert lhs == tuple(rhs)


@given(modules(3), st.data())
def test_dual_pairing(M, data):
    v, phi = vec(data, M.rank), vec(data, M.rank)
    assert dot(phi, v).derivative() == dot(apply_dual_D(M, phi), v) + dot(phi, apply_D(M, v))
    assert apply_D(dual(M), phi) == apply_dual_D(M, phi)


@given(modules(3))
def test_wedge_top_is_trace(M):
    assert wedge_top(M).matrix == PolyMatrix([[M.matrix.trace()]])


@given(modules(2), modules(2), st.data())
def test_direct_sum(M, N, data):
    v, w = vec(data, M.rank), vec(data, N.rank)
    assert apply_D(direct_sum(M, N), v + w) == apply_D(M, v) + apply_D(N, w)


def test_nilpotent_solutions():
    M = DiffModule([[ZERO, X], [ZERO, ZERO]])
    sols = poly_solutions(M).solutions
    assert len(sols) == 2
    for s in sols:
        assert apply_D(M, s) == M.zero()
    # x^2/2 e1 + e2 is horizontal; e2 - x^2/2 e1 is not
    b = UniPoly([0, 0, "1/2"])
    assert apply_D(M, (b, ONE)) == M.zero()
    assert apply_D(M, (-b, ONE)) != M.zero()


def test_exponential_has_no_polynomial_solution():
    assert len(poly_solutions(DiffModule([[ONE]]))) == 0
    assert len(poly_solutions(DiffModule([[ZERO]]))) == 1


def test_morphisms_and_hom():
    M = DiffModule([[ZERO, X], [ZERO, ZERO]])
    A = trivial_module()
    assert is_morphism(A, M, PolyMatrix([[ONE], [ZERO]]))
    assert is_morphism(M, A, PolyMatrix([[ZERO, ONE]]))
    L = PolyMatrix([[UniPoly([0, 0, "1/2"])], [ONE]])
    assert is_morphism(A, M, L)
    # morphisms are exactly horizontal vectors of Hom(M, N)
    H = hom_module(A, M)
    assert apply_D(H, hom_vector(L, A, M)) == H.zero()


@pytest.mark.parametrize("n", range(6))
def test_Mn_matches_dual_iteration(n):
    mat = PolyMatrix([[X, ONE], [X * X, UniPoly([2])]])
    Ms = recurrence_Mn(mat, n)
    M = DiffModule(mat)
    for i in range(2):
        phi = M.basis(i)
        for _ in range(n):
            phi = apply_dual_D(M, phi)
        assert phi == tuple(Ms[n][i, j] for j in range(2))


def test_pn():
    ps = recurrence_pn(4)
    assert [str(p) for p in ps] == ["1", "x", "x^2 + 1", "x^3 + 3*x", "x^4 + 6*x^2 + 3"]
