import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfoid.jet import (JetAlgebra, TruncationError, axiom_suite, certificate_search, check_element,
                         jet_antipode, jet_coproduct, jet_counit, jet_derive, nonreduced_check,
                         parse_tensor, partitions_K)
from hopfoid.parser import parse_expr
from hopfoid.algebra.unipoly import UniPoly

ALG = JetAlgebra(7)


def from_sympy(expr, table):
    return parse_expr(str(sympy.expand(expr)).replace("**", "^"), table)


@pytest.mark.parametrize("n", range(1, 8))
def test_coproduct_is_faa_di_bruno(n):
    # Delta(y_n) = sum_k B_{n,k}(y_1, y_2, ...) (x) y_k  (Bell polynomials)
    T = ALG.tensor(2)
    left = sympy.symbols(" ".join(f"u1_{i}" for i in range(1, n + 1)), seq=True)
    oracle = sum(sympy.bell(n, k, left[:n - k + 1]) * sympy.Symbol(f"u2_{k}") for k in range(1, n + 1))
    assert jet_coproduct(ALG, ALG.y(n)) == from_sympy(oracle, T.table)


@pytest.mark.parametrize("n", range(1, 8))
def test_antipode_is_inverse_function_derivative(n):
    # y = f(x) with f^(k) = f_k; the inverse g has g' = 1/f_1 and d/dt f_k = f_{k+1} g'
    f = sympy.symbols(" ".join(f"y{i}" for i in range(1, n + 2)), seq=True)
    g = 1 / f[0]
    for _ in range(n - 1):
        g = sum(sympy.diff(g, f[k]) * f[k + 1] for k in range(n)) / f[0]
    got = jet_antipode(ALG, ALG.y(n))
    num, den = sympy.fraction(sympy.together(g))
    # compare after clearing y1 powers
    p = sympy.Poly(den, f[0])
    assert p.is_monomial
    e = p.degree()
    assert got * ALG.table.var("y1", e) == from_sympy(num, ALG.table)


def test_partitions():
    assert partitions_K(3) == {(0, 0, 1), (1, 1, 0), (3, 0, 0)}
    assert [len(partitions_K(n)) for n in range(1, 11)] == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_counit_and_source_target():
    t = ALG.table
    assert jet_counit(ALG, t.var("y1")) == UniPoly([1])
    assert jet_counit(ALG, t.var("y2")) == UniPoly()
    assert jet_counit(ALG, t.var("x") * t.var("y")) == UniPoly([0, 0, 1])
    assert jet_antipode(ALG, t.var("x")) == t.var("y")


def test_derivation_and_truncation():
    t = ALG.table
    g = t.var("x") * t.var("y1") - t.var("y")
    assert jet_derive(ALG, g) == t.var("x") * t.var("y2")
    with pytest.raises(TruncationError):
        jet_derive(ALG, t.var("y7"))
    with pytest.raises(TruncationError):
        ALG.y(8)


monomials = st.lists(st.tuples(st.integers(-3, 3), st.integers(0, 2), st.integers(0, 1),
                               st.integers(-2, 2), st.integers(0, 2), st.integers(0, 1)), min_size=1, max_size=3)


@given(monomials)
@settings(max_examples=25)
def test_axioms_on_random_elements(terms):
    A = JetAlgebra(4)
    t = A.table
    h = t.zero()
    for c, ex, ey, e1, e2, e3 in terms:
        h = h + t.const(c) * t.var("x") ** ex * t.var("y") ** ey * t.var("y1", e1) * t.var("y2") ** e2 * t.var("y3") ** e3
    rep = check_element(A, h)
    assert rep.ok, rep.text()


@given(monomials, monomials)
@settings(max_examples=25)
def test_coproduct_and_antipode_multiplicative(a, b):
    A = JetAlgebra(4)
    t = A.table

    def build(terms):
        h = t.zero()
        for c, ex, ey, e1, e2, e3 in terms:
            h = h + t.const(c) * t.var("x") ** ex * t.var("y") ** ey * t.var("y1", e1) * t.var("y2") ** e2
        return h
    p, q = build(a), build(b)
    assert jet_coproduct(A, p * q) == jet_coproduct(A, p) * jet_coproduct(A, q)
    assert jet_antipode(A, p * q) == jet_antipode(A, p) * jet_antipode(A, q)


def test_axiom_suite():
    rep = axiom_suite(JetAlgebra(6), 5)
    assert rep.ok and len(rep.checks) > 30


def test_tensor_printing_and_parsing():
    T = ALG.tensor(2)
    s = T.format(jet_coproduct(ALG, ALG.y(3)))
    assert s == "y3⊗y1 + 3*y1*y2⊗y2 + y1^3⊗y3"
    assert parse_tensor(s, ALG) == jet_coproduct(ALG, ALG.y(3))
    assert parse_tensor("y3@y1 + 3*y1*y2@y2 + y1^3@y3", ALG) == parse_tensor(s, ALG)
    with pytest.raises(ValueError):
        parse_tensor("y1⊗y1⊗y1", ALG)


def test_nonreduced():
    res = nonreduced_check(JetAlgebra(6))
    assert res["x*y2 = delta(x*y1 - y)"]
    assert res["consistent_with_nonreduced"]


def test_certificate_search_finds_members():
    A = JetAlgebra(5)
    t = A.table
    g = t.var("x") * t.var("y1") - t.var("y")
    cof = certificate_search(A, g * t.var("y2") + t.var("x") * t.var("y2") * 3,
                             [g, jet_derive(A, g)], degree=1)
    assert cof is not None
