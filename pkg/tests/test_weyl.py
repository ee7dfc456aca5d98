import sympy
from hypothesis import given
from hypothesis import strategies as st

from hopfoid.algebra.unipoly import ONE, UniPoly
from hopfoid.diffmod import act_weyl
from hopfoid.weyl import WEYL, WeylElement, Y, weyl_coproduct, weyl_counit, weyl_mul
from conftest import modules, polys

xs = sympy.Symbol("x")
f = sympy.Function("f")(xs)


@st.composite
def weyl_elements(draw, max_deg=2):
    return WeylElement({n: draw(polys(2)) for n in range(draw(st.integers(0, max_deg)) + 1)})


def sym(a):
    return sum(sympy.Rational(c.numerator, c.denominator) * xs ** k for k, c in enumerate(a.coeffs()))


def act_on_f(u, g=f):
    """Right action g . sum Y^n a_n = sum g^(n) a_n on functions."""
    return sympy.expand(sum(sympy.diff(g, xs, n) * sym(a) for n, a in u.terms.items()))


def test_commutation_relation():
    x = WEYL.coeff(UniPoly([0, 1]))
    assert weyl_mul(x, Y) == Y * x + WEYL.coeff(ONE)
    assert str(weyl_mul(Y, x)) == "Y*x"


@given(weyl_elements(), weyl_elements())
def test_product_matches_operator_action(u, v):
    # g.(uv) = (g.u).v on a generic function
    assert act_on_f(weyl_mul(u, v)) == act_on_f(v, act_on_f(u))


@given(weyl_elements(), weyl_elements(), weyl_elements())
def test_associative(u, v, w):
    assert weyl_mul(weyl_mul(u, v), w) == weyl_mul(u, weyl_mul(v, w))


@given(modules(2, 1), weyl_elements(), weyl_elements(), st.data())
def test_module_action(M, u, v, data):
    vec = tuple(data.draw(polys(2)) for _ in range(M.rank))
    assert act_weyl(M, act_weyl(M, vec, u), v) == act_weyl(M, vec, weyl_mul(u, v))


def test_coproduct_and_counit():
    pairs = weyl_coproduct(Y ** 2 * WEYL.coeff(UniPoly([0, 1])))
    assert [(str(l), str(r)) for l, r in pairs] == [("1", "Y^2*x"), ("Y", "2*Y*x"), ("Y^2", "x")]
    assert weyl_counit(Y * 3 + WEYL.coeff(UniPoly([2]))) == UniPoly([2])
