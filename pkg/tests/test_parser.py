import random

import pytest

from hopfoid.algebra.multipoly import GenTable, IllegalInversion
from hopfoid.algebra.unipoly import UniPoly
from hopfoid.parser import (ParseError, UnknownVariable, parse_expr, parse_matrix,
                            parse_unipoly, parse_vector)

T = GenTable(["x", "y", "y1", "y2"], ["y1"])


def random_multipoly(rng):
    acc = T.zero()
    for _ in range(rng.randint(0, 5)):
        mono = T.const(rng.randint(-9, 9))
        for name in ("x", "y", "y2"):
            mono = mono * T.var(name) ** rng.randint(0, 3)
        mono = mono * T.var("y1", rng.randint(-3, 3))
        acc = acc + mono
    return acc


def test_round_trip_random():
    rng = random.Random(2024)
    for _ in range(200):
        p = random_multipoly(rng)
        assert parse_expr(str(p), T) == p


def test_unipoly_round_trip():
    rng = random.Random(1)
    for _ in range(50):
        p = UniPoly([rng.randint(-5, 5) for _ in range(rng.randint(0, 6))]) * UniPoly([1]) / rng.randint(1, 4)
        assert parse_unipoly(str(p)) == p


@pytest.mark.parametrize("src,value", [
    ("1/2*x^2 - x + 3", UniPoly(["3", -1, "1/2"])),
    ("(x+1)^2", UniPoly([1, 2, 1])),
    ("-(x - 1)*(x + 1)", UniPoly([1, 0, -1])),
    ("0", UniPoly()),
])
def test_parse_unipoly(src, value):
    assert parse_unipoly(src) == value


def test_errors_carry_position():
    with pytest.raises(ParseError) as e:
        parse_expr("x + * y", T)
    assert (e.value.line, e.value.col) == (1, 5)
    with pytest.raises(UnknownVariable) as e:
        parse_expr("x + z", T)
    assert e.value.col == 5
    with pytest.raises(ParseError):
        parse_expr("(x + y", T)
    with pytest.raises(ParseError):
        parse_expr("", T)
    with pytest.raises(ParseError):
        parse_expr("x/0", T)


def test_inversion_only_on_units():
    assert parse_expr("y1^-2*y1^2", T) == T.one()
    with pytest.raises(IllegalInversion, match="column"):
        parse_expr("x^-1", T)


def test_matrix_and_vector():
    m = parse_matrix("0, x; 1/2, x^2")
    assert m[0][1] == UniPoly([0, 1]) and m[1][0] == UniPoly(["1/2"])
    assert parse_matrix('[[0, "x"], [0, 0]]')[0][1] == UniPoly([0, 1])
    with pytest.raises(ValueError):
        parse_matrix("0, x; 0")
    assert parse_vector("1, x") == (UniPoly([1]), UniPoly([0, 1]))
