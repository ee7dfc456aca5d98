"""Recursive-descent parser for polynomial expressions.

Grammar::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' ['-'] int)?
    atom   := number | ident | '(' expr ')'
    number := int ('/' int)?

Expressions are first parsed into a small AST and then evaluated in a
generator table; negative exponents are only accepted on generators the
table declares invertible (or on products that evaluate to unit monomials).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .algebra.multipoly import GenTable, IllegalInversion
from .algebra.unipoly import UniPoly

__all__ = ["ParseError", "UnknownVariable", "parse_ast", "parse_expr", "parse_unipoly",
           "parse_matrix", "parse_vector", "evaluate", "Num", "Var", "Add", "Mul", "Pow", "Neg"]


class ParseError(ValueError):
    def __init__(self, msg, line, col):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line, self.col = line, col


class UnknownVariable(ParseError):
    pass


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str
    pos: tuple = (1, 1)


@dataclass(frozen=True)
class Add:
    terms: tuple  # of (sign, node)


@dataclass(frozen=True)
class Mul:
    factors: tuple


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int
    pos: tuple = (1, 1)


@dataclass(frozen=True)
class Neg:
    arg: object


Node = Union[Num, Var, Add, Mul, Pow, Neg]

_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z_0-9.]*)|(\S)")


def _tokens(src):
    out = []
    for m in _TOKEN.finditer(src):
        kind = ("int", "ident", "op")[m.lastindex - 1]
        out.append((kind, m.group(m.lastindex), m.start()))
    out.append(("end", "", len(src)))
    return out


class _Parser:
    def __init__(self, src):
        self.src = src
        self.toks = _tokens(src)
        self.i = 0

    def where(self, offset):
        line = self.src.count("\n", 0, offset) + 1
        col = offset - (self.src.rfind("\n", 0, offset) + 1) + 1
        return line, col

    def error(self, msg, tok=None):
        tok = tok or self.toks[self.i]
        raise ParseError(msg, *self.where(tok[2]))

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def accept(self, op):
        t = self.peek()
        if t[0] == "op" and t[1] == op:
            self.i += 1
            return True
        return False

    def parse(self):
        if self.peek()[0] == "end":
            self.error("empty expression")
        node = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected {self.peek()[1]!r}")
        return node

    def expr(self):
        terms = []
        sign = -1 if self.accept("-") else 1
        terms.append((sign, self.term()))
        while True:
            if self.accept("+"):
                terms.append((1, self.term()))
            elif self.accept("-"):
                terms.append((-1, self.term()))
            else:
                break
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Add(tuple(terms))

    def term(self):
        fs = [self.factor()]
        while self.accept("*"):
            fs.append(self.factor())
        return fs[0] if len(fs) == 1 else Mul(tuple(fs))

    def factor(self):
        base = self.atom()
        t = self.peek()
        if self.accept("^"):
            neg = self.accept("-")
            e = self.take()
            if e[0] != "int":
                self.error("exponent must be an integer", e)
            k = int(e[1])
            return Pow(base, -k if neg else k, self.where(t[2]))
        return base

    def atom(self):
        t = self.take()
        if t[0] == "int":
            if self.accept("/"):
                d = self.take()
                if d[0] != "int":
                    self.error("denominator must be an integer", d)
                if int(d[1]) == 0:
                    self.error("division by zero", d)
                return Num(Fraction(int(t[1]), int(d[1])))
            return Num(Fraction(int(t[1])))
        if t[0] == "ident":
            return Var(t[1], self.where(t[2]))
        if t[0] == "op" and t[1] == "(":
            node = self.expr()
            if not self.accept(")"):
                self.error("expected ')'")
            return node
        if t[0] == "end":
            self.error("unexpected end of input", t)
        self.error(f"unexpected {t[1]!r}", t)


def parse_ast(src):
    return _Parser(src).parse()


def evaluate(node, table):
    if isinstance(node, Num):
        return table.const(node.value)
    if isinstance(node, Var):
        if node.name not in table:
            raise UnknownVariable(f"unknown variable {node.name!r}", *node.pos)
        return table.var(node.name)
    if isinstance(node, Neg):
        return -evaluate(node.arg, table)
    if isinstance(node, Add):
        acc = table.zero()
        for s, t in node.terms:
            v = evaluate(t, table)
            acc = acc + v if s > 0 else acc - v
        return acc
    if isinstance(node, Mul):
        acc = table.one()
        for f in node.factors:
            acc = acc * evaluate(f, table)
        return acc
    if isinstance(node, Pow):
        if node.exp < 0 and isinstance(node.base, Var) and node.base.name in table:
            i = table.index(node.base.name)
            if not table.invertible[i]:
                raise IllegalInversion(
                    f"line {node.pos[0]}, column {node.pos[1]}: {node.base.name} is not invertible here")
        return evaluate(node.base, table) ** node.exp
    raise TypeError(f"not an expression node: {node!r}")


def parse_expr(src, table):
    """Parse into a MultiPoly over ``table`` (a GenTable)."""
    return evaluate(parse_ast(src), table)


_X = GenTable(["x"])


def parse_unipoly(src, var="x"):
    table = _X if var == "x" else GenTable([var])
    p = parse_expr(src, table)
    coeffs = {e[0]: c for e, c in p.terms.items()}
    deg = max(coeffs, default=-1)
    return UniPoly([coeffs.get(i, 0) for i in range(deg + 1)])


def parse_matrix(src):
    """Rows separated by ';' and entries by ',', e.g. ``"0, x; 0, 0"``.

    A JSON-style nested list ``[[0, "x"], [0, 0]]`` is accepted too.
    """
    if isinstance(src, (list, tuple)):
        return [[parse_unipoly(str(e)) for e in row] for row in src]
    s = src.strip()
    if s.startswith("["):
        import json
        return parse_matrix(json.loads(s))
    rows = [r for r in s.split(";")]
    out = [[parse_unipoly(e) for e in r.split(",")] for r in rows]
    if len({len(r) for r in out}) > 1:
        raise ValueError("matrix rows have different lengths")
    return out


def parse_vector(src):
    if isinstance(src, (list, tuple)):
        return tuple(parse_unipoly(str(e)) for e in src)
    return tuple(parse_unipoly(e) for e in src.split(","))
