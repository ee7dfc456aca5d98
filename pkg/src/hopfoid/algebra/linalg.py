"""Exact linear algebra over Q (thin wrapper over sympy's DomainMatrix)."""

from __future__ import annotations

from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

__all__ = ["nullspace", "solve", "rank"]


def _dm(rows, ncols):
    conv = [[QQ(int(Fraction(c).numerator), int(Fraction(c).denominator)) for c in r] for r in rows]
    return DomainMatrix(conv, (len(rows), ncols), QQ)


def _frac(c):
    return Fraction(int(c.numerator), int(c.denominator))


def nullspace(rows, ncols):
    """Basis of {v : rows·v = 0} as lists of Fractions."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    ns = _dm(rows, ncols).nullspace()
    return [[_frac(c) for c in r] for r in ns.to_list()]


def rank(rows, ncols):
    if not rows or not ncols:
        return 0
    return _dm(rows, ncols).rank()


def solve(rows, ncols, rhs):
    """One solution of rows·v = rhs, or ``None`` if inconsistent."""
    if not rows:
        return [Fraction(0)] * ncols
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    M = _dm(aug, ncols + 1)
    R, pivots = M.rref()
    if ncols in pivots:
        return None
    sol = [Fraction(0)] * ncols
    Rl = R.to_list()
    for i, p in enumerate(pivots):
        sol[p] = _frac(Rl[i][ncols])
    return sol
