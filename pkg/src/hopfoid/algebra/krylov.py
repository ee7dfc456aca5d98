"""Incremental fraction-free echelon form over the fraction field Q(x).

Rows are polynomial vectors; elimination follows Bareiss, so every stored
entry is a minor of the input and all divisions are exact.  Used to detect
when a Krylov sequence w, Dw, D^2 w, ... becomes linearly dependent over
Q(x).
"""

from __future__ import annotations

from .unipoly import ONE

__all__ = ["FractionFreeEchelon"]


class FractionFreeEchelon:
    __slots__ = ("n", "rows", "pivots", "pivot_vals")

    def __init__(self, n):
        self.n = n
        self.rows = []
        self.pivots = []
        self.pivot_vals = [ONE]

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, v):
        v = list(v)
        prev = ONE
        for col, b, p in zip(self.pivots, self.rows, self.pivot_vals[1:]):
            c = v[col]
            if c:
                v = [(p * x - c * y).exact_div(prev) if (x or y) else x for x, y in zip(v, b)]
            elif p != prev:
                v = [(p * x).exact_div(prev) if x else x for x in v]
            prev = p
        return v

    def add(self, v):
        """Insert v; return False if it is dependent on the stored rows."""
        r = self.reduce(v)
        for col, e in enumerate(r):
            if e:
                self.rows.append(r)
                self.pivots.append(col)
                self.pivot_vals.append(e)
                return True
        return False
