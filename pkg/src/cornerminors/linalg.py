"""Exact sparse Gaussian elimination over Q.

Vectors are dicts ``{column: coefficient}`` with comparable column keys.
The pivot of a row is its largest column.
"""
from __future__ import annotations

from fractions import Fraction

from .poly import normalize


def _axpy(row, c, pivot_row):
    """row -= c * pivot_row, in place."""
    for col, v in pivot_row.items():
        x = row.get(col, 0) - c * v
        if x:
            row[col] = normalize(x)
        else:
            row.pop(col, None)


class Echelon:
    """Incrementally maintained row-echelon basis of a subspace.

    Each stored row is monic at its pivot and no two rows share a pivot.
    """

    __slots__ = ("pivots",)

    def __init__(self, rows=()):
        self.pivots = {}
        for r in rows:
            self.add(r)

    def reduce(self, row):
        """Remainder of ``row`` modulo the span, reduced at every pivot column."""
        r = {c: v for c, v in row.items() if v}
        out = {}
        while r:
            col = max(r)
            v = r[col]
            p = self.pivots.get(col)
            if p is None:
                out[col] = r.pop(col)
            else:
                _axpy(r, v, p)
        return out

    def add(self, row) -> bool:
        """Insert ``row``; return True if the rank grew."""
        r = {c: v for c, v in row.items() if v}
        while r:
            col = max(r)
            p = self.pivots.get(col)
            if p is None:
                inv = Fraction(1) / Fraction(r[col])
                if inv != 1:
                    r = {c: normalize(v * inv) for c, v in r.items()}
                self.pivots[col] = r
                return True
            _axpy(r, r[col], p)
        return False

    def contains(self, row) -> bool:
        r = {c: v for c, v in row.items() if v}
        while r:
            col = max(r)
            p = self.pivots.get(col)
            if p is None:
                return False
            _axpy(r, r[col], p)
        return True

    @property
    def rank(self):
        return len(self.pivots)

    def rows(self):
        return [self.pivots[c] for c in sorted(self.pivots, reverse=True)]

    def reduced_rows(self):
        """Fully reduced row-echelon form (zeros above every pivot)."""
        done = {}
        for col in sorted(self.pivots):
            r = dict(self.pivots[col])
            for c2 in [c for c in r if c != col and c in done]:
                _axpy(r, r[c2], done[c2])
            done[col] = r
        return [done[c] for c in sorted(done, reverse=True)]

    def copy(self):
        e = Echelon()
        e.pivots = {c: dict(r) for c, r in self.pivots.items()}
        return e


def rank(rows) -> int:
    return Echelon(rows).rank


def intersect_spaces(a: Echelon, b: Echelon) -> Echelon:
    """Zassenhaus intersection of two row spaces."""
    big = Echelon()
    for r in a.pivots.values():
        row = {(1, c): v for c, v in r.items()}
        row.update({(0, c): v for c, v in r.items()})
        big.add(row)
    for r in b.pivots.values():
        big.add({(1, c): v for c, v in r.items()})
    out = Echelon()
    for col, r in big.pivots.items():
        if col[0] == 0:
            out.add({c[1]: v for c, v in r.items()})
    return out


def sum_spaces(a: Echelon, b: Echelon) -> Echelon:
    out = a.copy()
    for r in b.pivots.values():
        out.add(r)
    return out


def nullspace(rows, ncols):
    """Basis of ``{w : r . w = 0 for every row r}`` for dense rational rows."""
    ech = Echelon()
    for r in rows:
        ech.add({i: v for i, v in enumerate(r) if v})
    red = {max(r): r for r in ech.reduced_rows()}
    free = [c for c in range(ncols) if c not in red]
    basis = []
    for f in free:
        w = [Fraction(0)] * ncols
        w[f] = Fraction(1)
        for pc, r in red.items():
            w[pc] = -Fraction(r.get(f, 0))
        basis.append(w)
    return basis
