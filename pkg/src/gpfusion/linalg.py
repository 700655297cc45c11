"""Exact row reduction over the rationals.

Two flavours: :class:`EchelonBasis` keeps a sparse reduced row echelon form
with Fraction entries (columns are small integers, smaller index = earlier
pivot), and :class:`IntegerRank` keeps a dense fraction-free echelon form of
integer vectors for rank counting only.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping

Vector = dict  # column -> Fraction, no zero entries


class EchelonBasis:
    """Reduced row echelon basis of a subspace of Q^columns, built incrementally.

    Every stored row has coefficient 1 at its pivot (its smallest column) and
    zero at every other row's pivot, so reducing a vector is a single pass.
    """

    def __init__(self):
        self.rows: dict[int, dict[int, Fraction]] = {}
        self._occ: dict[int, set[int]] = {}  # column -> pivots of rows with a nonpivot entry there

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> set[int]:
        return set(self.rows)

    def reduce(self, vec: Mapping[int, object]) -> dict[int, Fraction]:
        out = {c: Fraction(v) for c, v in vec.items() if v}
        for p in [c for c in out if c in self.rows]:
            coef = out.get(p)
            if not coef:
                continue
            for c, v in self.rows[p].items():
                nv = out.get(c, 0) - coef * v
                if nv:
                    out[c] = nv
                else:
                    out.pop(c, None)
        return out

    def contains(self, vec: Mapping[int, object]) -> bool:
        return not self.reduce(vec)

    def add(self, vec: Mapping[int, object]) -> bool:
        """Insert vec; True iff the rank went up."""
        r = self.reduce(vec)
        if not r:
            return False
        p = min(r)
        lead = r[p]
        if lead != 1:
            r = {c: v / lead for c, v in r.items()}
        # clear the new pivot column from existing rows
        for q in list(self._occ.pop(p, ())):
            row = self.rows[q]
            coef = row.pop(p)
            for c, v in r.items():
                if c == p:
                    continue
                nv = row.get(c, 0) - coef * v
                if nv:
                    if c not in row:
                        self._occ.setdefault(c, set()).add(q)
                    row[c] = nv
                elif c in row:
                    del row[c]
                    self._occ[c].discard(q)
        self.rows[p] = r
        for c in r:
            if c != p:
                self._occ.setdefault(c, set()).add(p)
        return True

    def extend(self, vecs: Iterable[Mapping[int, object]]) -> int:
        return sum(self.add(v) for v in vecs)


class IntegerRank:
    """Fraction-free echelon form of integer vectors of a fixed length; tracks rank only."""

    def __init__(self, length: int):
        self.length = length
        self.rows: list[tuple[int, list[int]]] = []  # (pivot, primitive row), sorted by pivot

    @property
    def rank(self) -> int:
        return len(self.rows)

    def add(self, vec: Iterable[int]) -> bool:
        v = list(vec)
        if len(v) != self.length:
            raise ValueError("vector length mismatch")
        for p, row in self.rows:
            a = v[p]
            if a:
                b = row[p]
                v = [b * x - a * y for x, y in zip(v, row)]
                g = gcd(*v)
                if g > 1:
                    v = [x // g for x in v]
        nz = [i for i, x in enumerate(v) if x]
        if not nz:
            return False
        self.rows.append((nz[0], v))
        self.rows.sort(key=lambda t: t[0])
        return True
