"""Multivariate polynomials over Q and graded linear algebra on their degree slices.

Variables are z_1..z_N, stored 0-based. Within a degree the monomials are
ordered lexicographically with z_1 > z_2 > ...; the first monomial is column
0 and is the preferred pivot. Across degrees the order is graded, so the
whole thing is graded lex, a genuine monomial order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, lcm
from typing import Iterable, Mapping, Sequence

from .linalg import EchelonBasis, IntegerRank
from .partitions import Partition, compositions

Monomial = tuple  # exponent vector


class NotHomogeneousError(ValueError):
    pass


class NotInvariantError(ArithmeticError):
    """The ideal is not stable under the permutation in some degree."""

    def __init__(self, degree: int, perm, detail: str = ""):
        self.degree = degree
        self.perm = perm
        super().__init__(f"ideal not invariant under {perm} in degree {degree}{': ' + detail if detail else ''}")


class MultiPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | None = None):
        self.nvars = nvars
        self.terms: dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            if len(m) != nvars:
                raise ValueError(f"exponent vector {m} does not have length {nvars}")
            if c:
                self.terms[tuple(m)] = Fraction(c)

    @classmethod
    def constant(cls, nvars: int, c=1) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int) -> "MultiPoly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {sum(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial")
        return max(self.degrees())

    def homogeneous_part(self, d: int) -> "MultiPoly":
        return MultiPoly(self.nvars, {m: c for m, c in self.terms.items() if sum(m) == d})

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return MultiPoly(self.nvars, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return MultiPoly(self.nvars, {m: c * other for m, c in self.terms.items()})
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            t = c
            for x, e in zip(point, m):
                if e:
                    t *= Fraction(x) ** e
            total += t
        return total

    def canonical(self) -> tuple:
        """Hashable normal form, scaled so the largest monomial has coefficient 1."""
        if not self.terms:
            return ()
        lead = max(self.terms, key=lambda m: (sum(m), m))
        c = self.terms[lead]
        return tuple(sorted((m, v / c) for m, v in self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (-sum(m), [-x for x in m])):
            c = self.terms[m]
            mono = "*".join(f"z{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)


def elementary_symmetric(m: int, subset: Iterable[int], nvars: int) -> MultiPoly:
    """E_m in the variables {z_i : i in subset} (0-based indices)."""
    subset = sorted(set(subset))
    if m < 0 or m > len(subset):
        raise ValueError(f"E_{m} undefined on {len(subset)} variables")
    terms = {}
    for combo in combinations(subset, m):
        e = [0] * nvars
        for i in combo:
            e[i] = 1
        terms[tuple(e)] = 1
    return MultiPoly(nvars, terms)


def power_sum(a: int, nvars: int) -> MultiPoly:
    if a < 1:
        raise ValueError("power sums need a >= 1")
    terms = {}
    for i in range(nvars):
        e = [0] * nvars
        e[i] = a
        terms[tuple(e)] = 1
    return MultiPoly(nvars, terms)


def permute_monomial(perm: Sequence[int], m: Monomial) -> Monomial:
    out = [0] * len(m)
    for i, e in enumerate(m):
        out[perm[i]] = e
    return tuple(out)


def permute_poly(perm: Sequence[int], p: MultiPoly) -> MultiPoly:
    """Substitute z_i -> z_{perm(i)}."""
    if len(perm) != p.nvars:
        raise ValueError("permutation size differs from the number of variables")
    return MultiPoly(p.nvars, {permute_monomial(perm, m): c for m, c in p.terms.items()})


# --- degree slices ------------------------------------------------------------

@lru_cache(maxsize=None)
def monomials(nvars: int, d: int) -> tuple[Monomial, ...]:
    """Degree-d exponent vectors, column order (lex descending)."""
    if d < 0:
        return ()
    return tuple(compositions(d, nvars))


@lru_cache(maxsize=None)
def monomial_index(nvars: int, d: int) -> dict[Monomial, int]:
    return {m: i for i, m in enumerate(monomials(nvars, d))}


@lru_cache(maxsize=None)
def _times_var(nvars: int, d: int, i: int) -> tuple[int, ...]:
    """Column map from degree d to degree d+1 for multiplication by z_i."""
    idx = monomial_index(nvars, d + 1)
    out = []
    for m in monomials(nvars, d):
        e = list(m)
        e[i] += 1
        out.append(idx[tuple(e)])
    return tuple(out)


def to_vector(p: MultiPoly, d: int) -> dict[int, Fraction]:
    idx = monomial_index(p.nvars, d)
    return {idx[m]: c for m, c in p.terms.items()}


def from_vector(vec: Mapping[int, Fraction], nvars: int, d: int) -> MultiPoly:
    mons = monomials(nvars, d)
    return MultiPoly(nvars, {mons[c]: v for c, v in vec.items()})


@dataclass
class GradedSliceBasis:
    """Echelon basis of the degree-d part of a homogeneous ideal."""

    degree: int
    nvars: int
    basis: EchelonBasis = field(repr=False)

    @property
    def rank(self) -> int:
        return self.basis.rank

    @property
    def size(self) -> int:
        return comb(self.degree + self.nvars - 1, self.nvars - 1) if self.degree >= 0 else 0

    @property
    def pivot_monomials(self) -> list[Monomial]:
        mons = monomials(self.nvars, self.degree)
        return [mons[p] for p in sorted(self.basis.pivots)]

    @property
    def complement_indices(self) -> list[int]:
        piv = self.basis.rows
        return [c for c in range(self.size) if c not in piv]

    @property
    def complement(self) -> list[Monomial]:
        mons = monomials(self.nvars, self.degree)
        return [mons[c] for c in self.complement_indices]

    @property
    def quotient_dim(self) -> int:
        return self.size - self.rank

    def reduce(self, p: MultiPoly) -> MultiPoly:
        """Normal form modulo the slice, supported on complement monomials."""
        return from_vector(self.basis.reduce(to_vector(p, self.degree)), self.nvars, self.degree)

    def contains(self, p: MultiPoly) -> bool:
        return self.basis.contains(to_vector(p, self.degree))


class GradedIdeal:
    """Homogeneous ideal given by generators; slices are built degree by degree and cached.

    The degree-d slice is spanned by z_i times the degree-(d-1) slice together
    with the generators of degree d.
    """

    def __init__(self, gens: Iterable[MultiPoly], nvars: int):
        self.nvars = nvars
        self.gens: list[MultiPoly] = []
        self._by_degree: dict[int, list[MultiPoly]] = {}
        for g in gens:
            if g.nvars != nvars:
                raise ValueError("generator lives in the wrong number of variables")
            if g.is_zero():
                continue
            if not g.is_homogeneous():
                raise NotHomogeneousError(f"generator {g} is not homogeneous")
            self.gens.append(g)
            self._by_degree.setdefault(g.degree(), []).append(g)
        self._slices: dict[int, GradedSliceBasis] = {}
        self._checked: set[tuple[int, ...]] = set()

    def slice(self, d: int) -> GradedSliceBasis:
        if d in self._slices:
            return self._slices[d]
        basis = EchelonBasis()
        if d >= 0:
            if d > 0:
                prev = self.slice(d - 1)
                if prev.quotient_dim == 0 and prev.size > 0:
                    # whole space already, so stays whole
                    for c in range(comb(d + self.nvars - 1, self.nvars - 1)):
                        basis.rows[c] = {c: Fraction(1)}
                    out = GradedSliceBasis(d, self.nvars, basis)
                    self._slices[d] = out
                    return out
            for g in self._by_degree.get(d, ()):
                basis.add(to_vector(g, d))
            if d > 0:
                for i in range(self.nvars):
                    shift = _times_var(self.nvars, d - 1, i)
                    for row in prev.basis.rows.values():
                        basis.add({shift[c]: v for c, v in row.items()})
        out = GradedSliceBasis(d, self.nvars, basis)
        self._slices[d] = out
        return out

    def quotient_dim(self, d: int) -> int:
        return self.slice(d).quotient_dim

    def check_invariant(self, perm: Sequence[int], up_to: int | None = None) -> None:
        """Raise NotInvariantError unless every generator's image stays in the ideal."""
        key = tuple(perm)
        if key in self._checked:
            return
        for g in sorted(self.gens, key=MultiPoly.degree):
            d = g.degree()
            if up_to is not None and d > up_to:
                continue
            img = permute_poly(perm, g)
            if not self.slice(d).contains(img):
                raise NotInvariantError(d, key, f"image of {g} is not in the ideal")
        if up_to is None:
            self._checked.add(key)

    def trace(self, perm: Sequence[int], d: int, check: bool = True) -> Fraction:
        """Trace of z_i -> z_perm(i) on the degree-d quotient slice."""
        if check:
            self.check_invariant(perm, up_to=d)
        sl = self.slice(d)
        idx = monomial_index(self.nvars, d)
        mons = monomials(self.nvars, d)
        total = Fraction(0)
        for c in sl.complement_indices:
            img = idx[permute_monomial(perm, mons[c])]
            nf = sl.basis.reduce({img: 1})
            total += nf.get(c, 0)
        return total


def ideal_slice(gens: Sequence[MultiPoly], d: int, nvars: int | None = None) -> GradedSliceBasis:
    if nvars is None:
        if not gens:
            raise ValueError("nvars is required when there are no generators")
        nvars = gens[0].nvars
    return GradedIdeal(gens, nvars).slice(d)


def quotient_dims(gens: Sequence[MultiPoly], d_max: int, nvars: int | None = None) -> list[int]:
    """Dimensions of the degree 0..d_max slices of the quotient ring."""
    if nvars is None:
        nvars = gens[0].nvars
    ideal = GradedIdeal(gens, nvars)
    return [ideal.quotient_dim(d) for d in range(d_max + 1)]


def hilbert_function(ideal: GradedIdeal, d_max: int) -> tuple[list[int], bool]:
    """Quotient dimensions up to two consecutive zeros or d_max; second value says exhausted."""
    dims: list[int] = []
    for d in range(d_max + 1):
        dims.append(ideal.quotient_dim(d))
        if len(dims) >= 2 and dims[-1] == 0 and dims[-2] == 0:
            break
    exhausted = dims[-1] == 0
    while len(dims) > 1 and dims[-1] == 0:
        dims.pop()
    return dims, exhausted


def quotient_trace(gens: Sequence[MultiPoly], perm: Sequence[int], d: int, nvars: int | None = None) -> Fraction:
    if nvars is None:
        nvars = gens[0].nvars
    return GradedIdeal(gens, nvars).trace(perm, d)


# --- evaluation on point orbits ---------------------------------------------------

def multiset_permutations(seq: Sequence) -> list[tuple]:
    items = sorted(seq)
    out: list[tuple] = []

    def rec(rest: list, acc: list):
        if not rest:
            out.append(tuple(acc))
            return
        prev = object()
        for i, x in enumerate(rest):
            if x == prev:
                continue
            prev = x
            acc.append(x)
            rec(rest[:i] + rest[i + 1:], acc)
            acc.pop()

    rec(items, [])
    return out


def orbit_points(mu: Sequence[int], points: Sequence) -> list[tuple[Fraction, ...]]:
    """S_N-orbit of X = (a_1^mu_1, a_2^mu_2, ...)."""
    if len(points) != len(mu):
        raise ValueError(f"need {len(mu)} points, got {len(points)}")
    pts = [Fraction(a) for a in points]
    if len(set(pts)) != len(pts):
        raise ValueError(f"evaluation points must be distinct: {list(points)}")
    x = [a for a, k in zip(pts, mu) for _ in range(k)]
    return multiset_permutations(x)


def orbit_evaluation_ranks(mu: Sequence[int], points: Sequence, d_max: int) -> list[int]:
    """Rank of the (monomials of degree <= d) x (orbit points) evaluation matrix, d = 0..d_max.

    Only z_i * m for monomials m that raised the rank one degree lower are
    tried, since those span the same space.
    """
    orbit = orbit_points(mu, points)
    nvars = len(orbit[0]) if orbit else 0
    scale = lcm(*(x.denominator for pt in orbit for x in pt)) if orbit else 1
    cols = [[x * scale for x in pt] for pt in orbit]
    ir = IntegerRank(len(orbit))

    def evaluate(m: Monomial) -> list[int]:
        d = sum(m)
        vals = []
        for pt in cols:
            v = 1
            for x, e in zip(pt, m):
                if e:
                    v *= x**e
            vals.append(int(v))  # scaled by scale^d, exact integer
        return vals

    ranks = []
    frontier: list[Monomial] = []
    for d in range(d_max + 1):
        if d == 0:
            cands = [(0,) * nvars]
        else:
            seen = set()
            cands = []
            for m in frontier:
                for i in range(nvars):
                    e = list(m)
                    e[i] += 1
                    t = tuple(e)
                    if t not in seen:
                        seen.add(t)
                        cands.append(t)
            cands.sort(reverse=True)
        frontier = [m for m in cands if ir.rank < len(orbit) and ir.add(evaluate(m))]
        ranks.append(ir.rank)
    return ranks
