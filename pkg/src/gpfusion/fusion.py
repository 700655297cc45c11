"""Graded (fusion) tensor products of symmetric-power sl_n evaluation modules.

The module pi_{m omega_1} is modelled as degree-m polynomials in x_1..x_n with
E_ab = x_a d/dx_b; the highest weight vector is x_1^m. Weights are gl_n
weights, i.e. exponent vectors, so the weight of a tensor basis vector is the
sum of its factors' exponent vectors.

The filtration F^(<=d) is the span of all words in E_ab (x) t^k (a > b)
applied to the product of highest weight vectors, with total t-degree at most
d; t^k acts on factor i as multiplication by z_i^k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import prod
from typing import Sequence

from .kostka import sln_irrep_dim, ssyt_count, sym_power_dim, tilde_transform, charge_kostka, kostka_hook
from .linalg import EchelonBasis
from .partitions import Partition, compositions, nstat, partitions_of
from .qpoly import QPoly

Weight = tuple  # length-n exponent vector


class FiltrationError(ArithmeticError):
    pass


class PeelingError(ArithmeticError):
    pass


@dataclass
class SymPowerModule:
    """pi_{m omega_1} for sl_n, basis = degree-m monomials in n letters, highest first."""

    n: int
    m: int
    basis: tuple[Weight, ...] = field(init=False)

    def __post_init__(self):
        if self.n < 2 or self.m < 0:
            raise ValueError("need n >= 2 and m >= 0")
        self.basis = tuple(compositions(self.m, self.n))
        self._index = {b: i for i, b in enumerate(self.basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def highest(self) -> Weight:
        return self.basis[0]

    def act(self, a: int, b: int, alpha: Weight) -> tuple[int, Weight] | None:
        """E_ab on the monomial x^alpha: returns (coefficient, new monomial) or None."""
        c = alpha[b]
        if not c:
            return None
        if a == b:
            return c, alpha
        new = list(alpha)
        new[b] -= 1
        new[a] += 1
        return c, tuple(new)

    def matrix(self, a: int, b: int) -> list[list[int]]:
        """Matrix of E_ab in the monomial basis (columns are inputs)."""
        mat = [[0] * self.dim for _ in range(self.dim)]
        for j, alpha in enumerate(self.basis):
            r = self.act(a, b, alpha)
            if r:
                mat[self._index[r[1]]][j] += r[0]
        return mat

    def cartan(self, a: int) -> list[list[int]]:
        """H_a = E_aa - E_{a+1,a+1}."""
        ea, eb = self.matrix(a, a), self.matrix(a + 1, a + 1)
        return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(ea, eb)]


def build_sym_module(n: int, m: int) -> SymPowerModule:
    return SymPowerModule(n, m)


class TensorSpace:
    """Basis bookkeeping for pi_{mu_1} (x) ... (x) pi_{mu_r}."""

    def __init__(self, mu: Sequence[int], n: int):
        self.n = n
        self.factors = [SymPowerModule(n, m) for m in mu]
        self.basis = list(product(*(f.basis for f in self.factors)))
        self.index = {b: i for i, b in enumerate(self.basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def weight(self, i: int) -> Weight:
        return tuple(sum(col) for col in zip(*self.basis[i]))

    @property
    def highest(self) -> int:
        return self.index[tuple(f.highest for f in self.factors)]


@dataclass
class FusionOperator:
    """sum_i z_i^k E_ab^{(i)} on a tensor space."""

    space: TensorSpace
    a: int
    b: int
    k: int
    points: tuple[Fraction, ...]

    def __post_init__(self):
        n = self.space.n
        if not (0 <= self.a < n and 0 <= self.b < n):
            raise IndexError(f"E_({self.a},{self.b}) out of range for sl_{n}")
        if self.k < 0:
            raise ValueError("t-degree must be nonnegative")
        self._scal = [z**self.k for z in self.points]

    def __call__(self, vec: dict[int, Fraction]) -> dict[int, Fraction]:
        sp = self.space
        out: dict[int, Fraction] = {}
        for idx, coef in vec.items():
            key = sp.basis[idx]
            for i, (fac, alpha) in enumerate(zip(sp.factors, key)):
                s = self._scal[i]
                if not s:
                    continue
                r = fac.act(self.a, self.b, alpha)
                if r is None:
                    continue
                c, beta = r
                new = key[:i] + (beta,) + key[i + 1:]
                j = sp.index[new]
                v = out.get(j, 0) + coef * c * s
                if v:
                    out[j] = v
                else:
                    out.pop(j, None)
        return out

    def matrix(self) -> list[list[Fraction]]:
        d = self.space.dim
        mat = [[Fraction(0)] * d for _ in range(d)]
        for j in range(d):
            for i, v in self({j: Fraction(1)}).items():
                mat[i][j] = v
        return mat


def fusion_operator(a: int, b: int, k: int, points: Sequence, mu: Sequence[int], n: int) -> FusionOperator:
    """Operator E_ab (x) t^k on the tensor product of the pi_{mu_i omega_1} at the given points (0-based a, b)."""
    if len(points) != len(mu):
        raise ValueError("one evaluation point per factor")
    return FusionOperator(TensorSpace(mu, n), a, b, k, tuple(Fraction(z) for z in points))


@dataclass
class FilteredSpace:
    mu: tuple[int, ...]
    n: int
    points: tuple[Fraction, ...]
    space: TensorSpace = field(repr=False)
    # weight -> list of cumulative ranks F^(<=d) for d = 0..top
    weight_ranks: dict[Weight, list[int]] = field(repr=False)
    bases: dict[Weight, EchelonBasis] = field(repr=False)
    max_t_degree: int = 0

    @property
    def top_degree(self) -> int:
        return len(next(iter(self.weight_ranks.values()))) - 1 if self.weight_ranks else 0

    def cumulative_dims(self) -> list[int]:
        return [sum(r[d] for r in self.weight_ranks.values()) for d in range(self.top_degree + 1)]

    def dims_per_degree(self) -> list[int]:
        c = self.cumulative_dims()
        return [c[0]] + [b - a for a, b in zip(c, c[1:])]

    @property
    def total_dim(self) -> int:
        return self.cumulative_dims()[-1]

    def graded_weight_multiplicities(self, d: int) -> dict[Weight, int]:
        out = {}
        for w, r in self.weight_ranks.items():
            m = r[d] - (r[d - 1] if d > 0 else 0)
            if m:
                out[w] = m
        return out


def _distinct_points(points: Sequence, count: int) -> tuple[Fraction, ...]:
    pts = tuple(Fraction(z) for z in points)
    if len(pts) != count:
        raise ValueError(f"need {count} evaluation points, got {len(pts)}")
    if len(set(pts)) != len(pts):
        raise ValueError(f"evaluation points must be distinct: {list(points)}")
    return pts


def default_fusion_points(count: int, choice: str = "arith") -> tuple[int, ...]:
    """(0, 1, 2, ...) or (1, 3, 9, ...)."""
    if choice == "arith":
        return tuple(range(count))
    if choice == "geom":
        return tuple(3**i for i in range(count))
    raise ValueError(f"unknown point choice {choice!r}")


def generate_filtration(mu: Sequence[int], n: int, points: Sequence | None = None,
                        max_t_degree: int | None = None) -> FilteredSpace:
    """Build F^(<=d) degree by degree until it fills the whole tensor product.

    Degree d receives E_ab t^k applied to the vectors that first appeared in
    degree d - k (k >= 1), then is closed under the t^0 operators.
    """
    mu = tuple(int(m) for m in mu)
    if any(m <= 0 for m in mu):
        raise ValueError(f"parts must be positive: {mu}")
    if points is None:
        points = default_fusion_points(len(mu))
    pts = _distinct_points(points, len(mu))
    N = sum(mu)
    if max_t_degree is None:
        max_t_degree = max(N - 1, 0)
    space = TensorSpace(mu, n)
    target = prod(sym_power_dim(m, n) for m in mu)
    lowering = [(a, b) for a in range(n) for b in range(n) if a > b]
    ops = {k: [FusionOperator(space, a, b, k, pts) for a, b in lowering] for k in range(max_t_degree + 1)}
    weights = {i: space.weight(i) for i in range(space.dim)}

    bases: dict[Weight, EchelonBasis] = {}
    ranks: dict[Weight, list[int]] = {}
    new_at: list[list[dict[int, Fraction]]] = []
    total = 0
    cap = nstat(sorted(mu, reverse=True)) + 1

    def weight_of(vec) -> Weight:
        ws = {weights[i] for i in vec}
        if len(ws) != 1:
            raise FiltrationError(f"vector is not a weight vector: {ws}")
        return ws.pop()

    def accept(vec) -> bool:
        if not vec:
            return False
        w = weight_of(vec)
        return bases.setdefault(w, EchelonBasis()).add(vec)

    d = 0
    while True:
        fresh: list[dict[int, Fraction]] = []
        if d == 0:
            cands = [{space.highest: Fraction(1)}]
        else:
            cands = [op(v) for k in range(1, min(d, max_t_degree) + 1) for v in new_at[d - k] for op in ops[k]]
        for v in cands:
            if accept(v):
                fresh.append(v)
        queue = list(fresh)
        while queue:
            v = queue.pop()
            for op in ops[0]:
                u = op(v)
                if accept(u):
                    fresh.append(u)
                    queue.append(u)
        new_at.append(fresh)
        total += len(fresh)
        for w, b in bases.items():
            ranks.setdefault(w, [0] * d).append(b.rank)
        if total == target:
            break
        if d >= cap:
            raise FiltrationError(f"filtration stalled at dimension {total} < {target} by degree {d}")
        d += 1
    for w in ranks:
        ranks[w] += [ranks[w][-1]] * (d + 1 - len(ranks[w]))
    return FilteredSpace(mu, n, pts, space, ranks, bases, max_t_degree)


@dataclass
class GradedSlnDecomposition:
    n: int
    per_degree: dict[int, dict[Partition, int]]

    def components(self) -> dict[Partition, QPoly]:
        out: dict[Partition, dict[int, int]] = {}
        for d, parts in self.per_degree.items():
            for lam, m in parts.items():
                out.setdefault(lam, {})[d] = m
        return {lam: QPoly(c) for lam, c in out.items()}

    def total_dim(self) -> int:
        return sum(m * sln_irrep_dim(lam, self.n) for parts in self.per_degree.values() for lam, m in parts.items())


def peel_irreducibles(mults: dict[Weight, int], n: int) -> dict[Partition, int]:
    """Split a gl_n weight multiset into irreducibles, highest dominant weight first."""
    for w, m in mults.items():
        if mults.get(tuple(sorted(w, reverse=True)), 0) != m:
            raise PeelingError(f"weight multiplicities are not Weyl invariant at {w}")
    dom = {w: m for w, m in mults.items() if list(w) == sorted(w, reverse=True)}
    out: dict[Partition, int] = {}
    # lex descending order refines dominance, so the first positive entry is maximal
    while any(dom.values()):
        top = max(w for w, m in dom.items() if m)
        c = dom[top]
        if c < 0:
            raise PeelingError(f"negative multiplicity {c} at {top}")
        lam = Partition(top)
        out[lam] = c
        for w in list(dom):
            k = ssyt_count(lam, w)
            if k:
                dom[w] -= c * k
                if dom[w] < 0:
                    raise PeelingError(f"weight {w} went negative while removing {tuple(lam)}")
    return out


def graded_decompose(fs: FilteredSpace) -> GradedSlnDecomposition:
    target = prod(sym_power_dim(m, fs.n) for m in fs.mu)
    if fs.total_dim != target:
        raise FiltrationError(f"filtration has dimension {fs.total_dim}, expected {target}")
    per = {}
    for d in range(fs.top_degree + 1):
        parts = peel_irreducibles(fs.graded_weight_multiplicities(d), fs.n)
        if parts:
            per[d] = parts
    return GradedSlnDecomposition(fs.n, per)


def fusion_character(mu: Sequence[int], n: int, points: Sequence | None = None) -> dict[Partition, QPoly]:
    """lam -> graded multiplicity of pi_lam in the fusion product."""
    return graded_decompose(generate_filtration(mu, n, points)).components()


def expected_fusion_character(mu: Sequence[int], n: int) -> dict[Partition, QPoly]:
    """~K_{lam,mu}(q) for l(lam) <= n, nonzero entries only (charge route)."""
    part = Partition(sorted(mu, reverse=True))
    out = {}
    for lam in partitions_of(part.size, max_length=n):
        k = tilde_transform(charge_kostka(lam, part), part)
        if not k.is_zero():
            out[lam] = k
    return out


@dataclass
class SchurWeylReport:
    N: int
    n: int
    fusion_dims: list[int]
    ring_dims: list[int]
    character_match: bool
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures


def schur_weyl_check(N: int, n: int, points: Sequence | None = None) -> SchurWeylReport:
    """Compare F*_{1^N} with (pi^{(x)N} (x) R_N)^{S_N} degree by degree.

    Graded dimensions come from the explicit filtration on one side and from
    the Specht decomposition of the coinvariant ring on the other; the
    weight-space character is also compared against the hook formula.
    """
    from .gp_ring import rmu_decompose

    mu = (1,) * N
    fs = generate_filtration(mu, n, points)
    dec = rmu_decompose(mu)
    fdims = fs.dims_per_degree()
    top = max(len(fdims), dec.hilbert.degree() + 1)
    fdims += [0] * (top - len(fdims))
    rdims = []
    for d in range(top):
        rdims.append(sum(sln_irrep_dim(lam, n) * dec.component(lam)[d]
                         for lam in partitions_of(N, max_length=n)))
    failures = [f"degree {d}: fusion {a} vs ring {b}" for d, (a, b) in enumerate(zip(fdims, rdims)) if a != b]
    # character: weight multiplicities vs sum_lam K_{lam,nu} ~K_{lam,1^N}[d]
    tk = {lam: tilde_transform(kostka_hook(lam), mu) for lam in partitions_of(N, max_length=n)}
    char_ok = True
    for d in range(fs.top_degree + 1):
        got = fs.graded_weight_multiplicities(d)
        for w in compositions(N, n):
            want = sum(ssyt_count(lam, w) * k[d] for lam, k in tk.items())
            if got.get(w, 0) != want:
                char_ok = False
                failures.append(f"degree {d}, weight {w}: {got.get(w, 0)} vs {want}")
    return SchurWeylReport(N, n, fdims, rdims, char_ok, failures)
