"""Garsia-Procesi rings R_mu = Q[z_1..z_N]/J_mu and their graded S_N structure."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import factorial, prod
from typing import Iterable, Sequence

from .kostka import charge_kostka, tilde_transform
from .partitions import Partition, conjugate, nstat, partitions_of
from .polys import GradedIdeal, MultiPoly, elementary_symmetric, hilbert_function, orbit_evaluation_ranks
from .qpoly import QPoly
from .symgroup import ClassFunction, conjugated, decompose_class_function, representative

DEFAULT_POINTS = "arith"
POINT_CHOICES = ("arith", "geom")


def dk(mu: Iterable[int], k: int) -> int:
    """d_k(mu) = N - (mu'_1 + ... + mu'_{N-k})."""
    mu = Partition(mu)
    n = mu.size
    if not 1 <= k <= n:
        raise ValueError(f"k={k} outside 1..{n}")
    mut = conjugate(mu)
    return n - sum(mut[: n - k])


@dataclass
class GPIdealSpec:
    mu: Partition
    generators: list[MultiPoly]

    @property
    def nvars(self) -> int:
        return self.mu.size

    def ideal(self) -> GradedIdeal:
        return GradedIdeal(self.generators, self.nvars)


def cmu_generators(mu: Iterable[int]) -> GPIdealSpec:
    """All E_r(z_S) with |S| = k and r > k - d_k(mu), deduplicated.

    The S_N-orbit of C_mu(z_1..z_k) is exactly the same set over every
    k-subset S of variables.
    """
    mu = Partition(mu)
    n = mu.size
    gens: list[MultiPoly] = []
    seen = set()
    for k in range(1, n + 1):
        d = dk(mu, k)
        for r in range(k - d + 1, k + 1):
            for subset in combinations(range(n), k):
                g = elementary_symmetric(r, subset, n)
                key = g.canonical()
                if key not in seen:
                    seen.add(key)
                    gens.append(g)
    return GPIdealSpec(mu, gens)


def _ideal_for(mu: Partition, spec: GPIdealSpec | None) -> GradedIdeal:
    return (spec or cmu_generators(mu)).ideal()


def rmu_hilbert(mu: Iterable[int], spec: GPIdealSpec | None = None) -> QPoly:
    """Hilbert series of R_mu, computed until exhausted or degree n(mu)+1."""
    mu = Partition(mu)
    ideal = _ideal_for(mu, spec)
    dims, exhausted = hilbert_function(ideal, nstat(mu) + 1)
    if not exhausted:
        raise ArithmeticError(f"R_{tuple(mu)} not exhausted by degree {nstat(mu) + 1}: {dims}")
    return QPoly.from_list(dims)


@dataclass
class GradedSNDecomposition:
    mu: Partition
    components: dict[Partition, QPoly]
    hilbert: QPoly
    characters: dict[int, ClassFunction] = field(default_factory=dict, repr=False)

    def component(self, lam: Iterable[int]) -> QPoly:
        return self.components.get(Partition(lam), QPoly())


def rmu_decompose(mu: Iterable[int], spec: GPIdealSpec | None = None,
                  second_representative: bool | None = None) -> GradedSNDecomposition:
    """Split each graded piece of R_mu into Specht isotypes via traces.

    One permutation per cycle type is used; for N <= 4 (or when asked) a
    second, conjugate representative is traced as well and must agree.
    """
    mu = Partition(mu)
    n = mu.size
    ideal = _ideal_for(mu, spec)
    if second_representative is None:
        second_representative = n <= 4
    classes = partitions_of(n)
    reps = {rho: representative(rho) for rho in classes}
    # reverse order conjugation gives a different element of each class
    flip = tuple(range(n - 1, -1, -1))
    for rho in classes:
        ideal.check_invariant(reps[rho])
    dims, exhausted = hilbert_function(ideal, nstat(mu) + 1)
    if not exhausted:
        raise ArithmeticError(f"R_{tuple(mu)} not exhausted by degree {nstat(mu) + 1}")
    comps: dict[Partition, dict[int, int]] = {}
    chars = {}
    for d in range(len(dims)):
        vals = {}
        for rho in classes:
            t = ideal.trace(reps[rho], d)
            if second_representative:
                t2 = ideal.trace(conjugated(reps[rho], flip), d)
                if t2 != t:
                    raise ArithmeticError(f"trace depends on class representative: {tuple(rho)}, degree {d}")
            vals[rho] = t
        f = ClassFunction(n, vals)
        chars[d] = f
        for lam, m in decompose_class_function(f).items():
            comps.setdefault(lam, {})[d] = int(m)
    components = {lam: QPoly(c) for lam, c in comps.items()}
    return GradedSNDecomposition(mu, components, QPoly.from_list(dims), chars)


def default_points(mu: Sequence[int], choice: str = DEFAULT_POINTS) -> tuple[int, ...]:
    """(1, 2, ..., l) or (1, 3, 9, ...)."""
    l = len(mu)
    if choice == "arith":
        return tuple(range(1, l + 1))
    if choice == "geom":
        return tuple(3**i for i in range(l))
    raise ValueError(f"unknown point choice {choice!r}")


def amu_graded_dims(mu: Iterable[int], points: Sequence | None = None) -> list[int]:
    """Graded dimensions of gr A_mu from evaluation ranks on the point orbit."""
    mu = Partition(mu)
    if points is None:
        points = default_points(mu)
    ranks = orbit_evaluation_ranks(mu, points, nstat(mu) + 1)
    dims = [ranks[0]] + [b - a for a, b in zip(ranks, ranks[1:])]
    orbit = factorial(mu.size) // prod(factorial(p) for p in mu)
    if ranks[-1] != orbit:
        raise ArithmeticError(f"evaluation rank {ranks[-1]} never reached the orbit size {orbit}")
    while len(dims) > 1 and dims[-1] == 0:
        dims.pop()
    return dims


def orbit_size(mu: Iterable[int]) -> int:
    mu = Partition(mu)
    return factorial(mu.size) // prod(factorial(p) for p in mu)


def expected_component(lam: Iterable[int], mu: Iterable[int]) -> QPoly:
    """~K_{lam,mu}(q) from the charge statistic (independent of the ring)."""
    return tilde_transform(charge_kostka(lam, mu), mu)
