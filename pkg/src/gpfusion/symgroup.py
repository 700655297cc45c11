"""Characters of symmetric groups and isotypic decomposition of class functions."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Iterable, Mapping

from .partitions import Partition, partitions_of


class NonIntegralMultiplicity(ArithmeticError):
    pass


def z_rho(rho: Iterable[int]) -> int:
    """Centralizer order prod_k k^{m_k} m_k!."""
    rho = Partition(rho)
    out = 1
    for k in set(rho):
        m = rho.count(k)
        out *= k**m * factorial(m)
    return out


def class_size(rho: Iterable[int]) -> int:
    rho = Partition(rho)
    return factorial(rho.size) // z_rho(rho)


def cycle_sign(rho: Iterable[int]) -> int:
    rho = Partition(rho)
    return (-1) ** (rho.size - rho.length)


def representative(rho: Iterable[int]) -> tuple[int, ...]:
    """A permutation (0-based, one-line notation) of cycle type rho, cycles on consecutive blocks."""
    rho = Partition(rho)
    perm = list(range(rho.size))
    start = 0
    for k in rho:
        for j in range(k):
            perm[start + j] = start + (j + 1) % k
        start += k
    return tuple(perm)


def conjugated(perm: tuple[int, ...], by: tuple[int, ...]) -> tuple[int, ...]:
    """by o perm o by^{-1}, same cycle type as perm."""
    inv = [0] * len(by)
    for i, b in enumerate(by):
        inv[b] = i
    return tuple(by[perm[inv[i]]] for i in range(len(perm)))


def cycle_type(perm: tuple[int, ...]) -> Partition:
    seen = [False] * len(perm)
    lens = []
    for i in range(len(perm)):
        if not seen[i]:
            k, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                k += 1
            lens.append(k)
    return Partition(sorted(lens, reverse=True))


# Murnaghan-Nakayama on beta-sets: removing a k-rim hook is moving a bead
# from position b to b-k when that slot is free; the sign is (-1)^(beads jumped).

@lru_cache(maxsize=None)
def _mn(beta: frozenset, rho: tuple[int, ...]) -> int:
    if not rho:
        return 1
    k, rest = rho[0], rho[1:]
    total = 0
    for b in beta:
        if b - k >= 0 and b - k not in beta:
            jumped = sum(1 for c in beta if b - k < c < b)
            total += (-1) ** jumped * _mn((beta - {b}) | {b - k}, rest)
    return total


def irr_char(lam: Iterable[int], rho: Iterable[int]) -> int:
    """chi^lam(rho) by the Murnaghan-Nakayama rule."""
    lam, rho = Partition(lam), Partition(rho)
    if lam.size != rho.size:
        raise ValueError("lam and rho must partition the same N")
    l = lam.length
    beta = frozenset(lam[i] + (l - 1 - i) for i in range(l))
    return _mn(beta, tuple(rho))


@lru_cache(maxsize=None)
def character_table(n: int) -> dict[Partition, dict[Partition, int]]:
    """{lam: {rho: chi^lam(rho)}} for all lam, rho of n."""
    parts = partitions_of(n)
    return {lam: {rho: irr_char(lam, rho) for rho in parts} for lam in parts}


@dataclass(frozen=True)
class ClassFunction:
    n: int
    values: Mapping[Partition, Fraction] = field(hash=False)

    def __post_init__(self):
        missing = set(partitions_of(self.n)) - set(self.values)
        if missing:
            raise ValueError(f"class function undefined on {sorted(missing)}")

    @classmethod
    def from_callable(cls, n: int, f: Callable[[Partition], object]) -> "ClassFunction":
        return cls(n, {rho: Fraction(f(rho)) for rho in partitions_of(n)})

    @classmethod
    def irreducible(cls, lam: Iterable[int]) -> "ClassFunction":
        lam = Partition(lam)
        return cls.from_callable(lam.size, lambda rho: irr_char(lam, rho))

    def __getitem__(self, rho) -> Fraction:
        return self.values[Partition(rho)]

    def __mul__(self, other: "ClassFunction") -> "ClassFunction":
        return ClassFunction(self.n, {r: self.values[r] * other.values[r] for r in self.values})

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        return ClassFunction(self.n, {r: self.values[r] + other.values[r] for r in self.values})

    def inner(self, other: "ClassFunction") -> Fraction:
        # characters here are real, so no conjugation
        total = sum(class_size(r) * self.values[r] * other.values[r] for r in self.values)
        return Fraction(total, factorial(self.n))


def decompose_class_function(f: ClassFunction, require_character: bool = True) -> dict[Partition, Fraction]:
    """Multiplicities m_lam = <f, chi^lam>; only nonzero ones are returned.

    With ``require_character`` every multiplicity must be a nonnegative
    integer, otherwise :class:`NonIntegralMultiplicity` is raised.
    """
    table = character_table(f.n)
    out = {}
    for lam, chi in table.items():
        total = sum(class_size(r) * f.values[r] * chi[r] for r in f.values)
        m = Fraction(total, factorial(f.n))
        if require_character and (m.denominator != 1 or m < 0):
            raise NonIntegralMultiplicity(f"multiplicity of {tuple(lam)} is {m}")
        if m:
            out[lam] = m
    return out


def regular_character(n: int) -> ClassFunction:
    ident = Partition([1] * n)
    return ClassFunction.from_callable(n, lambda rho: factorial(n) if rho == ident else 0)


def sign_character(n: int) -> ClassFunction:
    return ClassFunction.from_callable(n, cycle_sign)
