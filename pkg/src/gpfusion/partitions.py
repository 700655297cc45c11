"""Integer partitions and the bits of diagram combinatorics used everywhere else."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    and ``Partition((2, 1))`` compare equal and hash alike.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self) > n:
            raise ValueError(f"{self} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def cells(self) -> Iterator[tuple[int, int]]:
        """(row, col), 0-based, in reading order along rows."""
        for i, row in enumerate(self):
            for j in range(row):
                yield i, j

    def __repr__(self) -> str:
        return f"Partition({format_partition(self) or ''})"


def conjugate(mu: Iterable[int]) -> Partition:
    mu = Partition(mu)
    if not mu:
        return Partition()
    return Partition(sum(1 for p in mu if p > j) for j in range(mu[0]))


def nstat(mu: Iterable[int]) -> int:
    """n(mu) = sum_i (i-1) mu_i."""
    return sum(i * p for i, p in enumerate(Partition(mu)))


def hooks(mu: Iterable[int]) -> list[int]:
    mu = Partition(mu)
    mut = conjugate(mu)
    return [mu[i] - j + mut[j] - i - 1 for i, j in mu.cells()]


def dominance_leq(nu: Iterable[int], lam: Iterable[int]) -> bool:
    """True iff nu <= lam in dominance order (partial sums of nu never exceed lam's)."""
    nu, lam = Partition(nu), Partition(lam)
    if nu.size != lam.size:
        raise ValueError(f"size mismatch: |{tuple(nu)}| != |{tuple(lam)}|")
    s = t = 0
    for i in range(max(len(nu), len(lam))):
        s += nu[i] if i < len(nu) else 0
        t += lam[i] if i < len(lam) else 0
        if s > t:
            return False
    return True


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int, max_length: int | None = None) -> list[Partition]:
    """All partitions of n in reverse lexicographic order, e.g. (3), (2,1), (1,1,1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(p) for p in _partitions(n, n) if max_length is None or len(p) <= max_length]


def compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of n into k nonnegative parts, lexicographically descending."""
    if k == 0:
        if n == 0:
            yield ()
        return
    if k == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


def parse_partition(text: str) -> Partition:
    """Parse "3,2,1" (empty string is the empty partition)."""
    text = text.strip()
    if not text:
        return Partition()
    return Partition(int(tok) for tok in text.split(","))


def parse_composition(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    parts = tuple(int(tok) for tok in text.split(","))
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {text!r}")
    return parts


def format_partition(mu: Iterable[int]) -> str:
    return ",".join(str(p) for p in mu)
