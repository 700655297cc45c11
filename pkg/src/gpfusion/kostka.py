"""Closed-form and combinatorial Kostka polynomials.

Three independent ways to get at K_{lambda,mu}(q) live in this package:

* the hook-length formula (only for mu = 1^N), :func:`kostka_hook`;
* the charge statistic on semistandard tableaux, :func:`charge_kostka`;
* graded Specht multiplicities in the Garsia-Procesi ring (``gp_ring``).

Charge
------
For a word w whose content is a partition, charge is computed by the
Lascoux-Schutzenberger procedure. Scan w from the right end, leftward,
cyclically; pick the first 1, then continue leftward (wrapping around the
end if needed) to the first 2, then to the first 3, and so on up to the
largest letter. The picked letters form a standard subword. Inside it the
letter 1 has index 0 and letter r+1 has the index of r, plus one if the
search for r+1 had to wrap around (i.e. r+1 sits to the right of r). The
subword's charge is the sum of its indices. Remove it and repeat; charge(w)
is the total. The charge of a tableau is the charge of its reading word,
rows read left to right from the bottom row (longest last) to the top row.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, prod
from typing import Iterable, Iterator, Sequence

from .partitions import Partition, conjugate, hooks, nstat
from .qpoly import ONE, QPoly


class NegativeExponentError(ArithmeticError):
    """Raised when a tilde transform would produce negative powers of q."""


def q_pochhammer(m: int) -> QPoly:
    """(q)_m = prod_{i=1..m} (1 - q^i)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    out = ONE
    for i in range(1, m + 1):
        out = out * QPoly({0: 1, i: -1})
    return out


def kostka_hook(mu: Iterable[int]) -> QPoly:
    """K_{mu,1^N}(q) via q^{n(mu')} (q)_N / prod_x (1 - q^{h(x)})."""
    mu = Partition(mu)
    num = q_pochhammer(mu.size).shift(nstat(conjugate(mu)))
    den = ONE
    for h in hooks(mu):
        den = den * QPoly({0: 1, h: -1})
    # a remainder here means the hook lengths are wrong
    return num.exact_div(den)


def tilde_transform(k: QPoly, mu: Iterable[int]) -> QPoly:
    """~K(q) = q^{n(mu)} K(1/q); refuses to return negative exponents."""
    out = k.invert().shift(nstat(mu))
    if not out.is_zero() and out.low_degree() < 0:
        raise NegativeExponentError(f"q^n(mu) K(1/q) has negative exponents: {out}")
    return out


def untilde(kt: QPoly, mu: Iterable[int]) -> QPoly:
    """Inverse of :func:`tilde_transform`."""
    return kt.invert().shift(nstat(mu))


# --- semistandard tableaux -------------------------------------------------

def _horizontal_strips(outer: tuple[int, ...], size: int) -> Iterator[tuple[int, ...]]:
    """Partitions inner inside outer with outer/inner a horizontal strip of given size."""
    n = len(outer)

    def rec(i: int, left: int, acc: list[int]):
        if i == n:
            if left == 0:
                yield tuple(acc)
            return
        # inner_i must satisfy outer_{i+1} <= inner_i <= outer_i
        low = outer[i + 1] if i + 1 < n else 0
        for inner_i in range(outer[i], low - 1, -1):
            take = outer[i] - inner_i
            if take > left:
                break
            acc.append(inner_i)
            yield from rec(i + 1, left - take, acc)
            acc.pop()

    for inner in rec(0, size, []):
        yield tuple(p for p in inner if p)


def ssyt(shape: Iterable[int], content: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Semistandard tableaux of the shape with the given content (1-based letters).

    Yields tableaux as tuples of rows. The content may be any composition.
    """
    shape = tuple(Partition(shape))
    content = tuple(content)
    if sum(shape) != sum(content):
        return

    def rec(outer: tuple[int, ...], k: int) -> Iterator[list[list[int]]]:
        # place the letters k (1-based) into outer / inner
        if k == 0:
            if not outer:
                yield [[] for _ in shape]
            return
        for inner in _horizontal_strips(outer, content[k - 1]):
            for rows in rec(inner, k - 1):
                new = [list(r) for r in rows]
                for i, o in enumerate(outer):
                    inn = inner[i] if i < len(inner) else 0
                    new[i].extend([k] * (o - inn))
                yield new

    for rows in rec(shape, len(content)):
        yield tuple(tuple(r) for r in rows)


@lru_cache(maxsize=None)
def _ssyt_count(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    if not content:
        return 1 if not shape else 0
    return sum(_ssyt_count(inner, content[:-1]) for inner in _horizontal_strips(shape, content[-1]))


def ssyt_count(lam: Iterable[int], nu: Sequence[int]) -> int:
    """Kostka number: semistandard tableaux of shape lam and content nu (any composition)."""
    lam = Partition(lam)
    nu = tuple(int(x) for x in nu)
    if lam.size != sum(nu):
        raise ValueError(f"size mismatch: |{tuple(lam)}| != sum{nu}")
    return _ssyt_count(tuple(lam), nu)


def num_standard_tableaux(lam: Iterable[int]) -> int:
    lam = Partition(lam)
    return ssyt_count(lam, (1,) * lam.size)


def reading_word(tableau: Sequence[Sequence[int]]) -> list[int]:
    word: list[int] = []
    for row in reversed(tableau):
        word.extend(row)
    return word


def charge(word: Sequence[int]) -> int:
    """Charge of a word whose content is a partition (letters 1..k)."""
    letters = list(word)
    total = 0
    while letters:
        n = len(letters)
        top = max(letters)
        picked = []
        pos = n  # start just past the right end
        index = 0
        for r in range(1, top + 1):
            # search leftward cyclically from pos-1
            found = None
            for step in range(1, n + 1):
                j = (pos - step) % n
                if letters[j] == r and j not in picked:
                    found = j
                    break
            if found is None:
                raise ValueError(f"content of {word} is not a partition")
            if r > 1 and found > pos:
                index += 1
            total += index
            picked.append(found)
            pos = found
        letters = [x for j, x in enumerate(letters) if j not in set(picked)]
    return total


def charge_kostka(lam: Iterable[int], mu: Iterable[int]) -> QPoly:
    """K_{lam,mu}(q) = sum over SSYT(lam, mu) of q^charge.

    ``mu`` is sorted into a partition first; an empty sum is the zero polynomial.
    """
    lam = Partition(lam)
    mu = Partition(sorted(mu, reverse=True))
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: {tuple(lam)} vs {tuple(mu)}")
    return _charge_kostka(tuple(lam), tuple(mu))


@lru_cache(maxsize=None)
def _charge_kostka(lam: tuple[int, ...], mu: tuple[int, ...]) -> QPoly:
    out: dict[int, int] = {}
    for t in ssyt(lam, mu):
        c = charge(reading_word(t))
        out[c] = out.get(c, 0) + 1
    return QPoly(out)


def sln_irrep_dim(lam: Iterable[int], n: int) -> int:
    """Weyl dimension of the sl_n (equivalently gl_n) irreducible with highest weight lam."""
    lam = Partition(lam)
    if lam.length > n:
        raise ValueError(f"{tuple(lam)} has more than n={n} parts")
    l = lam.padded(n)
    num = prod(l[i] - l[j] + j - i for i in range(n) for j in range(i + 1, n))
    den = prod(j - i for i in range(n) for j in range(i + 1, n))
    return num // den


def sym_power_dim(m: int, n: int) -> int:
    return comb(m + n - 1, n - 1)
