"""The bundled verification suite: one check per identity, two size levels.

``quick`` keeps every N at 4 or below; ``full`` runs the sizes listed next to
each check. Checks return :class:`CheckResult` rather than raising, so a run
always reports every line; the first failure's detail names the module,
operation and inputs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .fusion import (default_fusion_points, expected_fusion_character, fusion_character,
                     generate_filtration, schur_weyl_check)
from .gp_ring import (GPIdealSpec, amu_graded_dims, cmu_generators, default_points, expected_component,
                      orbit_size, rmu_decompose, rmu_hilbert)
from .kostka import (charge_kostka, kostka_hook, num_standard_tableaux, ssyt_count, sym_power_dim,
                     tilde_transform)
from .partitions import Partition, dominance_leq, nstat, partitions_of
from .polys import MultiPoly, NotInvariantError
from .qpoly import QPoly
from .symgroup import NonIntegralMultiplicity
from .wedge import hook_factorization_check, limit_stabilization, reduced_wedge_decompose, winf_char

LEVELS = ("quick", "full")


@dataclass
class CheckResult:
    key: str
    title: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.key}: {self.title} ({self.seconds:.1f}s){'' if self.passed else ' -- ' + self.detail}"


class CheckFailure(AssertionError):
    pass


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise CheckFailure(msg)


@lru_cache(maxsize=None)
def _decomposition(mu: Partition):
    return rmu_decompose(mu)


def corrupted_spec(mu=(2, 1)) -> GPIdealSpec:
    """C_mu minus every degree-2 generator with a z_1 z_2 term; a negative control.

    Dropping a single generator is not enough, the rest of C_mu can rebuild it.
    """
    spec = cmu_generators(mu)
    n = spec.nvars
    bad = tuple(1 if i < 2 else 0 for i in range(n))
    gens = [g for g in spec.generators if not (g.degree() == 2 and bad in g.terms)]
    return GPIdealSpec(spec.mu, gens)


def _first_diff(a: QPoly, b: QPoly) -> int:
    return min(e for e in set(a.coeffs) | set(b.coeffs) if a[e] != b[e])


def coinvariant_hilbert(level: str) -> str:
    top = 5 if level == "full" else 4
    for N in range(2, top + 1):
        want = QPoly({0: 1})
        for i in range(1, N + 1):
            want = want * QPoly.from_list([1] * i)
        got = rmu_hilbert((1,) * N)
        _need(got == want, f"gp_ring.rmu_hilbert mu=1^{N}: {got} != {want}")
    return f"N=2..{top}"


def gp_theorem(level: str, corrupt: bool = False) -> str:
    top = 5 if level == "full" else 4
    count = 0
    for N in range(2, top + 1):
        for mu in partitions_of(N):
            if corrupt and mu == (2, 1):
                try:
                    dec = rmu_decompose(mu, spec=corrupted_spec(mu))
                except NotInvariantError as e:
                    raise CheckFailure(f"gp_ring.rmu_decompose mu={tuple(mu)} (corrupted generators): "
                                       f"offending degree {e.degree}") from e
            else:
                dec = _decomposition(mu)
            for lam in partitions_of(N):
                want = expected_component(lam, mu)
                got = dec.component(lam)
                if got != want:
                    raise CheckFailure(f"gp_ring.rmu_decompose lam={tuple(lam)} mu={tuple(mu)}: {got} != {want} "
                                       f"(first differing degree {_first_diff(got, want)})")
                count += 1
    return f"{count} pairs, N=2..{top}"


def hook_consistency(level: str) -> str:
    top = 6 if level == "full" else 4
    for N in range(2, top + 1):
        ones = (1,) * N
        dec = _decomposition(Partition(ones))
        for lam in partitions_of(N):
            want = tilde_transform(kostka_hook(lam), ones)
            _need(dec.component(lam) == want, f"gp_ring.rmu_decompose lam={tuple(lam)} mu=1^{N}: hook mismatch")
    return f"N=2..{top}"


def amu_route(level: str) -> str:
    top = 5 if level == "full" else 4
    count = 0
    for N in range(1, top + 1):
        for mu in partitions_of(N):
            hil = _decomposition(mu).hilbert.to_list()
            for choice in ("arith", "geom"):
                pts = default_points(mu, choice)
                got = amu_graded_dims(mu, pts)
                _need(got == hil, f"gp_ring.amu_graded_dims mu={tuple(mu)} points={pts}: {got} != {hil}")
                count += 1
            _need(sum(hil) == orbit_size(mu), f"rmu_hilbert mu={tuple(mu)} total {sum(hil)} != orbit size")
    return f"{count} (mu, points) cases, N<={top}"


def fusion_theorem(level: str) -> str:
    top = 4 if level == "full" else 3
    cases = [(mu, n) for n in (2, 3) for N in range(1, top + 1) for mu in partitions_of(N)]
    if level == "full":
        cases.append((Partition((1,) * 5), 2))
    for mu, n in cases:
        want = expected_fusion_character(mu, n)
        results = []
        for choice in ("arith", "geom"):
            pts = default_fusion_points(len(mu), choice)
            fs = generate_filtration(mu, n, pts)
            target = 1
            for m in mu:
                target *= sym_power_dim(m, n)
            _need(fs.total_dim == target, f"fusion.generate_filtration mu={tuple(mu)} n={n}: dim {fs.total_dim} != {target}")
            got = fusion_character(mu, n, pts)
            _need(got == want, f"fusion.fusion_character mu={tuple(mu)} n={n} Z={pts}: {got} != {want}")
            results.append(got)
        _need(results[0] == results[1], f"fusion Z-independence mu={tuple(mu)} n={n}")
    for N in range(2, top + 1):
        for n in (2, 3):
            rep = schur_weyl_check(N, n)
            _need(rep.ok, f"fusion.schur_weyl_check N={N} n={n}: {rep.failures[:3]}")
    return f"{len(cases)} (mu, n) cases x 2 point sets; Schur-Weyl N<={top}"


def reduced_wedge(level: str) -> str:
    top = 4 if level == "full" else 3
    for N in range(1, top + 1):
        for n in (2, 3):
            reduced_wedge_decompose(N, n)
    return f"N<={top}, n in {{2,3}}"


def hook_factorization(level: str) -> str:
    top = 8 if level == "full" else 6
    count = 0
    for N in range(0, top + 1):
        for mu in partitions_of(N):
            for n in range(max(1, mu.length), 5):
                hook_factorization_check(mu, n)
                count += 1
    rep = hook_factorization_check((2, 1), 2)
    _need(not rep.variant_ok, "wedge.hook_factorization_check: variant exponent mu_i+i unexpectedly holds for (2,1), n=2")
    return f"{count} (mu, n) cases; variant exponent mu_i+i fails on (2,1), n=2"


def winf_limit(level: str) -> str:
    out = []
    for mubar in ((), (1,), (2,)):
        rep = limit_stabilization(mubar, 2, None, depth=5, mmax=8)
        _need(rep.stable_from is not None and rep.stable_from < 8,
              f"wedge.limit_stabilization mubar={mubar}: no stabilization by m=8")
        _need(rep.matches_winf, f"wedge.limit_stabilization mubar={mubar}: {rep.limit_window} != {rep.winf_window}")
        low = rep.windows[rep.stable_from][0]
        _need(low == rep.fitted_exponent, f"wedge.limit_stabilization mubar={mubar}: exponent {low} != {rep.fitted_exponent}")
        out.append(f"{mubar or '()'}@m={rep.stable_from} q^{low}")
    return "stable: " + ", ".join(out)


def specialization(level: str) -> str:
    top = 6 if level == "full" else 4
    ring_top = 5 if level == "full" else 4
    count = 0
    for N in range(1, top + 1):
        for mu in partitions_of(N):
            for lam in partitions_of(N):
                k = charge_kostka(lam, mu)
                _need(k.at_one() == ssyt_count(lam, mu), f"kostka.charge_kostka lam={tuple(lam)} mu={tuple(mu)} at q=1")
                _need(k.has_nonnegative_coeffs(), f"charge_kostka lam={tuple(lam)} mu={tuple(mu)} negative coefficient")
                kt = tilde_transform(k, mu)
                _need(kt.is_zero() or kt[0] <= 1, f"~K lam={tuple(lam)} mu={tuple(mu)} constant term > 1")
                if not dominance_leq(mu, lam):
                    _need(k.is_zero(), f"K_{{{tuple(lam)},{tuple(mu)}}} nonzero without mu <= lam")
                count += 1
        for lam in partitions_of(N):
            h = kostka_hook(lam)
            _need(h.at_one() == num_standard_tableaux(lam), f"kostka.kostka_hook lam={tuple(lam)} at q=1")
        if N <= ring_top:
            for mu in partitions_of(N):
                dec = _decomposition(mu)
                for lam, comp in dec.components.items():
                    _need(comp.has_nonnegative_coeffs(), f"rmu_decompose mu={tuple(mu)} lam={tuple(lam)} negative")
                    _need(comp.at_one() == ssyt_count(lam, mu), f"rmu_decompose mu={tuple(mu)} lam={tuple(lam)} at q=1")
                    _need(dominance_leq(mu, lam), f"rmu_decompose mu={tuple(mu)} has lam={tuple(lam)} not above mu")
    return f"{count} Kostka pairs N<={top}; ring components N<={ring_top}"


CHECKS: list[tuple[str, str, Callable[[str], str]]] = [
    ("1-coinvariant-hilbert", "Hilbert series of R_{1^N} is the q-factorial", coinvariant_hilbert),
    ("2-gp-theorem", "graded Specht multiplicities of R_mu equal ~K_{lam,mu}", gp_theorem),
    ("3-hook-consistency", "R_{1^N} multiplicities equal tilde of the hook formula", hook_consistency),
    ("4-amu-route", "orbit-evaluation filtration of A_mu has the Hilbert function of R_mu", amu_route),
    ("5-fusion-theorem", "fusion product character is sum ch(pi_lam) ~K_{lam,mu}", fusion_theorem),
    ("6-reduced-wedge", "alternating isotype of pi^N (x) R_N equals the conjugate Kostka character", reduced_wedge),
    ("7-hook-factorization", "hook product equals the corrected Pochhammer ratio", hook_factorization),
    ("8-winf-limit", "normalized hook Kostka windows stabilize to the W-algebra character", winf_limit),
    ("9-specialization", "q=1 specializations, nonnegativity and dominance vanishing", specialization),
]


def run_checks(level: str = "quick", corrupt: bool = False, only: list[str] | None = None) -> list[CheckResult]:
    if level not in LEVELS:
        raise ValueError(f"level must be one of {LEVELS}")
    out = []
    for key, title, fn in CHECKS:
        if only and not any(key.startswith(o) for o in only):
            continue
        t0 = time.perf_counter()
        try:
            detail = fn(level, corrupt=True) if (corrupt and fn is gp_theorem) else fn(level)
            passed = True
        except (CheckFailure, ArithmeticError, NonIntegralMultiplicity) as e:
            detail, passed = str(e), False
        out.append(CheckResult(key, title, passed, detail, time.perf_counter() - t0))
    return out
