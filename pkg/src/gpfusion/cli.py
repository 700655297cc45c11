"""Command-line front end.

Every subcommand builds a :class:`Report`; ``--format json`` prints its
canonical form. Exit status: 0 when all checks pass, 1 when one fails,
2 for usage errors (bad flags, malformed partitions, impossible shapes).
"""

from __future__ import annotations

import argparse
import sys
import time

from .fusion import default_fusion_points, expected_fusion_character, fusion_character, generate_filtration, graded_decompose
from .gp_ring import POINT_CHOICES, amu_graded_dims, default_points, expected_component, rmu_decompose
from .kostka import charge_kostka, kostka_hook, tilde_transform, untilde
from .partitions import Partition, parse_composition, parse_partition, partitions_of
from .report import Report
from .symgroup import character_table, class_size
from .verify import LEVELS, run_checks
from .wedge import (alternating_isotype_dim, limit_stabilization, reduced_wedge_decompose, wedge_char,
                    wedge_total_dim, winf_char)

METHODS = ("hook", "charge", "ring")


class UsageError(ValueError):
    pass


def _points(text: str | None):
    if text is None:
        return None
    if text in POINT_CHOICES:
        return text
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"--points takes {'|'.join(POINT_CHOICES)} or a comma list of integers, got {text!r}")


def cmd_kostka(args) -> Report:
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu) if args.mu is not None else Partition((1,) * lam.size)
    if lam.size != mu.size:
        raise UsageError(f"|lambda| = {lam.size} but |mu| = {mu.size}")
    ones = Partition((1,) * lam.size)
    methods = [args.method] if args.method else [m for m in METHODS if m != "hook" or mu == ones]
    if "hook" in methods and mu != ones:
        raise UsageError("the hook method needs mu = 1^N")
    results, values = {}, {}
    for m in methods:
        if m == "hook":
            k = kostka_hook(lam)
            kt = tilde_transform(k, mu)
        elif m == "charge":
            k = charge_kostka(lam, mu)
            kt = tilde_transform(k, mu)
        else:
            kt = rmu_decompose(mu).component(lam)
            k = untilde(kt, mu)
        values[m] = k
        results[m] = {"K": k, "K_tilde": kt}
    checks = {}
    if len(values) > 1:
        first = next(iter(values.values()))
        checks["methods_agree"] = all(v == first for v in values.values())
    return Report("kostka", {"lambda": lam, "mu": mu, "method": args.method or "all"}, results, checks)


def cmd_ring(args) -> Report:
    mu = parse_partition(args.mu)
    pts = _points(args.points)
    if isinstance(pts, str):
        pts = default_points(mu, pts)
    if pts is not None and len(pts) != mu.length:
        raise UsageError(f"need {mu.length} points for mu={tuple(mu)}, got {len(pts)}")
    dec = rmu_decompose(mu)
    amu = amu_graded_dims(mu, pts)
    hil = dec.hilbert.to_list()
    match = all(dec.component(lam) == expected_component(lam, mu) for lam in partitions_of(mu.size))
    results = {"hilbert": dec.hilbert, "decomposition": dec.components, "amu_dims": amu}
    checks = {"kostka_match": match, "fstar_match": amu == hil}
    return Report("ring", {"mu": mu, "points": pts or default_points(mu)}, results, checks)


def cmd_fusion(args) -> Report:
    mu = parse_composition(args.mu)
    if not mu or any(m <= 0 for m in mu):
        raise UsageError(f"--mu needs positive parts, got {args.mu!r}")
    if args.n < 1:
        raise UsageError("--n must be positive")
    pts = _points(args.points)
    if isinstance(pts, str) or pts is None:
        choice = pts or "arith"
        pts = default_fusion_points(len(mu), choice)
        other = default_fusion_points(len(mu), "geom" if choice == "arith" else "arith")
    else:
        other = default_fusion_points(len(mu), "geom")
    fs = generate_filtration(mu, args.n, pts)
    comps = graded_decompose(fs).components()
    results = {"dims_per_degree": fs.dims_per_degree(), "decomposition": comps}
    checks = {
        "kostka_match": comps == expected_fusion_character(mu, args.n),
        "z_independence": comps == fusion_character(mu, args.n, other),
    }
    return Report("fusion", {"mu": list(mu), "n": args.n, "points": list(pts), "second_points": list(other)},
                  results, checks)


def cmd_wedge(args) -> Report:
    if args.N < 0 or args.n < 1:
        raise UsageError("need --N >= 0 and --n >= 1")
    dec = reduced_wedge_decompose(args.N, args.n)
    results = {"character_route": dec.character_route, "brute_route": dec.brute_route,
               "wedge_char": wedge_char(args.N, args.n)}
    checks = {"routes_agree": dec.agree}
    if args.N <= 5:
        checks["total_dim"] = wedge_total_dim(args.N, args.n) == alternating_isotype_dim(args.N, args.n)
    return Report("wedge", {"N": args.N, "n": args.n}, results, checks)


def cmd_winf(args) -> Report:
    mubar = parse_partition(args.mu)
    if mubar.length > args.n:
        raise UsageError(f"{tuple(mubar)} has more than n={args.n} parts")
    if args.i is not None and (mubar.size - args.i) % args.n:
        raise UsageError(f"|mu| = {mubar.size} is not congruent to i = {args.i} mod n = {args.n}")
    series = winf_char(mubar, args.n, args.depth)
    results = {"winf_char": series}
    checks = {}
    if args.mmax:
        rep = limit_stabilization(mubar, args.n, args.i, depth=args.depth, mmax=args.mmax)
        results["windows"] = {m: {"low": e, "coeffs": list(c)} for m, (e, c) in rep.windows.items()}
        results["stable_from"] = rep.stable_from if rep.stable_from is not None else "none"
        results["offset"] = rep.offset if rep.offset is not None else "none"
        if rep.stable_from is not None:
            results["stabilized_exponent"] = rep.windows[rep.stable_from][0]
        results["reference_exponent"] = str(rep.reference_exponent)
        results["fitted_exponent"] = str(rep.fitted_exponent)
        checks["stabilized"] = rep.stable_from is not None and rep.stable_from < args.mmax
        checks["matches_winf"] = rep.matches_winf
    return Report("winf", {"mu": mubar, "n": args.n, "i": args.i if args.i is not None else mubar.size % args.n,
                           "depth": args.depth, "mmax": args.mmax}, results, checks)


def cmd_chartable(args) -> Report:
    if args.N < 0:
        raise UsageError("--N must be nonnegative")
    table = character_table(args.N)
    results = {"class_sizes": {rho: class_size(rho) for rho in partitions_of(args.N)},
               "characters": {lam: [row[rho] for rho in partitions_of(args.N)] for lam, row in table.items()}}
    return Report("chartable", {"N": args.N}, results, {})


def cmd_verify(args) -> Report:
    res = run_checks(args.level, corrupt=args.corrupt, only=args.only)
    results = {r.key: {"passed": r.passed, "detail": r.detail, "seconds": r.seconds} for r in res}
    return Report("verify", {"level": args.level, "corrupt": args.corrupt}, results, {r.key: r.passed for r in res})


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gpfusion", description="Garsia-Procesi rings, Kostka polynomials and fusion products.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.set_defaults(fn=fn)
        return sp

    sp = add("kostka", cmd_kostka, "K_{lam,mu}(q) and ~K by hook formula, charge, or the ring")
    sp.add_argument("--lambda", "--mu-row", dest="lam", required=True)
    sp.add_argument("--mu", default=None, help="content partition (default 1^N)")
    sp.add_argument("--method", choices=METHODS, default=None)

    sp = add("ring", cmd_ring, "Hilbert series and graded Specht decomposition of R_mu")
    sp.add_argument("--mu", required=True)
    sp.add_argument("--points", default=None, help="arith, geom, or a comma list of distinct integers")

    sp = add("fusion", cmd_fusion, "fusion product of symmetric powers")
    sp.add_argument("--mu", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--points", default=None)

    sp = add("wedge", cmd_wedge, "reduced wedge product, both routes")
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)

    sp = add("winf", cmd_winf, "W-algebra character and the large-N limit of hook Kostka polynomials")
    sp.add_argument("--mu", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--i", type=int, default=None)
    sp.add_argument("--depth", type=int, default=5, help="truncation degree of the series; also the window depth of the m-sweep")
    sp.add_argument("--mmax", type=int, default=0, help="also sweep m up to this value (0 skips the sweep)")

    sp = add("chartable", cmd_chartable, "character table of S_N")
    sp.add_argument("--N", type=int, required=True)

    sp = add("verify", cmd_verify, "run the bundled identity checks")
    sp.add_argument("--level", choices=LEVELS, default="quick")
    sp.add_argument("--corrupt", action="store_true", help="negative control: corrupt the C_mu generators")
    sp.add_argument("--only", nargs="*", default=None, help="check key prefixes, e.g. 2 5")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    t0 = time.perf_counter()
    try:
        report = args.fn(args)
    except ValueError as e:  # includes UsageError and malformed partitions
        print(f"gpfusion {args.command}: {e}", file=sys.stderr)
        return 2
    except ArithmeticError as e:  # an identity failed inside a computation
        print(f"gpfusion {args.command}: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    report.seconds = time.perf_counter() - t0
    if args.format == "json":
        sys.stdout.write(report.to_json())
    elif args.command == "verify":
        for key, r in report.results.items():
            if r["passed"]:
                print(f"[PASS] {key} ({r['seconds']:.1f}s): {r['detail']}")
            else:
                print(f"[FAIL] {key} ({r['seconds']:.1f}s) -- {r['detail']}")
    else:
        sys.stdout.write(report.to_text())
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
