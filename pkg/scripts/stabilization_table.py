"""Sweep the large-N limit of hook Kostka polynomials and tabulate stabilization.

    python scripts/stabilization_table.py --n 2 3 --max-size 5 --depth 5 --mmax 10
"""

import argparse
from dataclasses import dataclass, field

from gpfusion.partitions import format_partition, partitions_of
from gpfusion.wedge import limit_stabilization


@dataclass
class SweepConfig:
    ns: list[int] = field(default_factory=lambda: [2])
    max_size: int = 4
    depth: int = 5
    mmax: int = 8


def sweep(cfg: SweepConfig) -> list[dict]:
    rows = []
    for n in cfg.ns:
        for size in range(cfg.max_size + 1):
            for mubar in partitions_of(size, max_length=n):
                rep = limit_stabilization(mubar, n, depth=cfg.depth, mmax=cfg.mmax)
                low = rep.windows[rep.stable_from][0] if rep.stable_from is not None else None
                rows.append({
                    "n": n, "mubar": format_partition(mubar) or "-", "i": rep.i, "mbar": rep.mbar,
                    "stable_from": rep.stable_from, "window": rep.limit_window, "match": rep.matches_winf,
                    "exponent": low, "reference": rep.reference_exponent, "fitted": rep.fitted_exponent,
                })
    return rows


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--n", type=int, nargs="+", default=[2])
    p.add_argument("--max-size", type=int, default=4)
    p.add_argument("--depth", type=int, default=5)
    p.add_argument("--mmax", type=int, default=8)
    a = p.parse_args()
    cfg = SweepConfig(a.n, a.max_size, a.depth, a.mmax)
    print(f"{'n':>2} {'mubar':>7} {'i':>2} {'mbar':>4} {'m*':>3} {'exp':>4} {'ref':>7} {'fitted':>6}  match  window")
    for r in sweep(cfg):
        print(f"{r['n']:>2} {r['mubar']:>7} {r['i']:>2} {r['mbar']:>4} {str(r['stable_from']):>3} "
              f"{str(r['exponent']):>4} {str(r['reference']):>7} {str(r['fitted']):>6}  {str(r['match']):>5}  {r['window']}")


if __name__ == "__main__":
    main()
