"""Graded decompositions of fusion products for all mu of a given size, with timings.

    python scripts/fusion_survey.py --size 4 --n 2 3
"""

import argparse
import time
from dataclasses import dataclass, field

from gpfusion.fusion import default_fusion_points, expected_fusion_character, generate_filtration, graded_decompose
from gpfusion.partitions import format_partition, partitions_of


@dataclass
class SurveyConfig:
    size: int = 3
    ns: list[int] = field(default_factory=lambda: [2, 3])
    points: str = "arith"


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--size", type=int, default=3)
    p.add_argument("--n", type=int, nargs="+", default=[2, 3])
    p.add_argument("--points", choices=("arith", "geom"), default="arith")
    a = p.parse_args()
    cfg = SurveyConfig(a.size, a.n, a.points)
    bad = 0
    for n in cfg.ns:
        for mu in partitions_of(cfg.size):
            t0 = time.perf_counter()
            fs = generate_filtration(mu, n, default_fusion_points(len(mu), cfg.points))
            comps = graded_decompose(fs).components()
            ok = comps == expected_fusion_character(mu, n)
            bad += not ok
            body = ", ".join(f"({format_partition(l)}): {k}" for l, k in comps.items())
            print(f"n={n} mu=({format_partition(mu)}) dims={fs.dims_per_degree()} {body} "
                  f"{'ok' if ok else 'MISMATCH'} [{time.perf_counter() - t0:.2f}s]")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
