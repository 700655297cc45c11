"""Compare ~K_{lam,mu} from the charge statistic, the hook formula and the ring R_mu.

    python scripts/kostka_routes.py --max-n 5
"""

import argparse
import time
from dataclasses import dataclass

from gpfusion.gp_ring import rmu_decompose
from gpfusion.kostka import charge_kostka, kostka_hook, tilde_transform
from gpfusion.partitions import format_partition, partitions_of


@dataclass
class RouteConfig:
    max_n: int = 4
    show: bool = True


def compare(cfg: RouteConfig) -> tuple[int, int]:
    agree = total = 0
    for N in range(1, cfg.max_n + 1):
        for mu in partitions_of(N):
            t0 = time.perf_counter()
            dec = rmu_decompose(mu)
            dt = time.perf_counter() - t0
            for lam in partitions_of(N):
                charge = tilde_transform(charge_kostka(lam, mu), mu)
                ring = dec.component(lam)
                ok = charge == ring
                if mu == (1,) * N:
                    ok = ok and tilde_transform(kostka_hook(lam), mu) == ring
                agree += ok
                total += 1
                if cfg.show and not charge.is_zero():
                    print(f"mu={format_partition(mu):<10} lam={format_partition(lam):<10} {str(ring):<28} "
                          f"{'ok' if ok else 'MISMATCH'}")
            if cfg.show:
                print(f"  R_({format_partition(mu)}): {dec.hilbert}  [{dt:.2f}s]")
    return agree, total


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--quiet", action="store_true")
    a = p.parse_args()
    agree, total = compare(RouteConfig(a.max_n, not a.quiet))
    print(f"{agree}/{total} (lam, mu) pairs agree")
    raise SystemExit(0 if agree == total else 1)


if __name__ == "__main__":
    main()
