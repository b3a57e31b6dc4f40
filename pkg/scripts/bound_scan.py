"""Scan feasible parameter sets and summarise the eigenvalue-ratio bounds by family tag.

    python scripts/bound_scan.py --vmax 1000 --workers 4
"""

from __future__ import annotations

import argparse
import time
from collections import Counter
from dataclasses import dataclass

from srg_spectra.srg_core import BOUND_NAMES, enumerate_feasible


@dataclass
class ScanConfig:
    vmax: int = 1000
    workers: int = 1
    show_failures: int = 10


def run(cfg: ScanConfig) -> None:
    t0 = time.perf_counter()
    tags: Counter[str] = Counter()
    status: dict[str, Counter[str]] = {name: Counter() for name in BOUND_NAMES}
    failures = []
    tightest = None  # smallest k/Lambda margin over v^(1/10)/2 among pseudo-random candidates
    for rec in enumerate_feasible(cfg.vmax, workers=cfg.workers):
        tags[rec.cls.name] += 1
        for entry in rec.bounds.entries:
            status[entry.name][entry.status] += 1
            if entry.status == "fail":
                failures.append((tuple(rec.params), entry.name))
        pr = rec.bounds["pseudo_random_ratio"]
        if pr.applicable:
            margin = float(pr.lhs) / float(pr.rhs)
            if tightest is None or margin < tightest[0]:
                tightest = (margin, tuple(rec.params), rec.cls.name)
    elapsed = time.perf_counter() - t0

    print(f"feasible tuples with v <= {cfg.vmax}: {sum(tags.values())}  ({elapsed:.1f}s)")
    for tag, n in sorted(tags.items(), key=lambda kv: -kv[1]):
        print(f"  {tag:<22}{n:>7}")
    print(f"\n{'bound':<24}{'pass':>8}{'fail':>8}{'na':>8}")
    for name in BOUND_NAMES:
        c = status[name]
        print(f"{name:<24}{c['pass']:>8}{c['fail']:>8}{c['na']:>8}")
    if tightest:
        print(f"\nsmallest (k/Lambda) / (v^(1/10)/2): {tightest[0]:.4f} at {tightest[1]} [{tightest[2]}]")
    if failures:
        print(f"\nfirst failures: {failures[:cfg.show_failures]}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--vmax", type=int, default=ScanConfig.vmax)
    ap.add_argument("--workers", type=int, default=ScanConfig.workers)
    ap.add_argument("--show-failures", type=int, default=ScanConfig.show_failures)
    run(ScanConfig(**{k.replace("-", "_"): v for k, v in vars(ap.parse_args()).items()}))


if __name__ == "__main__":
    main()
