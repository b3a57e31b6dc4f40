"""Tabulate the spectral hamiltonicity threshold against k/Lambda for Paley graphs.

The threshold 1000 ln v lnlnln v / (lnln v)^2 is negative for v < e^e
(undefined below 16 here), crosses zero at v = e^e and stays in the
thousands at any size we can build, so every row reports "does not fire".
"""

from __future__ import annotations

import argparse
import math
from dataclasses import dataclass

import mpmath
from sympy import primerange

from srg_spectra.families import paley
from srg_spectra.hamilton import ks_verdict
from srg_spectra.srg_core import ks_threshold


@dataclass
class TableConfig:
    q_max: int = 401
    dps: int = 30


def run(cfg: TableConfig) -> None:
    print(f"{'q':>6}{'k/Lambda':>12}{'threshold':>14}  fires")
    for q in primerange(17, cfg.q_max + 1):
        if q % 4 != 1:
            continue
        r = ks_verdict(paley(q))
        print(f"{q:>6}{r['ratio']:>12.4f}{r['threshold']:>14.2f}  {r['fires']}")
    print("\nthreshold at selected orders (float vs mpmath):")
    with mpmath.workdps(cfg.dps):
        for v in (16, 100, 10 ** 6, int(math.e ** math.e ** math.e) + 1, 10 ** 100):
            l1 = mpmath.log(v)
            exact = 1000 * l1 * mpmath.log(mpmath.log(l1)) / mpmath.log(l1) ** 2
            print(f"  v = {v:<12.6g} {ks_threshold(v):>14.6f}  {mpmath.nstr(exact, 12):>16}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q-max", type=int, default=TableConfig.q_max)
    ap.add_argument("--dps", type=int, default=TableConfig.dps)
    run(TableConfig(**vars(ap.parse_args())))


if __name__ == "__main__":
    main()
