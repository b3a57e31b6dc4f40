"""Delete a random bounded-degree subgraph from a pseudo-random SRG and look for a Hamiltonian cycle.

Each trial removes edges greedily (random order) so that no vertex loses
more than floor((1/2 - eps) k) of them, then runs the cycle search.  A
single random adversary per trial is only evidence, never proof.

    python scripts/robust_deletion.py --q 29 --eps 0.25 --trials 5
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from srg_spectra.families import paley, srg_params_of
from srg_spectra.hamilton import SearchBudget, robust_deletion_experiment


@dataclass
class DeletionConfig:
    q: int = 29
    eps: float = 0.25
    trials: int = 5
    seed: int = 0
    node_limit: int = 1_000_000
    time_limit: float = 30.0


def run(cfg: DeletionConfig) -> bool:
    g = paley(cfg.q)
    budget = SearchBudget(cfg.node_limit, cfg.time_limit, cfg.seed)
    rep = robust_deletion_experiment(g, cfg.eps, seed=cfg.seed, trials=cfg.trials, budget=budget)
    print(f"Paley({cfg.q}) {tuple(srg_params_of(g))}, eps={cfg.eps}, per-vertex deletion cap {rep.cap}")
    for t in rep.trials:
        print(f"  trial {t.trial}: deleted {t.deleted_edges:>4} edges (max {t.max_deleted_degree} per vertex) -> {t.verdict}")
    print("all trials found a cycle" if rep.all_found else "some trials did not find a cycle")
    return rep.all_found


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(DeletionConfig()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=type(default), default=default)
    run(DeletionConfig(**vars(ap.parse_args())))


if __name__ == "__main__":
    main()
