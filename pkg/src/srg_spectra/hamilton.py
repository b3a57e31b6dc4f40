"""Hamiltonian cycles, toughness, and desk-scale checks of the spectral
hamiltonicity criteria.

The search is a seeded Posa rotation-extension heuristic followed, if it
fails, by an exhaustive backtracking search.  Only the backtracking search
can prove non-hamiltonicity, and only for ``v <= 32`` do we claim it.
"""

from __future__ import annotations

import enum
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import Complete, Inapplicable, SizeLimit, ThresholdUndefined, TooSmall
from .graph import Graph, iter_bits
from .spectral import second_eigenvalue
from .srg_core import ks_threshold

EXHAUSTIVE_MAX_V = 32
COUNT_MAX_V = 14
TOUGHNESS_MAX_V = 20


class Verdict(str, enum.Enum):
    FOUND = "found"
    NOT_FOUND_EXHAUSTIVE = "not_found_exhaustive"
    BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass(frozen=True)
class SearchBudget:
    node_limit: int = 1_000_000
    time_limit: float = 30.0
    seed: int = 0

    def __post_init__(self):
        if self.node_limit <= 0 or self.time_limit <= 0:
            raise ValueError("budget limits must be positive")


@dataclass(frozen=True)
class CycleCertificate:
    order: tuple[int, ...]


@dataclass(frozen=True)
class SearchResult:
    verdict: Verdict
    certificate: CycleCertificate | None
    nodes: int
    method: str

    @property
    def found(self) -> bool:
        return self.verdict is Verdict.FOUND


def verify_cycle(g: Graph, c: CycleCertificate | Sequence[int]) -> bool:
    order = tuple(c.order if isinstance(c, CycleCertificate) else c)
    if len(order) != g.v or g.v < 3 or sorted(order) != list(range(g.v)):
        return False
    return all(g.has_edge(order[i], order[(i + 1) % g.v]) for i in range(g.v))


class _Clock:
    def __init__(self, node_limit: int, time_limit: float):
        self.left = node_limit
        self.deadline = time.monotonic() + time_limit
        self.used = 0

    def tick(self) -> bool:
        """Consume one node; False once either limit is hit."""
        self.used += 1
        self.left -= 1
        if self.left < 0:
            return False
        if self.used & 1023 == 0 and time.monotonic() > self.deadline:
            self.left = -1
            return False
        return True


def _posa(g: Graph, rng: random.Random, clock: _Clock) -> list[int] | None:
    v, rows = g.v, g.rows
    starts = sorted(range(v), key=lambda u: (rows[u].bit_count(), u))
    stall_limit = 4 * v
    attempt = 0
    while clock.left > 0:
        start = starts[attempt % v]
        attempt += 1
        path = [start]
        pos = {start: 0}
        used = 1 << start
        stall = 0
        while stall < stall_limit:
            if not clock.tick():
                return None
            end = path[-1]
            free = rows[end] & ~used
            if free:
                # extend towards the free vertex with fewest free neighbours
                w = min(iter_bits(free), key=lambda x: ((rows[x] & ~used).bit_count(), x))
                pos[w] = len(path)
                path.append(w)
                used |= 1 << w
                stall = 0
                continue
            if len(path) == v and rows[end] >> path[0] & 1:
                return path
            pivots = [pos[w] for w in iter_bits(rows[end]) if pos[w] < len(path) - 2]
            if not pivots or rng.random() < 0.1:
                path.reverse()
                for i, x in enumerate(path):
                    pos[x] = i
                stall += 1
                continue
            if len(path) == v:
                good = [i for i in pivots if rows[path[i + 1]] >> path[0] & 1]
            else:
                good = [i for i in pivots if rows[path[i + 1]] & ~used]
            i = min(good) if good and rng.random() < 0.5 else rng.choice(pivots)
            tail = path[i + 1:]
            tail.reverse()
            path[i + 1:] = tail
            for j in range(i + 1, len(path)):
                pos[path[j]] = j
            stall += 1
    return None


def _backtrack(g: Graph, clock: _Clock) -> tuple[list[int] | None, bool]:
    """Depth-first search from vertex 0; returns ``(cycle, completed)``."""
    v, rows = g.v, g.rows
    start = 0
    path = [start]
    visited = 1 << start
    stack = [rows[start]]
    while stack:
        cands = stack[-1]
        if not cands:
            stack.pop()
            visited &= ~(1 << path.pop())
            continue
        low = cands & -cands
        stack[-1] = cands ^ low
        if visited & low:
            continue
        if not clock.tick():
            return None, False
        w = low.bit_length() - 1
        path.append(w)
        visited |= low
        if len(path) == v:
            if rows[w] >> start & 1:
                return path, True
        elif _viable(g, visited, w, start):
            stack.append(rows[w] & ~visited)
            continue
        path.pop()
        visited ^= low
    return None, True


def _viable(g: Graph, visited: int, end: int, start: int) -> bool:
    rows = g.rows
    unvisited = g.full & ~visited
    if not rows[start] & unvisited:
        return False
    avail = unvisited | (1 << end) | (1 << start)
    for u in iter_bits(unvisited):
        if (rows[u] & avail).bit_count() < 2:
            return False
    return g.component_of(end, unvisited | (1 << end)) & unvisited == unvisited


def find_hamiltonian(g: Graph, budget: SearchBudget | None = None) -> SearchResult:
    budget = budget or SearchBudget()
    if g.v < 3:
        raise TooSmall("hamiltonian cycles need at least 3 vertices")
    g.require_connected()
    clock = _Clock(budget.node_limit, budget.time_limit)
    rng = random.Random(budget.seed)
    if g.v <= EXHAUSTIVE_MAX_V:
        # small graphs: a short heuristic pass, then proof by exhaustion
        heuristic = _Clock(min(budget.node_limit // 2, 200 * g.v * g.v), budget.time_limit)
        heuristic.deadline = clock.deadline
        path = _posa(g, rng, heuristic)
        clock.left -= heuristic.used
        clock.used += heuristic.used
    else:
        path = _posa(g, rng, clock)
    if path is not None:
        return SearchResult(Verdict.FOUND, CycleCertificate(tuple(path)), clock.used, "posa")
    if clock.left <= 0:
        return SearchResult(Verdict.BUDGET_EXHAUSTED, None, clock.used, "posa")
    path, completed = _backtrack(g, clock)
    if path is not None:
        return SearchResult(Verdict.FOUND, CycleCertificate(tuple(path)), clock.used, "backtrack")
    if completed and g.v <= EXHAUSTIVE_MAX_V:
        return SearchResult(Verdict.NOT_FOUND_EXHAUSTIVE, None, clock.used, "backtrack")
    return SearchResult(Verdict.BUDGET_EXHAUSTED, None, clock.used, "backtrack")


def count_hamiltonian_cycles(g: Graph) -> int:
    """Exact number of undirected Hamiltonian cycles (subset dynamic programme)."""
    v, rows = g.v, g.rows
    if v > COUNT_MAX_V:
        raise SizeLimit(f"exact counting supports v <= {COUNT_MAX_V}")
    if v < 3:
        return 0
    # paths from vertex 0; masks over vertices 1..v-1 shifted down by one
    n = v - 1
    nbr = [rows[u + 1] >> 1 for u in range(n)]
    dp = [[0] * n for _ in range(1 << n)]
    for u in range(n):
        if rows[0] >> (u + 1) & 1:
            dp[1 << u][u] = 1
    for mask in range(1, 1 << n):
        row = dp[mask]
        for end in iter_bits(mask):
            c = row[end]
            if not c:
                continue
            for w in iter_bits(nbr[end] & ~mask):
                dp[mask | 1 << w][w] += c
    closing = sum(dp[(1 << n) - 1][u] for u in range(n) if rows[0] >> (u + 1) & 1)
    return closing // 2


# -- toughness --------------------------------------------------------------------


def independence_number(g: Graph) -> int:
    rows = g.rows

    def best(cand: int) -> int:
        if not cand:
            return 0
        # branch on a vertex of maximum degree inside cand
        u = max(iter_bits(cand), key=lambda x: (rows[x] & cand).bit_count())
        if not rows[u] & cand:
            return cand.bit_count()
        return max(1 + best(cand & ~rows[u] & ~(1 << u)), best(cand & ~(1 << u)))

    return best(g.full)


def toughness_exact(g: Graph) -> Fraction:
    """``min |X| / c(V - X)`` over vertex sets whose removal disconnects."""
    import networkx as nx

    v = g.v
    if v > TOUGHNESS_MAX_V:
        raise SizeLimit(f"exact toughness supports v <= {TOUGHNESS_MAX_V}")
    if g.is_complete():
        raise Complete("complete graphs have no disconnecting set")
    if not g.is_connected():
        return Fraction(0)
    kappa = nx.node_connectivity(g.to_networkx())
    alpha = independence_number(g)
    best: Fraction | None = None
    for size in range(kappa, v - 1):
        # c(V - X) <= min(v - size, alpha), and that bound only grows with size
        if best is not None and Fraction(size, min(v - size, alpha)) >= best:
            break
        for xs in combinations(range(v), size):
            removed = 0
            for x in xs:
                removed |= 1 << x
            c = g.count_components(g.full & ~removed)
            if c > 1 and (best is None or Fraction(size, c) < best):
                best = Fraction(size, c)
    return best


def toughness_lower_bound(g: Graph) -> float:
    """``k / Lambda - 2``, a lower bound for the toughness of a connected noncomplete regular graph."""
    k = g.regular_degree()
    if k is None:
        raise ValueError("graph must be regular")
    g.require_connected()
    if g.is_complete():
        raise Complete("bound requires a noncomplete graph")
    return k / second_eigenvalue(g) - 2


# -- spectral criteria ------------------------------------------------------------------


def ks_verdict(g: Graph) -> dict:
    k = g.regular_degree()
    if k is None:
        raise ValueError("graph must be regular")
    g.require_connected()
    lam = second_eigenvalue(g)
    ratio = k / lam if lam > 0 else math.inf
    out = {"v": g.v, "k": k, "Lambda": lam, "ratio": ratio}
    try:
        thr = ks_threshold(g.v)
    except ThresholdUndefined as exc:
        out.update(threshold=None, fires=False, status="threshold_undefined", note=str(exc))
        return out
    fires = ratio > thr
    out.update(threshold=thr, fires=fires, status="evaluated",
               note="the criterion only applies for astronomically large v; at desk scale it is informational")
    return out


@dataclass
class TrialResult:
    trial: int
    deleted_edges: int
    max_deleted_degree: int
    verdict: str


@dataclass
class RobustDeletionReport:
    eps: float
    cap: int
    trials: list[TrialResult] = field(default_factory=list)

    @property
    def all_found(self) -> bool:
        return all(t.verdict == Verdict.FOUND.value for t in self.trials)


def robust_deletion_experiment(
    g: Graph, eps: float, seed: int = 0, trials: int = 5, budget: SearchBudget | None = None
) -> RobustDeletionReport:
    """Delete a random subgraph of maximum degree ``<= (1/2 - eps) k`` and search for a cycle.

    Each trial shuffles the edges with a derived seed and deletes greedily
    while respecting the per-vertex cap.  One random adversary per trial;
    evidence, not proof.
    """
    from .families import srg_params_of
    from .srg_core import classify_params

    if not 0 < eps < 0.5:
        raise ValueError("eps must lie in (0, 1/2)")
    if trials < 0:
        raise ValueError("trials must be non-negative")
    cls = classify_params(srg_params_of(g))
    if not cls.pseudo_random_candidate:
        raise Inapplicable(f"experiment targets exceptional or conference parameters, got {cls}")
    k = g.regular_degree()
    cap = math.floor((0.5 - eps) * k)
    report = RobustDeletionReport(eps, cap)
    budget = budget or SearchBudget()
    edges = g.edges()
    for t in range(trials):
        rng = random.Random(f"{seed}:{t}")
        order = edges[:]
        rng.shuffle(order)
        deg = [0] * g.v
        removed = []
        for a, b in order:
            if deg[a] < cap and deg[b] < cap:
                deg[a] += 1
                deg[b] += 1
                removed.append((a, b))
        h = g.remove_edges(removed)
        if not h.is_connected():
            verdict = "disconnected"
        else:
            res = find_hamiltonian(h, SearchBudget(budget.node_limit, budget.time_limit, budget.seed + t))
            if res.found:
                assert verify_cycle(h, res.certificate)
            verdict = res.verdict.value
        report.trials.append(TrialResult(t, len(removed), max(deg, default=0), verdict))
    return report
