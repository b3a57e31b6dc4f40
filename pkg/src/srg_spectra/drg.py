"""Distance-regular graphs, distance graphs and merged graphs.

For a distance-regular graph every distance matrix ``A_r`` is a polynomial
in ``A``, so any union of distance graphs commutes with ``A`` and each
eigenspace of ``A`` sits inside one eigenspace of the union.  Rather than
build the polynomials we test these observable consequences directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import BadIndex, Bipartite, Inapplicable, NotDrg, ThresholdUndefined
from .families import is_complete_multipartite
from .graph import Graph
from .spectral import DEFAULT_TOL, eigen_multiplicities, second_eigenvalue, spectrum


@dataclass(frozen=True)
class DistancePartition:
    dist: np.ndarray  # v x v integer matrix
    diameter: int

    def layer(self, r: int) -> np.ndarray:
        return (self.dist == r).astype(np.int64)


def distance_partition(g: Graph) -> DistancePartition:
    g.require_connected()
    d = np.array([g.bfs_distances(u) for u in range(g.v)], dtype=np.int64)
    d.setflags(write=False)
    return DistancePartition(d, int(d.max()) if g.v else 0)


def distance_graph(g: Graph, r: int, part: DistancePartition | None = None) -> Graph:
    part = part or distance_partition(g)
    if not 1 <= r <= part.diameter:
        raise BadIndex(f"distance {r} outside 1..{part.diameter}")
    if r == 1:
        return g
    return Graph.from_matrix(part.dist == r)


@dataclass(frozen=True)
class DRGCertificate:
    diameter: int
    # p[h][i][j]: vertices at distance i from x and j from y, for d(x, y) = h
    intersection_numbers: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def valencies(self) -> tuple[int, ...]:
        """``k_i``, the number of vertices at distance ``i`` from any vertex."""
        p0 = self.intersection_numbers[0]
        return tuple(p0[i][i] for i in range(self.diameter + 1))

    @property
    def intersection_array(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """``({b_0, ..., b_{d-1}}; {c_1, ..., c_d})``."""
        d = self.diameter
        p = self.intersection_numbers
        b = tuple(p[i][1][i + 1] for i in range(d))
        c = tuple(p[i][1][i - 1] for i in range(1, d + 1))
        return b, c


def is_distance_regular(g: Graph, part: DistancePartition | None = None) -> DRGCertificate:
    """Brute-force check of the defining counts; raises :class:`NotDrg` on failure."""
    part = part or distance_partition(g)
    d = part.diameter
    layers = [part.layer(i) for i in range(d + 1)]
    table = []
    for h in range(d + 1):
        mask = part.dist == h
        row = []
        for i in range(d + 1):
            cells = []
            for j in range(d + 1):
                counts = (layers[i] @ layers[j])[mask]
                vals = np.unique(counts)
                if len(vals) != 1:
                    raise NotDrg(f"p^{h}_{i}{j} takes values {vals.tolist()}")
                cells.append(int(vals[0]))
            row.append(tuple(cells))
        table.append(tuple(row))
    return DRGCertificate(d, tuple(table))


@dataclass(frozen=True)
class MergedGraph:
    source: Graph
    merge_set: frozenset[int]
    graph: Graph

    @property
    def degree(self) -> int | None:
        return self.graph.regular_degree()


def merged_graph(g: Graph, R: Iterable[int], part: DistancePartition | None = None) -> MergedGraph:
    part = part or distance_partition(g)
    R = frozenset(R)
    if not R:
        raise BadIndex("merge set must be non-empty")
    bad = [r for r in R if not 1 <= r <= part.diameter]
    if bad:
        raise BadIndex(f"distances {sorted(bad)} outside 1..{part.diameter}")
    adj = np.isin(part.dist, sorted(R))
    return MergedGraph(g, R, Graph.from_matrix(adj))


def commutation_merge_check(g: Graph, m: MergedGraph | Graph) -> bool:
    """Exact integer test of ``A M == M A``."""
    a = g.adjacency_matrix()
    b = (m.graph if isinstance(m, MergedGraph) else m).adjacency_matrix()
    return bool(np.array_equal(a @ b, b @ a))


@dataclass(frozen=True)
class Refinement:
    """How eigenspaces of G sit inside eigenspaces of a commuting graph M."""

    # (eigenvalue of G, multiplicity, eigenvalue of M on that space, residual)
    images: tuple[tuple[float, int, float, float], ...]
    merged_clusters: tuple[tuple[float, int], ...]
    coarsening: bool


def eigenspace_refinement(g: Graph, m: MergedGraph | Graph, tol: float = DEFAULT_TOL) -> Refinement:
    """Check that M acts as a scalar on every eigenspace of G and that
    the induced grouping reproduces M's multiplicities."""
    mg = m.graph if isinstance(m, MergedGraph) else m
    a = g.adjacency_matrix(dtype=float)
    b = mg.adjacency_matrix(dtype=float)
    vals, vecs = np.linalg.eigh(a)
    order = np.argsort(-vals)
    vals, vecs = vals[order], vecs[:, order]
    clusters = eigen_multiplicities(tuple(vals), tol)
    images = []
    start = 0
    for theta, mult in clusters:
        u = vecs[:, start:start + mult]
        start += mult
        bu = b @ u
        image = float(np.trace(u.T @ bu)) / mult
        resid = float(np.linalg.norm(bu - image * u))
        images.append((theta, mult, image, resid))
    merged = eigen_multiplicities(spectrum(mg, tol=tol), tol)
    grouped: dict[int, int] = {}
    ok = all(res <= 1e-8 * max(1.0, g.v) for *_, res in images)
    for _, mult, image, _ in images:
        hits = [i for i, (x, _) in enumerate(merged) if abs(x - image) <= tol]
        if len(hits) != 1:
            ok = False
            continue
        grouped[hits[0]] = grouped.get(hits[0], 0) + mult
    ok = ok and all(grouped.get(i, 0) == t for i, (_, t) in enumerate(merged))
    return Refinement(tuple(images), tuple(merged), ok)


# -- Godsil's diameter and valency bounds -------------------------------------------


def godsil_bound_check(g: Graph, cert: DRGCertificate | None = None) -> dict:
    """Evaluate the diameter and valency bounds for every eigenvalue other than ``+-k``.

    Two valency bounds are reported: the quadratic ``(m-1)(m-2)/2`` and
    ``(m-1)(m+2)/2``, the spherical two-distance-set bound Godsil proved.
    """
    k = g.regular_degree()
    if k is None or k <= 2:
        raise Inapplicable("needs a regular graph of degree > 2")
    if is_complete_multipartite(g):
        raise Inapplicable("complete multipartite graphs are excluded")
    cert = cert or is_distance_regular(g)
    clusters = eigen_multiplicities(spectrum(g))
    rows = []
    for theta, m in clusters:
        if abs(theta - k) < 1e-6 or abs(theta + k) < 1e-6:
            continue
        rows.append({
            "eigenvalue": theta,
            "multiplicity": m,
            "diameter_bound": 3 * m - 4,
            "diameter_ok": cert.diameter <= 3 * m - 4,
            "valency_bound_minus": (m - 1) * (m - 2) // 2,
            "valency_ok_minus": k <= (m - 1) * (m - 2) // 2,
            "valency_bound_plus": (m - 1) * (m + 2) // 2,
            "valency_ok_plus": k <= (m - 1) * (m + 2) // 2,
            "order_ok": g.v < m ** (6 * m),
        })
    return {"k": k, "diameter": cert.diameter, "v": g.v, "eigenvalues": rows}


def merged_gap_bound_check(g: Graph, R: Iterable[int]) -> dict:
    """``Lambda(M) < sqrt(6 p v lnln v / ln v)`` for a connected merged graph M of degree p."""
    g.require_connected()
    if g.is_bipartite():
        raise Bipartite("source graph is bipartite")
    if is_complete_multipartite(g):
        raise Inapplicable("source graph is complete multipartite")
    part = distance_partition(g)
    cert = is_distance_regular(g, part)
    v = g.v
    if v < 3 or math.log(math.log(v)) <= 0:
        raise ThresholdUndefined(f"lnln v is not positive for v = {v}")
    m = merged_graph(g, R, part)
    p = m.degree
    if not m.graph.is_connected() or p is None:
        raise Inapplicable("merged graph is not connected and regular")
    mult_min_g = min(t for _, t in eigen_multiplicities(spectrum(g))[1:])
    lam = second_eigenvalue(m.graph)
    m_clusters = eigen_multiplicities(spectrum(m.graph))
    t_min = min(t for _, t in m_clusters[1:]) if len(m_clusters) > 1 else None
    ll = math.log(math.log(v))
    bound = math.sqrt(6 * p * v * ll / math.log(v))
    return {
        "v": v,
        "diameter": cert.diameter,
        "merge_set": sorted(m.merge_set),
        "p": p,
        "Lambda": lam,
        "bound": bound,
        "holds": lam < bound,
        "min_multiplicity_source": mult_min_g,
        "min_multiplicity_merged": t_min,
        "multiplicity_floor": math.log(v) / (6 * ll),
        "multiplicity_floor_ok": t_min is not None and t_min > math.log(v) / (6 * ll),
        "complete_multipartite_merge": is_complete_multipartite(m.graph) if not m.graph.is_complete() else False,
    }
