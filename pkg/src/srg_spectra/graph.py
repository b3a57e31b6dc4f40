"""Immutable simple undirected graphs stored as adjacency bitsets.

Row ``u`` is a Python int whose bit ``w`` is set iff ``u ~ w``; common
neighbour counts are then a single ``&`` and ``bit_count``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

import numpy as np

from .errors import Disconnected, SizeLimit

MAX_VERTICES = 10_000


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class Graph:
    v: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.v > MAX_VERTICES:
            raise SizeLimit(f"graph on {self.v} vertices exceeds {MAX_VERTICES}")
        if len(self.rows) != self.v:
            raise ValueError("one adjacency row per vertex required")

    def validate(self) -> "Graph":
        """Full loop/range/symmetry check (constructors here are symmetric by design)."""
        for u, row in enumerate(self.rows):
            if row >> u & 1:
                raise ValueError(f"loop at vertex {u}")
            if row >> self.v:
                raise ValueError(f"vertex {u} has a neighbour out of range")
            for w in iter_bits(row):
                if not self.rows[w] >> u & 1:
                    raise ValueError(f"asymmetric adjacency {u}-{w}")
        return self

    @classmethod
    def from_edges(cls, v: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * v
        for a, b in edges:
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return cls(v, tuple(rows))

    @classmethod
    def from_predicate(cls, v: int, adjacent) -> "Graph":
        """Build from a symmetric predicate ``adjacent(i, j)`` on ``0..v-1``."""
        return cls.from_edges(v, ((i, j) for i, j in combinations(range(v), 2) if adjacent(i, j)))

    @classmethod
    def from_matrix(cls, a) -> "Graph":
        a = np.asarray(a) != 0
        v = a.shape[0]
        if a.shape != (v, v) or not np.array_equal(a, a.T) or a.diagonal().any():
            raise ValueError("adjacency matrix must be square, symmetric and loopless")
        packed = np.packbits(a, axis=1, bitorder="little")
        return cls(v, tuple(int.from_bytes(r.tobytes(), "little") for r in packed))

    # -- basic queries ----------------------------------------------------
    def has_edge(self, u: int, w: int) -> bool:
        return bool(self.rows[u] >> w & 1)

    def neighbors(self, u: int) -> list[int]:
        return list(iter_bits(self.rows[u]))

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    @property
    def n_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, w)`` with ``u < w`` in ascending order."""
        return [(u, w) for u in range(self.v) for w in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    def regular_degree(self) -> int | None:
        ds = set(self.degrees())
        return ds.pop() if len(ds) == 1 else None

    @property
    def full(self) -> int:
        return (1 << self.v) - 1

    def is_complete(self) -> bool:
        return all(r.bit_count() == self.v - 1 for r in self.rows)

    def complement(self) -> "Graph":
        full = self.full
        return Graph(self.v, tuple(full & ~r & ~(1 << u) for u, r in enumerate(self.rows)))

    def adjacency_matrix(self, dtype=np.int64) -> np.ndarray:
        nbytes = (self.v + 7) // 8 or 1
        buf = b"".join(r.to_bytes(nbytes, "little") for r in self.rows)
        bits = np.unpackbits(np.frombuffer(buf, dtype=np.uint8).reshape(self.v, nbytes), axis=1, bitorder="little")
        return bits[:, : self.v].astype(dtype)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        keep = sorted(set(vertices))
        index = {x: i for i, x in enumerate(keep)}
        return Graph.from_edges(len(keep), ((index[u], index[w]) for u, w in self.edges() if u in index and w in index))

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = list(self.rows)
        for a, b in edges:
            rows[a] &= ~(1 << b)
            rows[b] &= ~(1 << a)
        return Graph(self.v, tuple(rows))

    # -- traversal ----------------------------------------------------------
    def component_of(self, start: int, within: int | None = None) -> int:
        """Bitset of the component of ``start`` inside the vertex bitset ``within``."""
        within = self.full if within is None else within
        seen = frontier = 1 << start
        rows = self.rows
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= rows[u]
            frontier = nxt & within & ~seen
            seen |= frontier
        return seen

    def count_components(self, within: int | None = None) -> int:
        left = self.full if within is None else within
        count = 0
        while left:
            low = left & -left
            left &= ~self.component_of(low.bit_length() - 1, left)
            count += 1
        return count

    def is_connected(self) -> bool:
        return self.v > 0 and self.component_of(0) == self.full

    def require_connected(self) -> None:
        if not self.is_connected():
            raise Disconnected("graph is not connected")

    def bipartition(self) -> tuple[int, int] | None:
        """Two colour classes as bitsets, or ``None`` for an odd cycle."""
        colour = [-1] * self.v
        for s in range(self.v):
            if colour[s] != -1:
                continue
            colour[s] = 0
            stack = [s]
            while stack:
                u = stack.pop()
                for w in iter_bits(self.rows[u]):
                    if colour[w] == -1:
                        colour[w] = 1 - colour[u]
                        stack.append(w)
                    elif colour[w] == colour[u]:
                        return None
        a = sum(1 << u for u in range(self.v) if colour[u] == 0)
        return a, self.full & ~a

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def bfs_distances(self, source: int) -> list[int]:
        dist = [-1] * self.v
        dist[source] = 0
        seen = frontier = 1 << source
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= self.rows[u]
            frontier = nxt & ~seen
            seen |= frontier
            for w in iter_bits(frontier):
                dist[w] = d
        return dist

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.v))
        g.add_edges_from(self.edges())
        return g

    def relabel(self, perm) -> "Graph":
        """Image of the graph under ``u -> perm[u]``."""
        return Graph.from_edges(self.v, ((perm[u], perm[w]) for u, w in self.edges()))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph.from_predicate(n, lambda i, j: True)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


# -- edge-list files ------------------------------------------------------------


class EdgeListError(ValueError):
    pass


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.v} {len(edges)}"] + [f"{u} {w}" for u, w in edges]
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_edge_list(g))


def parse_edge_list(text: str) -> Graph:
    """Parse ``v e`` followed by ``e`` lines ``u w`` (0-based); loops and duplicates are errors."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise EdgeListError("first line must be 'v e'")
    try:
        v, e = map(int, lines[0])
        pairs = [tuple(map(int, ln)) for ln in lines[1:]]
    except ValueError as exc:
        raise EdgeListError(f"non-integer token: {exc}") from None
    if v < 0 or e < 0 or v > MAX_VERTICES:
        raise EdgeListError(f"bad header {v} {e}")
    if len(pairs) != e:
        raise EdgeListError(f"header promises {e} edges, found {len(pairs)}")
    seen = set()
    for pair in pairs:
        if len(pair) != 2:
            raise EdgeListError(f"edge line {pair} must have two entries")
        a, b = pair
        if not (0 <= a < v and 0 <= b < v):
            raise EdgeListError(f"edge {a} {b} out of range")
        if a == b:
            raise EdgeListError(f"loop at {a}")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise EdgeListError(f"duplicate edge {a} {b}")
        seen.add(key)
    return Graph.from_edges(v, pairs)


def read_edge_list(path) -> Graph:
    with open(path, encoding="ascii") as fh:
        return parse_edge_list(fh.read())
