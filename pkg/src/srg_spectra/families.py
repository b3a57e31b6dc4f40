"""Constructions of the classical strongly regular families and DRG fixtures.

Finite-field constructions use prime fields only.  Every constructor
returns a :class:`~srg_spectra.graph.Graph`; :func:`srg_params_of` is the
brute-force oracle that recovers ``(v, k, lambda, mu)`` by counting.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations, product
from pathlib import Path

import numpy as np
from sympy import isprime

from .errors import (
    BadModulus,
    ConstructionError,
    DegenerateBlockGraph,
    DegenerateGraph,
    DegenerateGraphWarning,
    InvalidDesign,
    NonPrimeOrder,
    NotRegular,
    NotSrg,
    SizeLimit,
    TooManySquares,
    UnsupportedOrder,
)
from .graph import MAX_VERTICES, Graph
from .srg_core import SrgParams


def srg_params_of(g: Graph) -> SrgParams:
    """Count common neighbours over all pairs.

    Raises :class:`NotRegular` or :class:`Disconnected` when the
    preconditions fail and :class:`NotSrg` when either count varies (or
    when the graph is complete, so ``mu`` is undefined).
    """
    k = g.regular_degree()
    if k is None:
        raise NotRegular("graph is not regular")
    g.require_connected()
    if g.is_complete():
        raise NotSrg("complete graphs are excluded")
    a = g.adjacency_matrix(dtype=np.float64)
    common = (a @ a).astype(np.int64)  # BLAS product; entries <= v are exact in float64
    adj = a == 1
    off = ~adj
    np.fill_diagonal(off, False)
    lams = np.unique(common[adj])
    mus = np.unique(common[off])
    if len(lams) != 1:
        raise NotSrg(f"adjacent pairs have {sorted(lams.tolist())} common neighbours")
    if len(mus) != 1:
        raise NotSrg(f"non-adjacent pairs have {sorted(mus.tolist())} common neighbours")
    return SrgParams(g.v, k, int(lams[0]), int(mus[0]))


def _check_size(v: int) -> None:
    if v > MAX_VERTICES:
        raise SizeLimit(f"{v} vertices exceeds the limit of {MAX_VERTICES}")


def _flag_degenerate(g: Graph, what: str, exc=DegenerateGraph) -> Graph:
    if g.is_complete():
        raise exc(f"{what} is a complete graph")
    # complete multipartite <=> non-adjacency is an equivalence relation
    if is_complete_multipartite(g):
        warnings.warn(f"{what} is complete multipartite (imprimitive)", DegenerateGraphWarning, stacklevel=3)
    return g


# -- complete multipartite ----------------------------------------------------


def is_complete_multipartite(g: Graph) -> bool:
    """Non-adjacency (plus equality) is an equivalence relation with equal-size classes."""
    classes: dict[int, int] = {}
    for u, row in enumerate(g.rows):
        non = g.full & ~row
        if not non >> u & 1:
            return False
        classes.setdefault(non, 0)
        classes[non] += 1
    sizes = {c for c in classes.values()}
    return len(classes) >= 2 and all(key.bit_count() == cnt for key, cnt in classes.items()) and len(sizes) == 1


def complete_multipartite(n_parts: int, m: int) -> Graph:
    if n_parts < 2 or m < 1:
        raise ConstructionError("need at least 2 parts of size at least 1")
    if m == 1:
        raise DegenerateGraph(f"K_{n_parts}x1 is the complete graph")
    v = n_parts * m
    _check_size(v)
    full = (1 << v) - 1
    part = (1 << m) - 1
    return Graph(v, tuple(full & ~(part << (m * (u // m))) for u in range(v)))


# -- Latin square graphs -------------------------------------------------------


@dataclass(frozen=True)
class LatinSquareSet:
    n: int
    squares: tuple[tuple[tuple[int, ...], ...], ...]

    def is_latin(self, sq) -> bool:
        full = set(range(self.n))
        return all(set(row) == full for row in sq) and all(
            {sq[x][y] for x in range(self.n)} == full for y in range(self.n)
        )

    def orthogonal(self, a, b) -> bool:
        pairs = {(a[x][y], b[x][y]) for x in range(self.n) for y in range(self.n)}
        return len(pairs) == self.n * self.n

    def verify(self) -> bool:
        return all(self.is_latin(sq) for sq in self.squares) and all(
            self.orthogonal(a, b) for a, b in combinations(self.squares, 2)
        )


def mols(p: int, count: int) -> LatinSquareSet:
    """``count`` mutually orthogonal Latin squares ``L_a(x, y) = a x + y mod p``."""
    if not isprime(p):
        raise NonPrimeOrder(f"order {p} is not prime")
    if count > p - 1:
        raise TooManySquares(f"at most {p - 1} MOLS of order {p}")
    if count < 0:
        raise ConstructionError("count must be non-negative")
    squares = tuple(
        tuple(tuple((a * x + y) % p for y in range(p)) for x in range(p)) for a in range(1, count + 1)
    )
    return LatinSquareSet(p, squares)


def latin_square_graph(n: int, m: int) -> Graph:
    """Cells of ``m - 2`` MOLS of prime order ``n``; adjacent when sharing a row, column or symbol."""
    if m < 2:
        raise ConstructionError("m must be at least 2")
    ls = mols(n, m - 2)
    _check_size(n * n)
    cells = [(x, y) for x in range(n) for y in range(n)]

    def adjacent(i, j):
        (x1, y1), (x2, y2) = cells[i], cells[j]
        return x1 == x2 or y1 == y2 or any(sq[x1][y1] == sq[x2][y2] for sq in ls.squares)

    g = Graph.from_predicate(n * n, adjacent)
    return _flag_degenerate(g, f"latin square graph ({n=}, {m=})")


# -- Steiner systems -----------------------------------------------------------


@dataclass(frozen=True)
class SteinerSystem:
    n: int
    m: int
    blocks: tuple[frozenset[int], ...]

    def verify(self) -> bool:
        """Every pair of points lies in exactly one block."""
        seen: dict[tuple[int, int], int] = {}
        for b in self.blocks:
            if len(b) != self.m or not all(0 <= x < self.n for x in b):
                return False
            for pair in combinations(sorted(b), 2):
                seen[pair] = seen.get(pair, 0) + 1
        return len(seen) == self.n * (self.n - 1) // 2 and all(c == 1 for c in seen.values())


def steiner_triple_system(n: int) -> SteinerSystem:
    """Bose construction of an STS(n) for ``n = 6t + 3``, ``n >= 9``."""
    if n % 6 != 3 or n < 9:
        raise UnsupportedOrder(f"Bose construction needs n = 3 (mod 6) and n >= 9, got {n}")
    q = n // 3  # 2t + 1
    half = (q + 1) // 2  # t + 1, the inverse of 2 mod q

    def op(x, y):
        return half * (x + y) % q

    def pt(x, i):
        return x + q * i

    blocks = [frozenset(pt(x, i) for i in range(3)) for x in range(q)]
    for i in range(3):
        for x, y in combinations(range(q), 2):
            blocks.append(frozenset({pt(x, i), pt(y, i), pt(op(x, y), (i + 1) % 3)}))
    return SteinerSystem(n, 3, tuple(blocks))


def affine_plane_system(q: int) -> SteinerSystem:
    """Lines of AG(2, q) over the prime field: an S(2, q, q^2)."""
    if not isprime(q):
        raise NonPrimeOrder(f"order {q} is not prime")
    blocks = [frozenset(x * q + (a * x + b) % q for x in range(q)) for a in range(q) for b in range(q)]
    blocks += [frozenset(c * q + y for y in range(q)) for c in range(q)]
    return SteinerSystem(q * q, q, tuple(blocks))


def all_pairs_system(n: int) -> SteinerSystem:
    """The trivial S(2, 2, n) whose blocks are all 2-subsets."""
    return SteinerSystem(n, 2, tuple(frozenset(b) for b in combinations(range(n), 2)))


def load_steiner_system(path) -> SteinerSystem:
    """Read a design file: header ``n m``, then one block of point indices per line."""
    lines = [ln.split() for ln in Path(path).read_text().splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines or len(lines[0]) != 2:
        raise InvalidDesign("missing 'n m' header line")
    n, m = map(int, lines[0])
    s = SteinerSystem(n, m, tuple(frozenset(map(int, ln)) for ln in lines[1:]))
    if not s.verify():
        raise InvalidDesign(f"{path}: not an S(2, {m}, {n})")
    return s


def steiner_block_graph(s: SteinerSystem) -> Graph:
    _check_size(len(s.blocks))
    blocks = s.blocks
    g = Graph.from_predicate(len(blocks), lambda i, j: bool(blocks[i] & blocks[j]))
    return _flag_degenerate(g, f"block graph of S(2,{s.m},{s.n})", DegenerateBlockGraph)


def triangular(n: int) -> Graph:
    """T(n): 2-subsets of an n-set, adjacent when they meet."""
    if n < 4:
        raise ConstructionError("triangular graphs need n >= 4")
    pairs = list(combinations(range(n), 2))
    _check_size(len(pairs))
    return Graph.from_predicate(len(pairs), lambda i, j: bool(set(pairs[i]) & set(pairs[j])))


# -- conference and sporadic -------------------------------------------------------


def paley(q: int) -> Graph:
    if not isprime(q) or q % 4 != 1:
        raise BadModulus(f"Paley graphs need a prime q = 1 (mod 4), got {q}")
    _check_size(q)
    squares = {x * x % q for x in range(1, q)}
    return Graph.from_predicate(q, lambda i, j: (i - j) % q in squares)


def petersen() -> Graph:
    pairs = list(combinations(range(5), 2))
    return Graph.from_predicate(10, lambda i, j: not set(pairs[i]) & set(pairs[j]))


# -- distance-regular fixtures --------------------------------------------------------


def johnson(n: int, k: int) -> Graph:
    if not n >= 2 * k >= 2:
        raise ConstructionError("johnson graphs need n >= 2k >= 2")
    from math import comb

    _check_size(comb(n, k))
    subsets = [frozenset(c) for c in combinations(range(n), k)]
    return Graph.from_predicate(len(subsets), lambda i, j: len(subsets[i] & subsets[j]) == k - 1)


def hamming(d: int, q: int) -> Graph:
    if d < 1 or q < 2:
        raise ConstructionError("hamming graphs need d >= 1 and q >= 2")
    _check_size(q ** d)
    words = list(product(range(q), repeat=d))
    return Graph.from_predicate(len(words), lambda i, j: sum(a != b for a, b in zip(words[i], words[j])) == 1)
