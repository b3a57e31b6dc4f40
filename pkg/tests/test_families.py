import warnings
from itertools import combinations

import numpy as np
import pytest

from corpus import steiner_params
from srg_spectra import families
from srg_spectra.errors import (
    BadModulus,
    ConstructionError,
    DegenerateBlockGraph,
    DegenerateGraph,
    DegenerateGraphWarning,
    Disconnected,
    InvalidDesign,
    NonPrimeOrder,
    NotRegular,
    NotSrg,
    TooManySquares,
    UnsupportedOrder,
)
from srg_spectra.graph import Graph, complete_graph, cycle_graph, path_graph
from srg_spectra.spectral import eigen_multiplicities, spectrum


def pair_count_params(g):
    """Oracle: pure-Python common-neighbour count over every pair."""
    k = {len(g.neighbors(u)) for u in range(g.v)}
    assert len(k) == 1
    lam, mu = set(), set()
    for a, b in combinations(range(g.v), 2):
        c = len(set(g.neighbors(a)) & set(g.neighbors(b)))
        (lam if g.has_edge(a, b) else mu).add(c)
    assert len(lam) == 1 and len(mu) == 1
    return (g.v, k.pop(), lam.pop(), mu.pop())


def test_srg_params_of_matches_pair_count(small_corpus):
    for e in small_corpus:
        if e.graph.v <= 60:
            assert tuple(families.srg_params_of(e.graph)) == pair_count_params(e.graph), e.label


def test_srg_params_of_errors():
    with pytest.raises(NotSrg):
        families.srg_params_of(cycle_graph(6))
    with pytest.raises(NotRegular):
        families.srg_params_of(path_graph(4))
    with pytest.raises(Disconnected):
        families.srg_params_of(Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]))
    with pytest.raises(NotSrg):
        families.srg_params_of(complete_graph(5))


def test_multipartite_examples():
    g = families.complete_multipartite(3, 2)
    assert families.is_complete_multipartite(g)
    assert families.srg_params_of(g) == (6, 4, 2, 4)
    clusters = eigen_multiplicities(spectrum(g))
    assert [(round(x), t) for x, t in clusters] == [(4, 1), (0, 3), (-2, 2)]
    with pytest.raises(DegenerateGraph):
        families.complete_multipartite(2, 1)  # K_2
    k43 = families.complete_multipartite(4, 3)
    assert families.srg_params_of(k43) == (12, 9, 6, 9)


def test_mols_examples():
    two = families.mols(3, 2)
    assert two.verify() and len(two.squares) == 2
    full = families.mols(5, 4)
    assert full.verify()
    for a, b in combinations(full.squares, 2):
        assert len({(a[x][y], b[x][y]) for x in range(5) for y in range(5)}) == 25
    with pytest.raises(NonPrimeOrder):
        families.mols(4, 1)
    with pytest.raises(TooManySquares):
        families.mols(5, 5)


def test_latin_square_graph_examples():
    with pytest.warns(DegenerateGraphWarning):
        c4 = families.latin_square_graph(2, 2)
    assert c4.v == 4 and c4.regular_degree() == 2 and c4.is_connected()
    g = families.latin_square_graph(5, 3)
    assert families.srg_params_of(g) == (25, 12, 5, 6)
    vals = [(round(x), t) for x, t in eigen_multiplicities(spectrum(g))]
    assert vals == [(12, 1), (2, 12), (-3, 12)]
    assert families.srg_params_of(families.latin_square_graph(3, 2)) == (9, 4, 1, 2)


def test_steiner_triple_systems():
    s9 = families.steiner_triple_system(9)
    assert len(s9.blocks) == 12 and s9.verify()
    s15 = families.steiner_triple_system(15)
    assert len(s15.blocks) == 35 and s15.verify()
    with pytest.raises(UnsupportedOrder):
        families.steiner_triple_system(13)


def test_bose_construction_exhaustive_pair_scan():
    for n in (9, 15, 21, 27, 33):
        s = families.steiner_triple_system(n)
        cover = {}
        for b in s.blocks:
            for pair in combinations(sorted(b), 2):
                cover[pair] = cover.get(pair, 0) + 1
        assert sorted(cover) == list(combinations(range(n), 2))
        assert set(cover.values()) == {1}


def test_affine_planes():
    for q, blocks in ((2, 6), (3, 12), (5, 30), (7, 56)):
        s = families.affine_plane_system(q)
        assert s.verify() and len(s.blocks) == blocks
    with pytest.raises(NonPrimeOrder):
        families.affine_plane_system(4)


def test_affine_three_and_sts_nine_share_block_graph_parameters():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DegenerateGraphWarning)
        a = families.steiner_block_graph(families.affine_plane_system(3))
        b = families.steiner_block_graph(families.steiner_triple_system(9))
    assert families.srg_params_of(a) == families.srg_params_of(b) == (12, 9, 6, 9)


def test_sts9_block_graph_flagged_as_multipartite():
    with pytest.warns(DegenerateGraphWarning):
        g = families.steiner_block_graph(families.steiner_triple_system(9))
    assert families.is_complete_multipartite(g)


def test_fano_block_graph_is_complete():
    fano = families.SteinerSystem(7, 3, tuple(frozenset({i, (i + 1) % 7, (i + 3) % 7}) for i in range(7)))
    assert fano.verify()
    with pytest.raises(DegenerateBlockGraph):
        families.steiner_block_graph(fano)


def test_sts13_fixture(fixtures_dir):
    s = families.load_steiner_system(fixtures_dir / "sts13.txt")
    assert len(s.blocks) == 26
    g = families.steiner_block_graph(s)
    assert families.srg_params_of(g) == (26, 15, 8, 9)
    vals = [(round(x), t) for x, t in eigen_multiplicities(spectrum(g))]
    assert vals == [(15, 1), (2, 12), (-3, 13)]
    params, (k, r, s_) = steiner_params(13, 3)
    assert params == (26, 15, 8, 9) and (r, s_) == (2, -3)


def test_bad_design_file(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("7 3\n0 1 2\n0 3 4\n")
    with pytest.raises(InvalidDesign):
        families.load_steiner_system(path)


def test_triangular_examples():
    assert families.srg_params_of(families.triangular(5)) == (10, 6, 3, 4)
    assert families.srg_params_of(families.triangular(7)) == (21, 10, 5, 4)
    k32 = families.complete_multipartite(3, 2)
    assert families.srg_params_of(families.triangular(4)) == families.srg_params_of(k32)
    assert families.triangular(6) == families.steiner_block_graph(families.all_pairs_system(6))
    with pytest.raises(ConstructionError):
        families.triangular(3)


def test_paley_examples():
    assert families.paley(5) == cycle_graph(5)
    assert families.srg_params_of(families.paley(13)) == (13, 6, 2, 3)
    for q in (9, 8, 7):
        with pytest.raises(BadModulus):
            families.paley(q)


def test_petersen_and_its_complement():
    p = families.petersen()
    assert families.srg_params_of(p) == (10, 3, 0, 1)
    assert families.srg_params_of(p.complement()) == families.srg_params_of(families.triangular(5))
    vals = [(round(x), t) for x, t in eigen_multiplicities(spectrum(p))]
    assert vals == [(3, 1), (1, 5), (-2, 4)]


def test_johnson_and_hamming():
    assert families.srg_params_of(families.johnson(5, 2)) == (10, 6, 3, 4)
    assert families.srg_params_of(families.hamming(2, 3)) == (9, 4, 1, 2)
    cube = families.hamming(3, 2)
    assert cube.is_bipartite() and cube.regular_degree() == 3
    with pytest.raises(NotSrg):
        families.srg_params_of(cube)


def test_corpus_closed_forms(corpus):
    """Parameters and the family eigenvalue formulas against brute force and LAPACK."""
    for e in corpus:
        assert tuple(families.srg_params_of(e.graph)) == e.params, e.label
        if e.graph.v <= 120:
            ev = np.array(spectrum(e.graph).eigenvalues)
            for want in e.eigenvalues:
                assert np.min(np.abs(ev - float(want))) < 1e-9, (e.label, want)
