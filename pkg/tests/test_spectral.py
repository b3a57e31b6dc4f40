import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from srg_spectra import families
from srg_spectra.errors import AmbiguousClustering
from srg_spectra.graph import Graph, complete_graph, cycle_graph
from srg_spectra.spectral import (
    commutation_check,
    eigen_multiplicities,
    jacobi_eigenvalues,
    multiplicity_gap_bound,
    second_eigenvalue,
    spectrum,
)
from srg_spectra.srg_core import SrgParams, spectrum_from_params

SQRT5 = math.sqrt(5)


def rounded(clusters, nd=6):
    return [(round(x, nd), t) for x, t in clusters]


def test_petersen_spectrum_matches_exact():
    spec = spectrum(families.petersen())
    exact = spectrum_from_params(SrgParams(10, 3, 0, 1)).eigenvalues()
    assert np.allclose(spec.eigenvalues, exact, atol=1e-9)
    assert rounded(eigen_multiplicities(spec)) == [(3, 1), (1, 5), (-2, 4)]


def test_small_spectra():
    k32 = families.complete_multipartite(3, 2)
    assert rounded(eigen_multiplicities(spectrum(k32))) == [(4, 1), (0, 3), (-2, 2)]
    assert spectrum(Graph(1, (0,))).eigenvalues == (0.0,)


def test_trace_identities():
    for g in (families.petersen(), families.paley(13), families.triangular(6)):
        spec = spectrum(g)
        k = g.regular_degree()
        assert abs(spec.trace) < 1e-9
        assert spec.trace_of_square == pytest.approx(g.v * k, abs=1e-9)


def test_second_eigenvalue_examples():
    assert second_eigenvalue(families.petersen()) == pytest.approx(2)
    assert second_eigenvalue(families.paley(5)) == pytest.approx((SQRT5 + 1) / 2)
    assert second_eigenvalue(complete_graph(4)) == pytest.approx(1)


def test_jacobi_agrees_with_lapack():
    for g in (families.petersen(), families.paley(29), families.triangular(7), families.latin_square_graph(5, 3)):
        a = np.sort(spectrum(g, "jacobi").eigenvalues)
        b = np.sort(spectrum(g).eigenvalues)
        assert np.allclose(a, b, atol=1e-9)


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 12).flatmap(lambda n: st.lists(st.floats(-5, 5), min_size=n * n, max_size=n * n).map(
    lambda xs: np.array(xs).reshape(n, n))))
def test_jacobi_on_random_symmetric(m):
    a = (m + m.T) / 2
    assert np.allclose(np.sort(jacobi_eigenvalues(a)), np.linalg.eigvalsh(a), atol=1e-8)


def test_clustering_examples():
    c = eigen_multiplicities(spectrum(families.paley(13)))
    assert c[0][1] == 1 and c[1][1] == 6 and c[2][1] == 6
    assert c[1][0] == pytest.approx((-1 + math.sqrt(13)) / 2, abs=1e-9)
    assert eigen_multiplicities([2.0] * 7) == [(2.0, 7)]
    with pytest.raises(AmbiguousClustering):
        eigen_multiplicities([1.0, 1.0 + 1.5e-6], tol=1e-6)


def test_clustering_snaps_to_exact_values():
    c = eigen_multiplicities(spectrum(families.petersen()), snap=(3, 1, -2))
    assert c == [(3, 1), (1, 5), (-2, 4)]


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=30))
def test_clustering_recovers_integer_multiset(xs):
    noisy = [x + 1e-9 * ((i % 3) - 1) for i, x in enumerate(xs)]
    got = eigen_multiplicities(noisy)
    assert sum(t for _, t in got) == len(xs)
    assert [(round(x), t) for x, t in got] == sorted(((x, xs.count(x)) for x in set(xs)), reverse=True)


def test_commutation_with_automorphisms():
    from itertools import combinations

    g = families.petersen()
    pairs = list(combinations(range(5), 2))
    index = {p: i for i, p in enumerate(pairs)}
    rot = [index[tuple(sorted(((a + 1) % 5, (b + 1) % 5)))] for a, b in pairs]
    assert commutation_check(g, rot)
    assert commutation_check(g, list(range(10)))
    u, w = g.edges()[0]
    swap = list(range(10))
    swap[u], swap[w] = w, u
    assert not commutation_check(g, swap)


@pytest.mark.parametrize("g, t_min, bound, lam", [
    (families.petersen(), 4, math.sqrt(30 / 4), 2),
    (families.paley(13), 6, math.sqrt(13), (1 + math.sqrt(13)) / 2),
    (cycle_graph(5), 2, math.sqrt(5), (SQRT5 + 1) / 2),
])
def test_multiplicity_gap_bound_examples(g, t_min, bound, lam):
    gb = multiplicity_gap_bound(g)
    assert gb.t_min == t_min
    assert gb.bound == pytest.approx(bound)
    assert gb.Lambda == pytest.approx(lam)
    assert gb.holds
    assert gb.kernel_violations(g.v, g.regular_degree()) == []
