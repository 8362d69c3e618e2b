import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from adconn.framework import Placement, lower_stiffness_direct, stiffness
from adconn.graphs import complete_graph, make_graph, turan_graph
from adconn.placements import crosspolytope_placement, regular_simplex, turan_simplex_placement
from adconn.spectral import (
    cluster_multiplicities,
    clustered_spectrum,
    interlacing_check,
    numeric_rank,
    spectral_gap,
    stiffness_spectrum,
    symmetric_eigensystem,
    symmetric_eigenvalues,
)

from conftest import random_placement
from test_framework import random_graph


def test_symmetric_eigenvalues_2x2_closed_form():
    # eigenvalues of [[a, b], [b, a]] are a -+ b
    np.testing.assert_allclose(
        symmetric_eigenvalues([[2.0, 0.5], [0.5, 2.0]]), [1.5, 2.5], atol=1e-14
    )


def test_symmetric_eigenvalues_zero_matrix():
    for k in (1, 4, 7):
        np.testing.assert_array_equal(symmetric_eigenvalues(np.zeros((k, k))), np.zeros(k))


def test_symmetric_eigenvalues_equilateral_lower_stiffness():
    Lm = lower_stiffness_direct(complete_graph(3), regular_simplex(2))
    np.testing.assert_allclose(symmetric_eigenvalues(Lm), [1.5, 1.5, 3.0], atol=1e-12)


def test_symmetric_eigenvalues_rejects_asymmetric():
    with pytest.raises(ValueError, match="symmetric"):
        symmetric_eigenvalues([[0.0, 1.0], [0.0, 0.0]])


def test_eigensystem_reconstruction_residual(rng):
    for _ in range(10):
        k = int(rng.integers(2, 40))
        A = rng.standard_normal((k, k))
        M = A + A.T
        w, Q = symmetric_eigensystem(M)
        resid = np.max(np.abs(M - Q @ np.diag(w) @ Q.T))
        assert resid <= 1e-9 * np.max(np.abs(M))


def test_cluster_multiplicities_examples():
    ms = cluster_multiplicities([0.0, 1e-12, 1.0], tol=1e-8)
    assert ms.multiplicities() == (2, 1)
    assert ms.values()[0] == pytest.approx(0.0, abs=1e-12)
    assert ms.values()[1] == 1.0
    assert ms.total == 3


def test_cluster_multiplicities_simplex_spectrum():
    ms = stiffness_spectrum(complete_graph(4), regular_simplex(3), tol=1e-8)
    assert ms.multiplicities() == (6, 2, 3, 1)
    np.testing.assert_allclose(ms.values(), [0.0, 1.0, 2.0, 4.0], atol=1e-9)


def test_cluster_merges_coinciding_crosspolytope_values():
    # at n=8, d=2 the n/d and n/2 clusters coincide at 4
    g, _ = turan_graph(8, 4)
    ms = stiffness_spectrum(g, crosspolytope_placement(8, 2))
    assert ms.multiplicities() == (3, 4, 8, 1)
    np.testing.assert_allclose(ms.values(), [0.0, 2.0, 4.0, 8.0], atol=1e-9)


def test_cluster_rejects_unsorted():
    with pytest.raises(ValueError, match="sorted"):
        cluster_multiplicities([1.0, 0.0], tol=1e-8)


@settings(max_examples=200, deadline=None)
@given(
    st.lists(st.floats(min_value=-100, max_value=100), min_size=1, max_size=40),
    st.floats(min_value=1e-12, max_value=1.0),
)
def test_cluster_multiplicities_properties(values, tol):
    eigs = sorted(values)
    ms = cluster_multiplicities(eigs, tol)
    assert ms.total == len(eigs)
    vals = ms.values()
    assert all(b - a > tol for a, b in zip(vals, vals[1:]))
    assert all(m >= 1 for m in ms.multiplicities())


def test_spectrum_csv_and_json():
    ms = clustered_spectrum(np.diag([0.0, 0.0, 2.0]))
    lines = ms.to_csv().strip().splitlines()
    assert lines == ["0.0,2", "2.0,1"]
    obj = ms.to_json_dict()
    assert obj["total"] == 3 and obj["cluster_tol"] > 0


@pytest.mark.parametrize(
    "graph,placement,expected",
    [
        (complete_graph(4), regular_simplex(3), 1.0),
        (complete_graph(3), regular_simplex(2), 1.5),
        (turan_graph(12, 6)[0], crosspolytope_placement(12, 3), 2.0),
    ],
)
def test_spectral_gap_known_values(graph, placement, expected):
    assert spectral_gap(graph, placement) == pytest.approx(expected, abs=1e-9)


def test_spectral_gap_rejects_small_n():
    with pytest.raises(ValueError):
        spectral_gap(complete_graph(3), regular_simplex(3))


def test_spectral_gap_similarity_invariance(rng):
    g = complete_graph(5)
    p = random_placement(rng, 5, 3)
    gap = spectral_gap(g, p)
    U = np.linalg.qr(rng.standard_normal((3, 3)))[0]
    q = Placement(2.5 * p.points @ U.T + rng.standard_normal(3))
    assert spectral_gap(g, q) == pytest.approx(gap, abs=1e-10)


def test_numeric_rank():
    assert numeric_rank(np.eye(5)) == 5
    assert numeric_rank(np.zeros((3, 4))) == 0
    assert numeric_rank(np.outer([1.0, 2.0], [3.0, 4.0])) == 1
    from adconn.framework import rigidity_matrix

    assert numeric_rank(rigidity_matrix(complete_graph(4), regular_simplex(3))) == 6


def test_interlacing_equilateral_frozen_values():
    # removing one edge of the equilateral triangle leaves a 60-degree hinge, whose
    # edge-basis matrix [[2, 1/2], [1/2, 2]] has eigenvalues 3/2 and 5/2
    hinge = np.linalg.eigvalsh([[2.0, 0.5], [0.5, 2.0]])
    np.testing.assert_allclose(hinge, [1.5, 2.5], atol=1e-14)
    g = complete_graph(3)
    p = regular_simplex(2)
    lam_prime = symmetric_eigenvalues(stiffness(make_graph(3, [(0, 2), (1, 2)]), p))
    np.testing.assert_allclose(lam_prime, [0, 0, 0, 0, 1.5, 2.5], atol=1e-12)
    for e in g.edges:
        ok, worst = interlacing_check(g, e, p)
        assert ok and worst <= 1e-12


def test_interlacing_constant_placement():
    g = complete_graph(4)
    ok, worst = interlacing_check(g, (0, 1), Placement(np.zeros((4, 3))))
    assert ok and worst == 0.0


def test_interlacing_rejects_missing_edge():
    g = make_graph(3, [(0, 1)])
    with pytest.raises(ValueError):
        interlacing_check(g, (0, 2), Placement(np.zeros((3, 2))))


def test_interlacing_random_sweep(rng):
    for _ in range(100):
        n = int(rng.integers(4, 11))
        d = int(rng.integers(1, 5))
        g = random_graph(rng, n)
        e = g.edges[int(rng.integers(g.m))]
        p = random_placement(rng, n, d)
        ok, worst = interlacing_check(g, e, p)
        assert ok, f"violation {worst} on n={n}, d={d}, e={e}"


def test_nonzero_spectra_of_upper_and_lower_agree(rng):
    instances = [
        (complete_graph(4), regular_simplex(3)),
        (turan_graph(8, 4)[0], turan_simplex_placement(8, 3)),
        (turan_graph(12, 6)[0], crosspolytope_placement(12, 3)),
    ]
    for _ in range(100):
        n = int(rng.integers(2, 9))
        d = int(rng.integers(1, 5))
        instances.append((random_graph(rng, n), random_placement(rng, n, d)))
    for g, p in instances:
        upper = clustered_spectrum(stiffness(g, p), tol=1e-7)
        lower = clustered_spectrum(lower_stiffness_direct(g, p), tol=1e-7) if g.m else None
        up = [(v, m) for v, m in upper.clusters if v > 1e-7]
        lo = [(v, m) for v, m in lower.clusters if v > 1e-7] if lower else []
        assert len(up) == len(lo)
        for (uv, um), (lv, lm) in zip(up, lo):
            assert um == lm
            assert uv == pytest.approx(lv, abs=1e-9)


def test_gap_continuity_under_perturbation(rng):
    # gap differences shrink with the perturbation along fixed directions; the
    # slope fitted at the two coarser levels bounds the finest level (modest
    # headroom for curvature between scales)
    g = complete_graph(6)
    deltas = (1e-3, 1e-4, 1e-5)
    for _ in range(3):
        p = random_placement(rng, 6, 3)
        gap = spectral_gap(g, p)
        bumps = [rng.standard_normal((6, 3)) for _ in range(5)]
        diffs = {
            delta: np.mean(
                [abs(spectral_gap(g, Placement(p.points + delta * u)) - gap) for u in bumps]
            )
            for delta in deltas
        }
        assert diffs[1e-3] >= diffs[1e-4] >= diffs[1e-5]
        slope = max(diffs[1e-3] / 1e-3, diffs[1e-4] / 1e-4)
        assert diffs[1e-5] <= 1.25 * slope * 1e-5
