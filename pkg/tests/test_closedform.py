import math

import pytest

from adconn.closedform import (
    bound_report,
    circle_spectrum_closed_form,
    crosspolytope_spectrum_closed_form,
    pyramid_spectrum_closed_form,
    simplex_spectrum_closed_form,
    spectrum_matches,
    turan_simplex_spectrum_closed_form,
)
from adconn.graphs import complete_graph, turan_graph
from adconn.placements import (
    crosspolytope_placement,
    regular_simplex,
    triangular_pyramid,
)
from adconn.spectral import stiffness_spectrum


def test_simplex_closed_form_values():
    assert simplex_spectrum_closed_form(3).clusters == ((0.0, 6), (1.0, 2), (2.0, 3), (4.0, 1))
    assert simplex_spectrum_closed_form(2).clusters == ((0.0, 3), (1.5, 2), (3.0, 1))
    assert simplex_spectrum_closed_form(4).clusters == ((0.0, 10), (1.0, 5), (2.5, 4), (5.0, 1))
    with pytest.raises(ValueError):
        simplex_spectrum_closed_form(1)


def test_turan_simplex_closed_form_values():
    assert turan_simplex_spectrum_closed_form(8, 3).clusters == (
        (0.0, 6), (1.0, 8), (2.0, 2), (4.0, 7), (8.0, 1),
    )
    assert turan_simplex_spectrum_closed_form(12, 3).clusters == (
        (0.0, 6), (1.5, 16), (3.0, 2), (6.0, 11), (12.0, 1),
    )
    with pytest.raises(ValueError):
        turan_simplex_spectrum_closed_form(9, 3)


def test_turan_simplex_collapses_to_simplex_at_minimal_n():
    for d in (2, 3, 4, 6):
        assert turan_simplex_spectrum_closed_form(d + 1, d).clusters == simplex_spectrum_closed_form(d).clusters


def test_crosspolytope_closed_form_values():
    assert crosspolytope_spectrum_closed_form(12, 3).clusters == (
        (0.0, 6), (2.0, 15), (4.0, 3), (6.0, 11), (12.0, 1),
    )
    # d=2 merges the n/d and n/2 clusters
    assert crosspolytope_spectrum_closed_form(8, 2).clusters == (
        (0.0, 3), (2.0, 4), (4.0, 8), (8.0, 1),
    )
    assert crosspolytope_spectrum_closed_form(6, 3).clusters == (
        (0.0, 6), (1.0, 3), (2.0, 3), (3.0, 5), (6.0, 1),
    )
    with pytest.raises(ValueError):
        crosspolytope_spectrum_closed_form(9, 3)


def test_crosspolytope_minimal_n_verified_by_eigensolve():
    g, _ = turan_graph(6, 6)
    computed = stiffness_spectrum(g, crosspolytope_placement(6, 3))
    match = spectrum_matches(crosspolytope_spectrum_closed_form(6, 3), computed)
    assert match.ok


def test_merged_crosspolytope_case_verified_by_eigensolve():
    g, _ = turan_graph(8, 4)
    computed = stiffness_spectrum(g, crosspolytope_placement(8, 2))
    match = spectrum_matches(crosspolytope_spectrum_closed_form(8, 2), computed)
    assert match.ok and match.max_value_error <= 1e-9


def test_pyramid_closed_form_merges():
    # at h = 1/sqrt(6) the middle value 3 - 1/ell^2 reaches 1 and merges
    assert pyramid_spectrum_closed_form(1 / math.sqrt(6)).clusters == (
        (0.0, 6), (1.0, 3), (2.5, 2), (4.0, 1),
    )
    assert pyramid_spectrum_closed_form(math.sqrt(2 / 3)).clusters == (
        (0.0, 6), (1.0, 2), (2.0, 3), (4.0, 1),
    )
    with pytest.raises(ValueError):
        pyramid_spectrum_closed_form(0.0)


def test_pyramid_closed_form_limits():
    clusters = dict()
    for h in (10.0, 100.0, 1000.0):
        values = [v for v, _ in pyramid_spectrum_closed_form(h).clusters]
        clusters[h] = values
    # third cluster tends to 3, fourth to 1.5 as the apex recedes
    assert clusters[1000.0][3] == pytest.approx(3.0, abs=1e-5)
    assert clusters[1000.0][2] == pytest.approx(1.5, abs=1e-5)


@pytest.mark.parametrize("h", [0.2, 1 / math.sqrt(6), math.sqrt(2 / 3), 1.0, 5.0])
def test_pyramid_closed_form_matches_eigensolve(h):
    computed = stiffness_spectrum(complete_graph(4), triangular_pyramid(h))
    match = spectrum_matches(pyramid_spectrum_closed_form(h), computed)
    assert match.ok, (h, match)


def test_circle_closed_form_values():
    assert circle_spectrum_closed_form(3).clusters == ((0.0, 3), (1.5, 2), (3.0, 1))
    assert circle_spectrum_closed_form(4).clusters == ((0.0, 3), (2.0, 4), (4.0, 1))
    assert circle_spectrum_closed_form(5).clusters == ((0.0, 3), (2.5, 6), (5.0, 1))
    with pytest.raises(ValueError):
        circle_spectrum_closed_form(2)


@pytest.mark.parametrize(
    "builder,args,total",
    [
        (simplex_spectrum_closed_form, (5,), 30),
        (turan_simplex_spectrum_closed_form, (20, 4), 80),
        (crosspolytope_spectrum_closed_form, (16, 4), 64),
        (pyramid_spectrum_closed_form, (0.7,), 12),
        (circle_spectrum_closed_form, (9,), 18),
    ],
)
def test_multiplicities_sum_to_dimension(builder, args, total):
    pred = builder(*args)
    assert pred.total == total
    assert all(v >= 0 for v, _ in pred.clusters)


def test_spectrum_matches_detects_mismatch():
    pred = simplex_spectrum_closed_form(3)
    wrong = stiffness_spectrum(complete_graph(3), regular_simplex(2))
    assert not spectrum_matches(pred, wrong).ok


def test_bound_report_values():
    r = bound_report(12, 3)
    assert (r.lower_divisible, r.lower_general) == (2.0, -3.0)
    assert r.upper == pytest.approx(13 / 3, abs=1e-12)
    r = bound_report(48, 3)
    assert r.lower_divisible == 8.0 and r.upper == pytest.approx(16 + 1 / 3, abs=1e-12)
    assert bound_report(48, 4).upper == pytest.approx(32 / 3 + 1 / 3, abs=1e-12)
    r = bound_report(8, 3)
    assert r.lower_divisible is None
    assert r.lower_general == -3.0
    assert r.upper == pytest.approx(3.0, abs=1e-12)


def test_bound_report_field_ranges():
    r = bound_report(4, 3)  # n < 2d: only the upper bound applies
    assert r.lower_divisible is None and r.lower_general is None
    assert r.upper == pytest.approx(2 * 4 / (3 * 2) + 1 / 3, abs=1e-12)
    with pytest.raises(ValueError):
        bound_report(10, 2)
    with pytest.raises(ValueError):
        bound_report(3, 3)


def test_bounds_sandwich_where_both_defined():
    for d in (3, 4, 5):
        for n in range(2 * d, 49):
            r = bound_report(n, d)
            if r.lower_divisible is not None:
                assert r.lower_divisible <= r.upper + 1e-12
            assert r.lower_general <= r.upper + 1e-12
