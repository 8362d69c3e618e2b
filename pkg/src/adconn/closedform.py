"""Closed-form stiffness spectra for the canonical frameworks, and the
lower/upper bound formulas for the d-dimensional algebraic connectivity of
complete graphs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .spectral import MultiplicitySpectrum

MERGE_TOL = 1e-12


@dataclass(frozen=True)
class PredictedSpectrum:
    """A predicted (value, multiplicity) clustering with its formula tag.

    Clusters are sorted, nonnegative, free of zero multiplicities, and values
    closer than 1e-12 are merged before any comparison.
    """

    clusters: tuple[tuple[float, int], ...]
    source: str

    @property
    def total(self) -> int:
        return sum(m for _, m in self.clusters)

    def values(self) -> tuple[float, ...]:
        return tuple(v for v, _ in self.clusters)

    def multiplicities(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.clusters)


def _predicted(source: str, pairs, expected_total: int) -> PredictedSpectrum:
    live = sorted((float(v), int(m)) for v, m in pairs if m > 0)
    merged: list[list] = []
    for v, m in live:
        if merged and abs(v - merged[-1][0]) <= MERGE_TOL:
            merged[-1][1] += m
        else:
            merged.append([v, m])
    clusters = tuple((v, m) for v, m in merged)
    if any(v < 0 for v, _ in clusters):
        raise AssertionError(f"{source}: negative predicted eigenvalue")
    total = sum(m for _, m in clusters)
    if total != expected_total:
        raise AssertionError(f"{source}: multiplicities sum to {total}, expected {expected_total}")
    return PredictedSpectrum(clusters, source)


def simplex_spectrum_closed_form(d: int) -> PredictedSpectrum:
    """Stiffness spectrum of the complete graph on d+1 vertices at the regular simplex."""
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    pairs = [
        (0.0, d * (d + 1) // 2),
        (1.0, (d + 1) * (d - 2) // 2),
        ((d + 1) / 2, d),
        (float(d + 1), 1),
    ]
    return _predicted("simplex", pairs, d * (d + 1))


def turan_simplex_spectrum_closed_form(n: int, d: int) -> PredictedSpectrum:
    """Stiffness spectrum of the balanced (d+1)-partite graph at the simplex placement."""
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    if n < d + 1 or n % (d + 1) != 0:
        raise ValueError(f"need n >= d+1 with (d+1) | n, got n={n}, d={d}")
    pairs = [
        (0.0, d * (d + 1) // 2),
        (n / (2 * (d + 1)), (n - d - 1) * (d - 1)),
        (n / (d + 1), (d - 2) * (d + 1) // 2),
        (n / 2, n - 1),
        (float(n), 1),
    ]
    return _predicted("turan-simplex", pairs, d * n)


def crosspolytope_spectrum_closed_form(n: int, d: int) -> PredictedSpectrum:
    """Stiffness spectrum of the balanced 2d-partite graph at the crosspolytope placement."""
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    if n < 2 * d or n % (2 * d) != 0:
        raise ValueError(f"need n >= 2d with 2d | n, got n={n}, d={d}")
    pairs = [
        (0.0, d * (d + 1) // 2),
        (n / (2 * d), n * (d - 1) - d * d),
        (n / d, d * (d - 1) // 2),
        (n / 2, n - 1),
        (float(n), 1),
    ]
    return _predicted("crosspolytope", pairs, d * n)


def pyramid_spectrum_closed_form(apex_height: float) -> PredictedSpectrum:
    """Stiffness spectrum of the 4-point pyramid family, parameterized by apex height.

    With ell^2 = h^2 + 1/3 the squared apex-edge length, the nonzero part is
    1^(2), (3 - 1/ell^2)^(1), (3/2 + 1/(2 ell^2))^(2), 4^(1); h = 0 degenerates
    to a planar image and is rejected.
    """
    h = float(apex_height)
    if h <= 0:
        raise ValueError(f"need apex height > 0, got {h}")
    ell2 = h * h + 1.0 / 3.0
    pairs = [
        (0.0, 6),
        (1.0, 2),
        (3.0 - 1.0 / ell2, 1),
        (1.5 + 0.5 / ell2, 2),
        (4.0, 1),
    ]
    return _predicted("pyramid", pairs, 12)


def circle_spectrum_closed_form(n: int) -> PredictedSpectrum:
    """Stiffness spectrum of K_n at any injective centered unit-circle placement."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    pairs = [(0.0, 3), (n / 2, 2 * n - 4), (float(n), 1)]
    return _predicted("circle", pairs, 2 * n)


@dataclass(frozen=True)
class SpectrumMatch:
    ok: bool
    max_value_error: float
    multiplicity_match: bool


def spectrum_matches(
    predicted: PredictedSpectrum,
    computed: MultiplicitySpectrum,
    value_tol: float = 1e-9,
) -> SpectrumMatch:
    """Cluster-by-cluster comparison: multiplicities exact, values within value_tol."""
    if len(predicted.clusters) != len(computed.clusters):
        return SpectrumMatch(False, math.inf, False)
    mult_ok = predicted.multiplicities() == computed.multiplicities()
    max_err = max(
        abs(pv - cv) for (pv, _), (cv, _) in zip(predicted.clusters, computed.clusters)
    )
    return SpectrumMatch(mult_ok and max_err <= value_tol, max_err, mult_ok)


@dataclass(frozen=True)
class BoundReport:
    """Lower/upper bounds on the best achievable spectral gap of K_n in R^d.

    Fields are present only where their formulas apply: lower_divisible = n/(2d)
    needs 2d | n, lower_general = ceil(n/(2d)) - 2d + 1 needs n >= 2d, and the
    upper bound 2n/(3(d-1)) + 1/3 needs n >= d+1; all need d >= 3.
    """

    n: int
    d: int
    lower_divisible: float | None
    lower_general: float | None
    upper: float | None
    gap_observed: float | None = None

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "lower_divisible": self.lower_divisible,
            "lower_general": self.lower_general,
            "upper": self.upper,
            "gap_observed": self.gap_observed,
        }


def bound_report(n: int, d: int) -> BoundReport:
    if d < 3:
        raise ValueError(f"bounds require d >= 3, got d={d}")
    lower_divisible = n / (2 * d) if (n >= 2 * d and n % (2 * d) == 0) else None
    lower_general = float(math.ceil(n / (2 * d)) - 2 * d + 1) if n >= 2 * d else None
    upper = 2 * n / (3 * (d - 1)) + 1.0 / 3.0 if n >= d + 1 else None
    if lower_divisible is None and lower_general is None and upper is None:
        raise ValueError(f"no bound formula applies to n={n}, d={d}")
    return BoundReport(n, d, lower_divisible, lower_general, upper)
