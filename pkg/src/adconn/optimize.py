"""Maximization of the stiffness spectral gap over placements.

The search is a multi-restart first-order ascent on a smoothed objective: a
softmin over the eigenvalue cluster sitting at the first non-trivial position,
which tames the non-smoothness caused by the high multiplicity of the gap
eigenvalue near optima.  The gradient contract is a central finite difference
of that objective; the gauge freedom (translation, scale) is projected out
after every accepted step.  Restarts mix jittered canonical placements with
uniform sphere starts and draw from per-restart seeded streams, so results are
independent of execution order and thread count.
"""

from __future__ import annotations

import json
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .framework import Placement, placement_to_json
from .graphs import Graph
from .placements import (
    crosspolytope_placement,
    regular_simplex,
    roots_of_unity_angles,
    triangular_pyramid,
    turan_simplex_placement,
    unit_circle_placement,
)
from .seeding import rng_stream
from .spectral import spectral_gap, trivial_motion_count

GAUGES = ("center-scale", "unit-sphere")


@dataclass(frozen=True)
class OptimizerConfig:
    restarts: int = 8
    max_iters: int = 400
    step_init: float = 0.1
    step_decay: float = 0.7
    seed: int = 0
    gauge: str = "center-scale"
    smoothing: float = 1e-6   # softmin width as a fraction of the current gap
    tol: float = 1e-8         # minimum gap improvement that counts as progress
    patience: int = 50        # iterations without progress before a restart stops
    jitter: float = 1e-3      # applied to canonical starts to restore injectivity

    def __post_init__(self):
        if self.restarts < 1 or self.max_iters < 1 or self.patience < 1:
            raise ValueError("restarts, max_iters and patience must be positive")
        if self.step_init <= 0:
            raise ValueError("step_init must be positive")
        if not 0 < self.step_decay <= 1:
            raise ValueError("step_decay must lie in (0, 1]")
        if self.gauge not in GAUGES:
            raise ValueError(f"gauge must be one of {GAUGES}, got {self.gauge!r}")

    def to_json_dict(self) -> dict:
        return {
            "restarts": self.restarts,
            "max_iters": self.max_iters,
            "step_init": self.step_init,
            "step_decay": self.step_decay,
            "seed": self.seed,
            "gauge": self.gauge,
            "smoothing": self.smoothing,
            "tol": self.tol,
            "patience": self.patience,
            "jitter": self.jitter,
        }


@dataclass(frozen=True, eq=False)
class OptimizeResult:
    best_gap: float
    best_placement: Placement
    best_restart: int
    traces: tuple[tuple[tuple[int, float], ...], ...]
    wall_time_s: float
    config: OptimizerConfig

    def to_json_dict(self) -> dict:
        return {
            "best_gap": self.best_gap,
            "best_restart": self.best_restart,
            "best_placement": json.loads(placement_to_json(self.best_placement)),
            "traces": [[[i, g] for i, g in tr] for tr in self.traces],
            "wall_time_s": self.wall_time_s,
            "config": self.config.to_json_dict(),
        }


def normalize_placement(p: Placement, gauge: str = "center-scale") -> Placement:
    """Project out the gauge freedom: center at the origin, then rescale to
    root-mean-square point norm 1 (or radially project every point onto the
    unit sphere under the unit-sphere gauge, which is a similarity only for
    inputs that already lie on a common sphere)."""
    if gauge not in GAUGES:
        raise ValueError(f"gauge must be one of {GAUGES}, got {gauge!r}")
    if p.is_constant():
        raise ValueError("cannot normalize a constant placement")
    pts = p.points - p.points.mean(axis=0)
    if gauge == "center-scale":
        rms = math.sqrt(float(np.mean(np.sum(pts * pts, axis=1))))
        return Placement(pts / rms)
    norms = np.linalg.norm(pts, axis=1)
    safe = norms > 0
    pts[safe] /= norms[safe, None]
    return Placement(pts)


def _normalize_points(pts: np.ndarray, gauge: str) -> np.ndarray:
    pts = pts - pts.mean(axis=0)
    if gauge == "center-scale":
        rms = math.sqrt(float(np.mean(np.sum(pts * pts, axis=1))))
        if rms > 0:
            pts /= rms
        return pts
    norms = np.linalg.norm(pts, axis=1)
    safe = norms > 0
    pts[safe] /= norms[safe, None]
    return pts


def _stiffness_eigs(uv: np.ndarray, n: int, d: int, pts: np.ndarray) -> np.ndarray:
    m = uv.shape[0]
    R = np.zeros((n, d, m))
    if m:
        diffs = pts[uv[:, 0]] - pts[uv[:, 1]]
        coincident = np.all(diffs == 0.0, axis=1)
        norms = np.linalg.norm(diffs, axis=1)
        norms[coincident] = 1.0
        unit = diffs / norms[:, None]
        unit[coincident] = 0.0
        cols = np.arange(m)
        R[uv[:, 0], :, cols] = unit
        R[uv[:, 1], :, cols] = -unit
    R = R.reshape(n * d, m)
    return np.linalg.eigvalsh(R @ R.T)


def _smoothed_objective(eigs: np.ndarray, t: int, width: float) -> float:
    """Softmin over the eigenvalue cluster starting at index t; equals eigs[t]
    as the width shrinks or when the cluster is a singleton."""
    lam_t = float(eigs[t])
    if width <= 0:
        return lam_t
    cluster = eigs[t:][eigs[t:] <= lam_t + width]
    z = np.exp(-(cluster - lam_t) / width)
    return lam_t - width * float(np.log(np.sum(z)))


def seeded_restarts(g: Graph, d: int, config: OptimizerConfig) -> list[Placement]:
    """Initial placements: jittered canonical configurations first (whenever
    the divisibility conditions admit them), then uniform sphere starts."""
    n = g.n
    canonical: list[Placement] = []
    if n == d + 1:
        canonical.append(regular_simplex(d))
        if d == 3:
            canonical.append(triangular_pyramid(1.0 / math.sqrt(6.0)))
    if n % (2 * d) == 0:
        canonical.append(crosspolytope_placement(n, d))
    if n > d + 1 and n % (d + 1) == 0:
        canonical.append(turan_simplex_placement(n, d))
    if d == 2 and n >= 3:
        canonical.append(unit_circle_placement(roots_of_unity_angles(n)).placement)

    starts: list[Placement] = []
    for i in range(config.restarts):
        rng = rng_stream(config.seed, f"restart-{i}")
        if i < len(canonical):
            pts = canonical[i].points + config.jitter * rng.standard_normal((n, d))
        else:
            pts = rng.standard_normal((n, d))
            pts /= np.linalg.norm(pts, axis=1)[:, None]
        starts.append(Placement(pts))
    return starts


@dataclass
class _RestartOutcome:
    index: int
    gap: float
    placement: Placement
    trace: list = field(default_factory=list)


def _ascend(g: Graph, d: int, config: OptimizerConfig, index: int, start: Placement) -> _RestartOutcome:
    uv = np.asarray(g.edges).reshape(g.m, 2)
    n = g.n
    t = trivial_motion_count(d)

    def objective(pts: np.ndarray) -> tuple[float, float]:
        eigs = _stiffness_eigs(uv, n, d, pts)
        gap = float(eigs[t])
        width = config.smoothing * max(gap, 1e-9)
        return _smoothed_objective(eigs, t, width), gap

    x = _normalize_points(start.points.copy(), config.gauge)
    f_cur, gap_cur = objective(x)
    best_gap, best_pts = gap_cur, x.copy()
    trace = [(0, best_gap)]
    step = config.step_init
    fd_step = 1e-5
    snapshot, stalled = best_gap, 0

    for it in range(1, config.max_iters + 1):
        grad = np.zeros((n, d))
        for vtx in range(n):
            for c in range(d):
                bump = np.zeros((n, d))
                bump[vtx, c] = fd_step
                f_plus, _ = objective(x + bump)
                f_minus, _ = objective(x - bump)
                grad[vtx, c] = (f_plus - f_minus) / (2 * fd_step)
        gnorm = float(np.linalg.norm(grad))
        if gnorm > 1e-14:
            x_try = _normalize_points(x + (step / gnorm) * grad, config.gauge)
            f_try, gap_try = objective(x_try)
            if f_try > f_cur:
                x, f_cur, gap_cur = x_try, f_try, gap_try
            else:
                step *= config.step_decay
        else:
            step *= config.step_decay
        if gap_cur > best_gap:
            best_gap, best_pts = gap_cur, x.copy()
            trace.append((it, best_gap))
        if best_gap >= snapshot + config.tol:
            snapshot, stalled = best_gap, 0
        else:
            stalled += 1
        if stalled >= config.patience or step < 1e-13:
            break

    return _RestartOutcome(index, best_gap, Placement(best_pts), trace)


def gap_ascent(g: Graph, d: int, config: OptimizerConfig | None = None, threads: int = 1) -> OptimizeResult:
    """Maximize the spectral gap of (g, p) over placements p in R^d.

    Returns the best gap seen over all restarts together with the placement
    attaining it; the reported value is a lower bound witness, never a claim
    that the supremum is attained.
    """
    config = config or OptimizerConfig()
    if g.n <= d:
        raise ValueError(f"need n > d, got n={g.n}, d={d}")
    t0 = time.perf_counter()
    starts = seeded_restarts(g, d, config)
    jobs = list(enumerate(starts))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(lambda job: _ascend(g, d, config, *job), jobs))
    else:
        outcomes = [_ascend(g, d, config, i, s) for i, s in jobs]
    best = max(outcomes, key=lambda r: (r.gap, -r.index))
    wall = time.perf_counter() - t0
    recomputed = spectral_gap(g, best.placement)
    return OptimizeResult(
        best_gap=recomputed,
        best_placement=best.placement,
        best_restart=best.index,
        traces=tuple(tuple(o.trace) for o in outcomes),
        wall_time_s=wall,
        config=config,
    )
