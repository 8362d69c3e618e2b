"""Placements of graph vertices in R^d and the three matrices of a framework.

A framework is a graph together with a placement p of its vertices in R^d.
Its rigidity matrix R has one column per edge, built from the normalized
direction between the placed endpoints; the stiffness matrix is R R^t and the
edge-basis (lower) stiffness matrix is R^t R.  Coincident endpoints contribute
zero columns: coincidence is detected by exact coordinate equality, never by a
tolerance.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .graphs import Graph


@dataclass(frozen=True, eq=False)
class Placement:
    """Points p(0), ..., p(n-1) in R^d as a read-only (n, d) array."""

    points: np.ndarray

    def __post_init__(self):
        pts = np.array(self.points, dtype=float)
        if pts.ndim != 2:
            raise ValueError(f"points must have shape (n, d), got ndim={pts.ndim}")
        if pts.shape[0] < 1 or pts.shape[1] < 1:
            raise ValueError(f"need n >= 1 points in d >= 1 dimensions, got shape {pts.shape}")
        if not np.all(np.isfinite(pts)):
            raise ValueError("points must be finite")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def d(self) -> int:
        return self.points.shape[1]

    def is_injective(self) -> bool:
        """True iff no two points coincide exactly."""
        return len({tuple(row) for row in self.points}) == self.n

    def image_size(self) -> int:
        return len({tuple(row) for row in self.points})

    def is_constant(self) -> bool:
        return bool(np.all(self.points == self.points[0]))


def direction(p: Placement, u: int, v: int) -> np.ndarray:
    """Unit vector from p(v) toward p(u); zero when the points coincide exactly."""
    if u == v:
        raise ValueError(f"direction needs distinct vertices, got u=v={u}")
    diff = p.points[u] - p.points[v]
    if np.all(diff == 0.0):
        return np.zeros(p.d)
    return diff / np.linalg.norm(diff)


def _check_match(g: Graph, p: Placement) -> None:
    if p.n != g.n:
        raise ValueError(f"placement has {p.n} points but graph has {g.n} vertices")


def _unit_edge_directions(g: Graph, p: Placement) -> np.ndarray:
    """(m, d) array of d_uv for each edge (u, v), u < v; zero rows for coincidences."""
    if g.m == 0:
        return np.zeros((0, p.d))
    uv = np.asarray(g.edges)
    diffs = p.points[uv[:, 0]] - p.points[uv[:, 1]]
    coincident = np.all(diffs == 0.0, axis=1)
    norms = np.linalg.norm(diffs, axis=1)
    norms[coincident] = 1.0
    unit = diffs / norms[:, None]
    unit[coincident] = 0.0
    return unit


def rigidity_matrix(g: Graph, p: Placement) -> np.ndarray:
    """dn x |E| matrix whose column for edge {u, v} is (1_u - 1_v) (x) d_uv."""
    _check_match(g, p)
    n, d, m = g.n, p.d, g.m
    R = np.zeros((n, d, m))
    if m:
        uv = np.asarray(g.edges)
        unit = _unit_edge_directions(g, p)
        cols = np.arange(m)
        R[uv[:, 0], :, cols] = unit
        R[uv[:, 1], :, cols] = -unit
    return R.reshape(n * d, m)


def stiffness(g: Graph, p: Placement) -> np.ndarray:
    """R R^t: dn x dn, symmetric positive semidefinite."""
    R = rigidity_matrix(g, p)
    return R @ R.T


def lower_stiffness_product(g: Graph, p: Placement) -> np.ndarray:
    """R^t R: |E| x |E| in canonical edge order."""
    R = rigidity_matrix(g, p)
    return R.T @ R


def lower_stiffness_direct(g: Graph, p: Placement) -> np.ndarray:
    """Edge-basis stiffness matrix from its entry rule, bypassing R.

    Diagonal is exactly 2 for edges with distinct endpoint images and exactly 0
    otherwise; entries for edges sharing a vertex are the cosine of the angle
    at the shared vertex (0 if either direction degenerates); disjoint edges
    give 0.
    """
    _check_match(g, p)
    m = g.m
    L = np.zeros((m, m))
    unit = _unit_edge_directions(g, p)
    coincident = np.all(unit == 0.0, axis=1) if m else np.zeros(0, bool)
    incident: dict[int, list[int]] = {}
    for k, (u, v) in enumerate(g.edges):
        L[k, k] = 0.0 if coincident[k] else 2.0
        incident.setdefault(u, []).append(k)
        incident.setdefault(v, []).append(k)
    for s, ks in incident.items():
        for a_pos, k1 in enumerate(ks):
            u1, v1 = g.edges[k1]
            d1 = unit[k1] if u1 == s else -unit[k1]
            for k2 in ks[a_pos + 1:]:
                u2, v2 = g.edges[k2]
                d2 = unit[k2] if u2 == s else -unit[k2]
                c = float(d1 @ d2)
                L[k1, k2] = c
                L[k2, k1] = c
    return L


@dataclass(frozen=True, eq=False)
class FrameworkMatrices:
    """The three matrices of a framework, in canonical vertex/edge order.

    Lminus is assembled from the entry rule (so its diagonal is exactly 0 or 2)
    and agrees with R^t R entrywise to 1e-12.
    """

    R: np.ndarray
    L: np.ndarray
    Lminus: np.ndarray


def framework_matrices(g: Graph, p: Placement) -> FrameworkMatrices:
    R = rigidity_matrix(g, p)
    return FrameworkMatrices(R=R, L=R @ R.T, Lminus=lower_stiffness_direct(g, p))


def is_infinitesimally_rigid(g: Graph, p: Placement, tol: float = 1e-9) -> bool:
    """True iff the numeric rank of R equals dn - (d+1 choose 2)."""
    _check_match(g, p)
    d = p.d
    if g.n <= d:
        raise ValueError(f"need n > d, got n={g.n}, d={d}")
    R = rigidity_matrix(g, p)
    if R.size == 0:
        rank = 0
    else:
        sv = np.linalg.svd(R, compute_uv=False)
        rank = 0 if sv[0] == 0.0 else int(np.count_nonzero(sv > tol * sv[0]))
    return rank == d * g.n - math.comb(d + 1, 2)


def edge_lengths(g: Graph, p: Placement) -> np.ndarray:
    """Length of each placed edge, in canonical edge order."""
    _check_match(g, p)
    if g.m == 0:
        return np.zeros(0)
    uv = np.asarray(g.edges)
    return np.linalg.norm(p.points[uv[:, 0]] - p.points[uv[:, 1]], axis=1)


def placement_to_json(p: Placement) -> str:
    return json.dumps({"d": p.d, "points": p.points.tolist()})


def placement_from_json(text: str) -> Placement:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"placement JSON is malformed: {exc}") from None
    if not isinstance(obj, dict) or "d" not in obj or "points" not in obj:
        raise ValueError("placement JSON must be an object with fields 'd' and 'points'")
    pts = np.asarray(obj["points"], dtype=float)
    if pts.ndim != 2 or pts.shape[1] != obj["d"]:
        raise ValueError(
            f"field 'points' must be an n x d array with d={obj['d']}, got shape {pts.shape}"
        )
    return Placement(pts)


def read_placement(path: str | Path) -> Placement:
    return placement_from_json(Path(path).read_text())


def write_placement(p: Placement, path: str | Path) -> None:
    Path(path).write_text(placement_to_json(p) + "\n")


def matrix_to_csv(M: np.ndarray, path: str | Path) -> None:
    """Dense CSV, row-major, full-precision scientific notation."""
    np.savetxt(path, np.atleast_2d(M), delimiter=",", fmt="%.17e")
