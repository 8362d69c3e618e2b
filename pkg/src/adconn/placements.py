"""Canonical placements: simplex and crosspolytope embeddings, circle and
sphere configurations, the equilateral-base pyramid family, and replication.

All constructors are closed-form and deterministic; randomized ones take an
explicit seed and draw from tag-separated streams.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .framework import Placement
from .seeding import rng_stream


def _helmert_basis(d: int) -> np.ndarray:
    """d orthonormal rows in R^(d+1), each orthogonal to the all-ones vector."""
    H = np.zeros((d, d + 1))
    for k in range(1, d + 1):
        H[k - 1, :k] = 1.0
        H[k - 1, k] = -k
        H[k - 1] /= math.sqrt(k * (k + 1))
    return H


def regular_simplex(d: int) -> Placement:
    """d+1 unit-norm, zero-sum, equidistant points in R^d.

    The standard basis of R^(d+1) is centered onto the sum-zero hyperplane,
    rescaled to unit norm, and expressed in an orthonormal (Helmert) basis of
    that hyperplane, so the Gram matrix is exactly 1 on the diagonal and -1/d
    off it, with no orthogonalization drift.
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    scale = math.sqrt((d + 1) / d)
    pts = -scale * _helmert_basis(d).T
    return Placement(pts)


def turan_simplex_placement(n: int, d: int) -> Placement:
    """n points on the d+1 regular-simplex vertices, contiguous blocks of n/(d+1)."""
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if n % (d + 1) != 0:
        raise ValueError(f"d+1={d + 1} does not divide n={n}")
    verts = regular_simplex(d).points
    return Placement(np.repeat(verts, n // (d + 1), axis=0))


def crosspolytope_placement(n: int, d: int) -> Placement:
    """n points on {+-e_1, ..., +-e_d}, parts ordered (1,+1), (1,-1), (2,+1), ...

    Each of the 2d unit vectors carries a contiguous block of n/(2d) vertices.
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if n % (2 * d) != 0:
        raise ValueError(f"2d={2 * d} does not divide n={n}")
    verts = np.zeros((2 * d, d))
    for i in range(d):
        verts[2 * i, i] = 1.0
        verts[2 * i + 1, i] = -1.0
    return Placement(np.repeat(verts, n // (2 * d), axis=0))


@dataclass(frozen=True)
class CirclePlacement:
    """A unit-circle placement plus the two hypothesis flags callers care about."""

    placement: Placement
    centered: bool
    injective: bool


def unit_circle_placement(angles) -> CirclePlacement:
    """Points (cos t, sin t) for the given angles; reports centering and injectivity.

    Centering (sum of points below 1e-10) is the caller's responsibility; the
    antipodal helpers below generate angle sets that are centered by
    construction.
    """
    angles = np.asarray(angles, dtype=float)
    pts = np.column_stack([np.cos(angles), np.sin(angles)])
    p = Placement(pts)
    centered = bool(np.linalg.norm(pts.sum(axis=0)) <= 1e-10)
    return CirclePlacement(p, centered, p.is_injective())


def roots_of_unity_angles(n: int) -> np.ndarray:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return 2.0 * np.pi * np.arange(n) / n


def antipodal_pair_angles(base_angles) -> np.ndarray:
    """Interleave each base angle with its antipode: t1, t1+pi, t2, t2+pi, ..."""
    base = np.asarray(base_angles, dtype=float)
    out = np.empty(2 * base.size)
    out[0::2] = base
    out[1::2] = base + np.pi
    return out


def centered_circle_angles(n: int, rng: np.random.Generator) -> np.ndarray:
    """Random angle set whose circle points sum to zero.

    Even n: n/2 random antipodal pairs.  Odd n: one random equilateral triple
    plus (n-3)/2 antipodal pairs (a pure pairing cannot cover an odd count).
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if n % 2 == 0:
        return antipodal_pair_angles(rng.uniform(0.0, 2.0 * np.pi, n // 2))
    triple = rng.uniform(0.0, 2.0 * np.pi) + np.array([0.0, 2 * np.pi / 3, 4 * np.pi / 3])
    pairs = antipodal_pair_angles(rng.uniform(0.0, 2.0 * np.pi, (n - 3) // 2))
    return np.concatenate([triple, pairs])


def triangular_pyramid(apex_height: float) -> Placement:
    """Unit equilateral triangle at height 0, centered on the z-axis, apex at
    (0, 0, h).  The three apex edges have length sqrt(h^2 + 1/3)."""
    h = float(apex_height)
    if h < 0:
        raise ValueError(f"apex height must be >= 0, got {h}")
    r = 1.0 / math.sqrt(3.0)  # circumradius giving side length 1
    base_angles = np.pi / 2 + 2.0 * np.pi * np.arange(3) / 3
    pts = np.zeros((4, 3))
    pts[:3, 0] = r * np.cos(base_angles)
    pts[:3, 1] = r * np.sin(base_angles)
    pts[3, 2] = h
    return Placement(pts)


def replicate_placement(p: Placement, k: int) -> Placement:
    """k*n points with vertex j*n + i placed at p(i)."""
    if k < 1:
        raise ValueError(f"replication count must be >= 1, got {k}")
    return Placement(np.tile(p.points, (k, 1)))


def random_sphere_placement(n: int, d: int, seed: int, centered: bool = False) -> Placement:
    """n points uniform on the unit sphere in R^d, from the stream (seed, tag).

    With centered=True the points are drawn as antipodal pairs, so the sum is
    exactly zero while every norm stays exactly 1; this needs even n.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if centered and n % 2 != 0:
        raise ValueError(f"centered sampling needs even n, got {n}")
    rng = rng_stream(seed, f"sphere:{n}:{d}:{int(centered)}")
    if centered:
        half = _unit_rows(rng.standard_normal((n // 2, d)))
        pts = np.empty((n, d))
        pts[0::2] = half
        pts[1::2] = -half
        return Placement(pts)
    return Placement(_unit_rows(rng.standard_normal((n, d))))


def centered_sphere_points(n: int, d: int, rng: np.random.Generator) -> Placement:
    """Random unit-norm points with exactly zero sum, for any n >= 3.

    Even n uses antipodal pairs; odd n adds one equilateral triple inside a
    random 2-plane (three unit vectors summing to zero must be coplanar).
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    rows = []
    if n % 2 != 0:
        frame = np.linalg.qr(rng.standard_normal((d, 2)))[0]
        for t in rng.uniform(0.0, 2.0 * np.pi) + np.array([0.0, 2 * np.pi / 3, 4 * np.pi / 3]):
            rows.append(frame[:, 0] * np.cos(t) + frame[:, 1] * np.sin(t))
        rows = [r / np.linalg.norm(r) for r in rows]
    pairs = (n - len(rows)) // 2
    half = _unit_rows(rng.standard_normal((pairs, d)))
    for x in half:
        rows.extend([x, -x])
    return Placement(np.asarray(rows))


def _unit_rows(a: np.ndarray) -> np.ndarray:
    return a / np.linalg.norm(a, axis=1)[:, None]
