"""Explicit eigenvector families of the edge-basis stiffness matrix.

Each family is a set of combinatorially defined edge vectors that are exact
eigenvectors for the canonical simplex / crosspolytope placements, with
deterministic index sets whose sizes equal the predicted multiplicities.  The
sufficient-condition checker verifies eigenvector candidates directly from the
entry rule, without an eigensolve.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .framework import Placement, edge_lengths, lower_stiffness_direct
from .graphs import Graph, TuranPartition, complete_graph, turan_graph

HYPOTHESIS_TOL = 1e-9


def eigen_residual(M: np.ndarray, vec: np.ndarray, eigenvalue: float) -> float:
    """Max-norm residual of the eigen relation M vec = eigenvalue vec."""
    return float(np.max(np.abs(M @ vec - eigenvalue * vec))) if vec.size else 0.0


# ---------------------------------------------------------------------------
# Eigenvectors of K_n frameworks


def weighted_length_vector(p: Placement, f) -> np.ndarray:
    """Edge vector (f_u + f_v) * length(u, v) over the complete graph on p.

    For unit-norm, zero-sum placements with image size >= 3 and any zero-sum
    weight vector f, this is an eigenvector of the edge-basis stiffness matrix
    with eigenvalue n/2.
    """
    f = np.asarray(f, dtype=float)
    if f.shape != (p.n,):
        raise ValueError(f"weights must have shape ({p.n},), got {f.shape}")
    if abs(float(f.sum())) > 1e-12:
        raise ValueError(f"weights must sum to zero, got {f.sum():.3e}")
    _require_spherical(p, min_image=3)
    g = complete_graph(p.n)
    lengths = edge_lengths(g, p)
    uv = np.asarray(g.edges)
    return (f[uv[:, 0]] + f[uv[:, 1]]) * lengths


def edge_length_eigenvector(p: Placement) -> np.ndarray:
    """The placed edge lengths of K_n: an eigenvector of the edge-basis
    stiffness matrix with eigenvalue n, for every nonconstant placement."""
    if p.is_constant():
        raise ValueError("placement must not be constant")
    return edge_lengths(complete_graph(p.n), p)


def _require_spherical(p: Placement, min_image: int) -> None:
    norms = np.linalg.norm(p.points, axis=1)
    if np.max(np.abs(norms - 1.0)) > HYPOTHESIS_TOL:
        raise ValueError("placement must have unit-norm points")
    if np.linalg.norm(p.points.sum(axis=0)) > HYPOTHESIS_TOL:
        raise ValueError("placement must sum to zero")
    if p.image_size() < min_image:
        raise ValueError(f"placement image must have at least {min_image} distinct points")


# ---------------------------------------------------------------------------
# Sufficient conditions for an edge vector to be an eigenvector


@dataclass(frozen=True)
class EigenvectorConditionReport:
    """Per-condition outcome of the eigenvector sufficiency check."""

    off_support_cosines_ok: bool
    vertex_sums_ok: bool
    eigen_relation_ok: bool
    max_cosine_spread: float
    max_vertex_sum: float
    max_eigen_residual: float

    @property
    def all_ok(self) -> bool:
        return self.off_support_cosines_ok and self.vertex_sums_ok and self.eigen_relation_ok


def eigenvector_condition_check(
    g: Graph,
    p: Placement,
    vec: np.ndarray,
    eigenvalue: float,
    tol: float = 1e-9,
) -> EigenvectorConditionReport:
    """Check the three conditions under which an edge vector with support S is
    an eigenvector of the edge-basis stiffness matrix:

    1. every off-support edge sees equal cosines toward all its S-neighbors,
    2. the vector sums to zero around every vertex,
    3. on S, the cosine-weighted neighbor sum equals (eigenvalue - 2) * vec.

    Requires every edge to have distinct endpoint images.
    """
    vec = np.asarray(vec, dtype=float)
    if vec.shape != (g.m,):
        raise ValueError(f"vector must have shape ({g.m},), got {vec.shape}")
    if np.any(edge_lengths(g, p) == 0.0):
        raise ValueError("every edge must have distinct endpoint images")
    C = lower_stiffness_direct(g, p)
    B = np.zeros((g.n, g.m))
    for k, (u, v) in enumerate(g.edges):
        B[u, k] = 1.0
        B[v, k] = 1.0
    shared = B.T @ B
    adjacent = shared == 1.0

    support_tol = 1e-12 * max(1.0, float(np.max(np.abs(vec))) if vec.size else 0.0)
    supp = np.abs(vec) > support_tol

    max_spread = 0.0
    for e in np.flatnonzero(~supp):
        cosines = C[e, supp & adjacent[e]]
        if cosines.size >= 2:
            max_spread = max(max_spread, float(cosines.max() - cosines.min()))

    vertex_sums = B @ vec
    max_vertex_sum = float(np.max(np.abs(vertex_sums))) if vertex_sums.size else 0.0

    # diagonal of C is exactly 2 here, so (C vec - eigenvalue vec) on the
    # support equals the neighbor sum minus (eigenvalue - 2) vec
    resid = C @ vec - eigenvalue * vec
    max_resid = float(np.max(np.abs(resid[supp]))) if supp.any() else 0.0

    return EigenvectorConditionReport(
        off_support_cosines_ok=max_spread <= tol,
        vertex_sums_ok=max_vertex_sum <= tol,
        eigen_relation_ok=max_resid <= tol,
        max_cosine_spread=max_spread,
        max_vertex_sum=max_vertex_sum,
        max_eigen_residual=max_resid,
    )


# ---------------------------------------------------------------------------
# Combinatorial family vectors over a balanced partition


def part_quad_vector(g: Graph, partition: TuranPartition, quad: tuple[int, int, int, int]) -> np.ndarray:
    """+1 on edges between parts (q1, q2) and (q3, q4), -1 on (q2, q3) and (q1, q4)."""
    q1, q2, q3, q4 = quad
    if len({q1, q2, q3, q4}) != 4:
        raise ValueError(f"quad indices must be distinct, got {quad}")
    part_of = partition.part_of
    vec = np.zeros(g.m)
    plus = {frozenset((q1, q2)), frozenset((q3, q4))}
    minus = {frozenset((q2, q3)), frozenset((q1, q4))}
    for k, (u, v) in enumerate(g.edges):
        key = frozenset((part_of[u], part_of[v]))
        if key in plus:
            vec[k] = 1.0
        elif key in minus:
            vec[k] = -1.0
    return vec


def star_difference_vector(
    g: Graph, partition: TuranPartition, u: int, v: int, j: int, k: int
) -> np.ndarray:
    """Difference of the u- and v-stars into part j, reversed into part k.

    u and v must lie in a common part distinct from parts j != k.
    """
    part_of = partition.part_of
    i = part_of[u]
    if part_of[v] != i or u == v:
        raise ValueError("u and v must be distinct vertices of a common part")
    if j == k or i in (j, k):
        raise ValueError("parts j and k must be distinct and different from the part of u, v")
    vec = np.zeros(g.m)
    for w in partition.parts[j]:
        vec[g.index_of(u, w)] += 1.0
        vec[g.index_of(v, w)] -= 1.0
    for w in partition.parts[k]:
        vec[g.index_of(v, w)] += 1.0
        vec[g.index_of(u, w)] -= 1.0
    return vec


@dataclass(frozen=True, eq=False)
class EigenvectorFamily:
    """Stacked family vectors (rows) sharing one eigenvalue, with their labels."""

    eigenvalue: float
    vectors: np.ndarray
    labels: tuple

    @property
    def count(self) -> int:
        return self.vectors.shape[0]


@dataclass(frozen=True, eq=False)
class TuranSimplexFamilies:
    """Eigenvector families of the balanced (d+1)-partite simplex framework."""

    graph: Graph
    partition: TuranPartition
    quads: EigenvectorFamily           # eigenvalue n/(d+1), count (d-2)(d+1)/2
    star_differences: EigenvectorFamily  # eigenvalue n/(2(d+1)), count (n-d-1)(d-1)
    note: str | None = None


def turan_simplex_families(n: int, d: int) -> TuranSimplexFamilies:
    """The deterministic index sets realizing the two nontrivial multiplicities
    of the simplex placement of the balanced (d+1)-partite graph."""
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    if n < d + 1 or n % (d + 1) != 0:
        raise ValueError(f"need n >= d+1 with (d+1) | n, got n={n}, d={d}")
    g, partition = turan_graph(n, d + 1)
    r = d + 1

    note = None
    quad_labels: list[tuple[int, int, int, int]] = []
    if d >= 3:
        for k in range(3, r):
            quad_labels.append((0, 1, 2, k))
            quad_labels.append((0, 2, 1, k))
        for j in range(3, r):
            for k in range(j + 1, r):
                quad_labels.append((1, 2, j, k))
    else:
        note = "quad vectors need four distinct parts, so the family is empty for d < 3"
    quad_vecs = (
        np.array([part_quad_vector(g, partition, q) for q in quad_labels])
        if quad_labels
        else np.zeros((0, g.m))
    )

    star_labels: list[tuple[int, int, int, int]] = []
    for i in range(r):
        anchor = partition.parts[i][0]
        j_i = 0 if i != 0 else 1
        for v in partition.parts[i][1:]:
            for k in range(r):
                if k not in (i, j_i):
                    star_labels.append((anchor, v, j_i, k))
    star_vecs = (
        np.array([star_difference_vector(g, partition, *lab) for lab in star_labels])
        if star_labels
        else np.zeros((0, g.m))
    )

    return TuranSimplexFamilies(
        graph=g,
        partition=partition,
        quads=EigenvectorFamily(n / (d + 1), quad_vecs, tuple(quad_labels)),
        star_differences=EigenvectorFamily(n / (2 * (d + 1)), star_vecs, tuple(star_labels)),
        note=note,
    )


# ---------------------------------------------------------------------------
# Crosspolytope families: parts are (axis, sign) blocks, part index 2*axis + (sign < 0)


def _axis_parts(axis: int) -> tuple[int, int]:
    return 2 * axis, 2 * axis + 1


def axis_quad_vector(g: Graph, partition: TuranPartition, i: int, j: int) -> np.ndarray:
    """+1 between equal-sign blocks of axes i and j, -1 between opposite-sign blocks."""
    ip, im = _axis_parts(i)
    jp, jm = _axis_parts(j)
    return part_quad_vector(g, partition, (ip, jp, im, jm))


def block_sign_vector(g: Graph, partition: TuranPartition, i: int, j: int) -> np.ndarray:
    """+1 on edges from axis i into the positive block of axis j, -1 into the negative."""
    if i == j:
        raise ValueError("axes must be distinct")
    part_of = partition.part_of
    ip, im = _axis_parts(i)
    jp, jm = _axis_parts(j)
    vec = np.zeros(g.m)
    for k, (u, v) in enumerate(g.edges):
        a, b = part_of[u], part_of[v]
        if a in (ip, im) and b in (jp, jm):
            vec[k] = 1.0 if b == jp else -1.0
        elif b in (ip, im) and a in (jp, jm):
            vec[k] = 1.0 if a == jp else -1.0
    return vec


def sign_split_vector(g: Graph, partition: TuranPartition, i: int, j: int, k: int) -> np.ndarray:
    """Difference of two block sign vectors into axis j, sourced at axes i and k."""
    if len({i, j, k}) != 3:
        raise ValueError(f"axes must be distinct, got {(i, j, k)}")
    return block_sign_vector(g, partition, i, j) - block_sign_vector(g, partition, k, j)


def vertex_shift_vector(g: Graph, partition: TuranPartition, u: int, v: int, j: int) -> np.ndarray:
    """Star difference of two same-block vertices into axis j, sign-split by block.

    +1 on u-edges and -1 on v-edges into the positive block of axis j, reversed
    into the negative block.
    """
    part_of = partition.part_of
    if part_of[u] != part_of[v] or u == v:
        raise ValueError("u and v must be distinct vertices of a common block")
    if part_of[u] // 2 == j:
        raise ValueError("axis j must differ from the axis of u, v")
    jp, jm = _axis_parts(j)
    vec = np.zeros(g.m)
    for w in partition.parts[jp]:
        vec[g.index_of(u, w)] += 1.0
        vec[g.index_of(v, w)] -= 1.0
    for w in partition.parts[jm]:
        vec[g.index_of(u, w)] -= 1.0
        vec[g.index_of(v, w)] += 1.0
    return vec


@dataclass(frozen=True, eq=False)
class CrosspolytopeFamilies:
    """Eigenvector families of the balanced 2d-partite crosspolytope framework."""

    graph: Graph
    partition: TuranPartition
    axis_quads: EigenvectorFamily     # eigenvalue n/d, count d(d-1)/2
    sign_splits: EigenvectorFamily    # eigenvalue n/(2d), count d(d-2)
    vertex_shifts: EigenvectorFamily  # eigenvalue n/(2d), count 2d(d-1)(n/(2d)-1)


def crosspolytope_families(n: int, d: int) -> CrosspolytopeFamilies:
    """The deterministic index sets realizing the two nontrivial multiplicities
    of the crosspolytope placement; sign splits and vertex shifts are jointly
    independent and share the eigenvalue n/(2d)."""
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    if n < 2 * d or n % (2 * d) != 0:
        raise ValueError(f"need n >= 2d with 2d | n, got n={n}, d={d}")
    g, partition = turan_graph(n, 2 * d)

    quad_labels = [(i, j) for i in range(d) for j in range(i + 1, d)]
    quad_vecs = (
        np.array([axis_quad_vector(g, partition, i, j) for i, j in quad_labels])
        if quad_labels
        else np.zeros((0, g.m))
    )

    split_labels = []
    for j in range(d):
        i_j = 0 if j != 0 else 1
        for k in range(d):
            if k not in (j, i_j):
                split_labels.append((i_j, j, k))
    split_vecs = (
        np.array([sign_split_vector(g, partition, *lab) for lab in split_labels])
        if split_labels
        else np.zeros((0, g.m))
    )

    shift_labels = []
    for part, members in enumerate(partition.parts):
        axis = part // 2
        anchor = members[0]
        for j in range(d):
            if j != axis:
                for v in members[1:]:
                    shift_labels.append((anchor, v, j))
    shift_vecs = (
        np.array([vertex_shift_vector(g, partition, *lab) for lab in shift_labels])
        if shift_labels
        else np.zeros((0, g.m))
    )

    return CrosspolytopeFamilies(
        graph=g,
        partition=partition,
        axis_quads=EigenvectorFamily(n / d, quad_vecs, tuple(quad_labels)),
        sign_splits=EigenvectorFamily(n / (2 * d), split_vecs, tuple(split_labels)),
        vertex_shifts=EigenvectorFamily(n / (2 * d), shift_vecs, tuple(shift_labels)),
    )
