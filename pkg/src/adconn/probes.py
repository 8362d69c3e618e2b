"""Numerical probes for the open conjectures.

Each probe samples instances, evaluates both sides of the conjectured
statement, and reports per-instance margins together with reproduction data
for any counterexample candidate.  Probes never assert truth; they only
measure.
"""

from __future__ import annotations

import math

import networkx as nx

from .framework import Placement
from .graphs import complete_graph, make_graph
from .optimize import OptimizerConfig, gap_ascent
from .placements import (
    centered_sphere_points,
    crosspolytope_placement,
    regular_simplex,
    replicate_placement,
    roots_of_unity_angles,
    unit_circle_placement,
)
from .seeding import rng_stream
from .spectral import spectral_gap, stiffness_spectrum
from .bounds import top_eigenvalue_sum_check

PROBE_TAGS = (
    "spherical-second-eig",
    "top-n-sum",
    "kn-upper",
    "regular-2d",
    "repeated-points",
)


def conjecture_probe(name: str, params: dict | None = None, seed: int = 0) -> dict:
    """Run the named conjecture sweep; see PROBE_TAGS for the valid names."""
    params = dict(params or {})
    if name == "spherical-second-eig":
        return _probe_spherical_second_eig(params, seed)
    if name == "top-n-sum":
        return _probe_top_n_sum(params, seed)
    if name == "kn-upper":
        return _probe_kn_upper(params, seed)
    if name == "regular-2d":
        return _probe_regular_2d(params, seed)
    if name == "repeated-points":
        return _probe_repeated_points(params, seed)
    raise ValueError(f"unknown conjecture tag {name!r}; valid tags: {', '.join(PROBE_TAGS)}")


def _record(name: str, params: dict, seed: int, instances: list, summary: dict, candidates: list) -> dict:
    return {
        "name": name,
        "params": params,
        "seed": seed,
        "instances": instances,
        "summary": summary,
        "counterexample_candidates": candidates,
    }


def _probe_spherical_second_eig(params: dict, seed: int) -> dict:
    """Second-largest stiffness eigenvalue of K_n at centered spherical
    placements: conjectured to be n/2 with multiplicity exactly n-1 (the n/2
    cluster is guaranteed to have multiplicity at least n-1)."""
    n = int(params.get("n", 8))
    d = int(params.get("d", 3))
    samples = int(params.get("samples", 50))
    g = complete_graph(n)
    instances, candidates = [], []
    for s in range(samples):
        rng = rng_stream(seed, f"spherical:{n}:{d}:{s}")
        p = centered_sphere_points(n, d, rng)
        spectrum = stiffness_spectrum(g, p)
        second_value, second_mult = spectrum.clusters[-2]
        half_mult = 0
        for value, mult in spectrum.clusters:
            if abs(value - n / 2) <= 1e-8:
                half_mult = mult
        inst = {
            "sample": s,
            "second_largest_value": second_value,
            "second_largest_multiplicity": second_mult,
            "half_n_cluster_multiplicity": half_mult,
            "margin": second_value - n / 2,
        }
        instances.append(inst)
        if abs(inst["margin"]) > 1e-8 or second_mult != n - 1:
            candidates.append(inst)
    margins = [i["margin"] for i in instances]
    summary = {
        "expected_value": n / 2,
        "expected_multiplicity": n - 1,
        "min_margin": min(margins),
        "max_margin": max(margins),
        "min_half_n_multiplicity": min(i["half_n_cluster_multiplicity"] for i in instances),
    }
    return _record("spherical-second-eig", {"n": n, "d": d, "samples": samples}, seed, instances, summary, candidates)


def _injective_canonical_instances(n: int, d: int) -> list[tuple[str, Placement]]:
    out = []
    if n == d + 1:
        out.append(("regular-simplex", regular_simplex(d)))
    if d == 2 and n >= 3:
        out.append(("roots-of-unity", unit_circle_placement(roots_of_unity_angles(n)).placement))
    if n == 2 * d:
        out.append(("crosspolytope", crosspolytope_placement(n, d)))
    return out


def _probe_top_n_sum(params: dict, seed: int) -> dict:
    """Sum of the n largest stiffness eigenvalues of K_n at injective
    placements, against the conjectured floor n(n+1)/2."""
    ns = [int(x) for x in params.get("ns", range(3, 11))]
    ds = [int(x) for x in params.get("ds", range(2, 5))]
    samples = int(params.get("samples", 20))
    instances, candidates = [], []
    for n in ns:
        for d in ds:
            pool = _injective_canonical_instances(n, d)
            for s in range(samples):
                rng = rng_stream(seed, f"topsum:{n}:{d}:{s}")
                pool.append((f"random-{s}", Placement(rng.standard_normal((n, d)))))
            for label, p in pool:
                check = top_eigenvalue_sum_check(p)
                bound = n * (n + 1) / 2.0
                inst = {
                    "n": n,
                    "d": d,
                    "instance": label,
                    "top_sum": check.total,
                    "conjectured_bound": bound,
                    "margin": check.total - bound,
                }
                instances.append(inst)
                if inst["margin"] < -1e-9:
                    candidates.append(inst)
    worst = min(instances, key=lambda i: i["margin"])
    summary = {
        "min_margin": worst["margin"],
        "min_margin_instance": {k: worst[k] for k in ("n", "d", "instance")},
        "max_margin": max(i["margin"] for i in instances),
        "equality_hits": [
            {k: i[k] for k in ("n", "d", "instance")}
            for i in instances
            if abs(i["margin"]) <= 1e-9
        ],
    }
    return _record(
        "top-n-sum", {"ns": ns, "ds": ds, "samples": samples}, seed, instances, summary, candidates
    )


def _probe_kn_upper(params: dict, seed: int) -> dict:
    """Best optimizer gap for K_n in R^d against the conjectured ceiling n/(2d)."""
    n = int(params.get("n", 12))
    d = int(params.get("d", 3))
    restarts = int(params.get("restarts", 8))
    config = OptimizerConfig(restarts=restarts, seed=seed)
    result = gap_ascent(complete_graph(n), d, config)
    ceiling = n / (2 * d)
    inst = {
        "n": n,
        "d": d,
        "best_gap": result.best_gap,
        "conjectured_ceiling": ceiling,
        "margin": ceiling - result.best_gap,
        "best_restart": result.best_restart,
    }
    summary = {"min_margin": inst["margin"], "max_margin": inst["margin"]}
    candidates = [inst] if inst["margin"] < -1e-9 else []
    return _record(
        "kn-upper", {"n": n, "d": d, "restarts": restarts}, seed, [inst], summary, candidates
    )


def _probe_regular_2d(params: dict, seed: int) -> dict:
    """Best optimizer gaps of random 2d-regular graphs; the conjecture is that
    the achievable gap vanishes as the vertex count grows."""
    d = int(params.get("d", 2))
    ns = [int(x) for x in params.get("ns", (8, 12, 16))]
    samples = int(params.get("samples", 3))
    restarts = int(params.get("restarts", 4))
    instances = []
    for n in ns:
        for s in range(samples):
            graph_seed = int(rng_stream(seed, f"regular:{n}:{s}").integers(2**31))
            nxg = nx.random_regular_graph(2 * d, n, seed=graph_seed)
            g = make_graph(n, nxg.edges())
            result = gap_ascent(g, d, OptimizerConfig(restarts=restarts, seed=seed))
            instances.append({"n": n, "sample": s, "graph_seed": graph_seed, "best_gap": result.best_gap})
    summary = {
        "max_gap_by_n": {str(n): max(i["best_gap"] for i in instances if i["n"] == n) for n in ns},
    }
    return _record(
        "regular-2d",
        {"d": d, "ns": ns, "samples": samples, "restarts": restarts},
        seed,
        instances,
        summary,
        [],
    )


def _probe_repeated_points(params: dict, seed: int) -> dict:
    """Gap of K_{kn} with k vertices per image point of a base injective
    placement, against (k/2) times the k=2 gap."""
    n = int(params.get("n", 4))
    d = int(params.get("d", 3))
    ks = [int(x) for x in params.get("ks", (2, 3, 4))]
    base_seed = int(params.get("base_seed", seed))
    rng = rng_stream(base_seed, f"repeated-base:{n}:{d}")
    base = Placement(rng.standard_normal((n, d)))
    gap2 = spectral_gap(complete_graph(2 * n), replicate_placement(base, 2))
    instances, candidates = [], []
    for k in ks:
        lhs = spectral_gap(complete_graph(k * n), replicate_placement(base, k))
        rhs = (k / 2.0) * gap2
        inst = {
            "k": k,
            "gap_repeated": lhs,
            "scaled_k2_gap": rhs,
            "ratio": lhs / rhs if rhs != 0 else math.inf,
            "margin": lhs - rhs,
        }
        instances.append(inst)
        if k >= 2 and abs(inst["margin"]) > 1e-8 * max(1.0, abs(rhs)):
            candidates.append(inst)
    summary = {
        "min_margin": min(i["margin"] for i in instances),
        "max_margin": max(i["margin"] for i in instances),
    }
    return _record(
        "repeated-points",
        {"n": n, "d": d, "ks": ks, "base_seed": base_seed},
        seed,
        instances,
        summary,
        candidates,
    )
