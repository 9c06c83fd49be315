"""Sampling baselines: summarise a graph by keeping a random piece of it.

Two samplers are provided. Uniform vertex sampling keeps a random node
set plus every edge touching it (so the drawn picture includes the
sampled nodes' neighbourhoods); node sampling keeps the induced subgraph
on the random node set only. Isolated nodes that survive sampling are
kept, since they carry degree information.
"""

from __future__ import annotations

import math

import numpy as np

from .graph import Graph, induced_subgraph


def _choose_nodes(g: Graph, k: int, seed) -> np.ndarray:
    if not (1 <= k <= g.n):
        raise ValueError(f"sample size k={k} out of range 1..{g.n}")
    rng = np.random.default_rng(seed)
    return np.sort(rng.choice(g.n, size=k, replace=False))


def uniform_vertex_sample(g: Graph, k: int, seed) -> Graph:
    """k random nodes plus all edges touching them (and the reached endpoints)."""
    chosen = _choose_nodes(g, k, seed)
    chosen_set = set(int(u) for u in chosen)
    keep = set(chosen_set)
    for u in chosen_set:
        keep.update(g.neighbors(u))
    order = sorted(keep)
    index = {u: i for i, u in enumerate(order)}
    sample = Graph(len(order), labels=[g.label_of(u) for u in order])
    for u in chosen_set:
        for w in g.neighbors(u):
            sample.add_edge(index[u], index[w])
    return sample


def node_sample(g: Graph, k: int, seed) -> Graph:
    """Induced subgraph on k uniformly chosen nodes.

    An induced sample of G(n, p) is itself G(k, p), so per-pair densities
    carry over in expectation; count statistics shrink with the number of
    node tuples, not linearly.
    """
    chosen = _choose_nodes(g, k, seed)
    return induced_subgraph(g, [int(u) for u in chosen])


def expected_reach(g: Graph, k: int) -> float:
    """E[#nodes in a uniform_vertex_sample of size k].

    A node lands in the output unless the k chosen nodes all avoid its
    closed neighbourhood: P(reach v) = 1 - C(n-1-d(v), k) / C(n, k),
    evaluated via log-gamma to stay stable at large n.
    """
    n = g.n
    log_cnk = math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)
    total = 0.0
    for d in g.degrees:
        avail = n - 1 - int(d)
        if avail < k:
            total += 1.0
            continue
        log_avoid = (
            math.lgamma(avail + 1)
            - math.lgamma(k + 1)
            - math.lgamma(avail - k + 1)
            - log_cnk
        )
        total += 1.0 - math.exp(log_avoid)
    return total


def size_for_target(g: Graph, n_target: int, method: str) -> int:
    """Pick k so the sampled graph has about n_target nodes.

    Node sampling hits the target exactly; for uniform vertex sampling the
    output also contains reached neighbours, so k is found by bisection on
    the expected reach.
    """
    if method == "sn":
        return min(n_target, g.n)
    if method != "su":
        raise ValueError(f"unknown sampling method {method!r}")
    if n_target >= g.n:
        return g.n
    if expected_reach(g, 1) >= n_target:
        return 1
    lo, hi = 1, g.n  # expected_reach is monotone in k
    while lo < hi:
        mid = (lo + hi) // 2
        if expected_reach(g, mid) < n_target:
            lo = mid + 1
        else:
            hi = mid
    return lo
