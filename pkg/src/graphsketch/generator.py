"""Iterative small-graph synthesis towards target subgraph counts.

Starting from a random graph with roughly the right number of edges, the
generator repeatedly picks a node u at random, evaluates for every other
node w how toggling the edge {u, w} would move all six subgraph counts,
and applies the toggle with the lowest resulting relative error. Toggles
are applied even when they increase the error (the search is not greedy),
and the run stops once the best error seen has not improved for
ceil(-n' * ln(epsilon)) consecutive iterations.

The per-node count changes are closed-form column expressions in the
adjacency matrix and degree vector, so one iteration costs two dense
matrix-vector products plus elementwise work. All six expressions are
integer-exact and are validated against toggle-and-recount in the tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .graph import Graph, erdos_renyi
from .scaling import TargetStats
from .stats import COUNT_KEYS, subgraph_counts

DEFAULT_EPSILON = 0.01
DEFAULT_N_PRIME = 80
DEFAULT_MAX_ITERATIONS = 1_000_000


@dataclass(frozen=True)
class GeneratorConfig:
    epsilon: float = DEFAULT_EPSILON
    n_prime: int = DEFAULT_N_PRIME
    seed: Optional[int] = None
    max_iterations: int = DEFAULT_MAX_ITERATIONS

    def __post_init__(self):
        if not (0.0 < self.epsilon < 1.0):
            raise ValueError("epsilon must lie strictly between 0 and 1")
        if self.n_prime < 2:
            raise ValueError("n_prime must be >= 2")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")


def patience(n_prime: int, epsilon: float) -> int:
    """Stopping window: iterations without a new best before giving up."""
    return math.ceil(-n_prime * math.log(epsilon))


@dataclass
class GenerationResult:
    graph: Graph                  # best-error snapshot
    error: float                  # error of that snapshot
    trace: list[tuple[int, float, float]]  # (iteration, error, best_error)
    final_graph: Graph            # state when the loop stopped
    final_error: float
    iterations: int
    hit_max_iterations: bool
    patience: int


# -- per-node count changes ---------------------------------------------------
#
# Each function returns a length-n integer vector whose entry w is the
# change in that count if the edge {u, w} were toggled. Entry w = u is
# meaningless and must be ignored by callers.


def delta_vectors(g: Graph, u: int) -> dict[str, np.ndarray]:
    """All six count-change vectors for toggles at node u, sharing work."""
    a_dense = g.dense_adjacency()
    col = a_dense[:, u]
    a = col.astype(np.int64)
    d = g.degrees
    du = int(d[u])

    d_edges = 1 - 2 * a
    d_wedges = d_edges * (d + du) + 2 * a
    d_claws = d_edges * (((d - a) * (d - 1 - a) + (du - a) * (du - 1 - a)) // 2)
    d_crosses = (
        (d - 1) * (d - 2) * (a * (3 - 2 * d) + d)
        + (du - 1) * (du - 2) * ((3 - 2 * du) * a + du)
    ) // 6
    walks2 = a_dense @ col
    d_triangles = np.rint(walks2).astype(np.int64) * d_edges
    walks3 = a_dense @ walks2
    d_squares = np.rint(walks3).astype(np.int64) * d_edges + a * (d + du - 1)
    return {
        "edges": d_edges,
        "wedges": d_wedges,
        "claws": d_claws,
        "crosses": d_crosses,
        "triangles": d_triangles,
        "squares": d_squares,
    }


def delta_edges(g: Graph, u: int) -> np.ndarray:
    return 1 - 2 * g.adjacency_column(u)


def delta_wedges(g: Graph, u: int) -> np.ndarray:
    return delta_vectors(g, u)["wedges"]


def delta_claws(g: Graph, u: int) -> np.ndarray:
    return delta_vectors(g, u)["claws"]


def delta_crosses(g: Graph, u: int) -> np.ndarray:
    return delta_vectors(g, u)["crosses"]


def delta_triangles(g: Graph, u: int) -> np.ndarray:
    return delta_vectors(g, u)["triangles"]


def delta_squares(g: Graph, u: int) -> np.ndarray:
    return delta_vectors(g, u)["squares"]


# -- objective ----------------------------------------------------------------


def relative_error(current, targets) -> float:
    """Sum of squared relative deviations over the six counts.

    Denominators are max(|target|, 1): a plain /target is undefined for
    zero targets (triangle-free inputs), and the guard turns those terms
    into absolute error.
    """
    cur = np.asarray(current, dtype=np.float64)
    tgt = np.asarray(targets, dtype=np.float64)
    guard = np.maximum(np.abs(tgt), 1.0)
    return float(np.sum(((cur - tgt) / guard) ** 2))


# -- main loop ----------------------------------------------------------------


def generate(targets: TargetStats, config: GeneratorConfig) -> GenerationResult:
    """Synthesise a graph whose six subgraph counts approach the targets.

    Deterministic given (targets, config). Unreachable targets do not
    fail: the best graph seen is returned together with its error.
    """
    if targets.n_prime != config.n_prime:
        raise ValueError(
            f"target size {targets.n_prime} != configured size {config.n_prime}"
        )
    n = config.n_prime
    rng = np.random.default_rng(config.seed)
    pairs = n * (n - 1) // 2
    p0 = min(max(targets.targets["edges"] / pairs, 0.0), 1.0)
    g = erdos_renyi(n, p0, rng)
    g.dense_adjacency()  # materialise once; kept in sync by toggles

    target_arr = targets.as_array()
    guard = np.maximum(np.abs(target_arr), 1.0)
    current = np.array(
        [subgraph_counts(g)[key] for key in COUNT_KEYS], dtype=np.int64
    )

    def error_of(counts: np.ndarray) -> float:
        return float(np.sum(((counts - target_arr) / guard) ** 2))

    best_error = error_of(current)
    best_graph = g.copy()
    best_counts = current.copy()
    stop_after = patience(n, config.epsilon)
    since_best = 0
    iteration = 0
    trace: list[tuple[int, float, float]] = [(0, best_error, best_error)]
    hit_max = False

    while True:
        if iteration >= config.max_iterations:
            hit_max = True
            break
        iteration += 1
        u = int(rng.integers(n))
        deltas = delta_vectors(g, u)
        trial = np.zeros(n, dtype=np.float64)
        for key, tgt, grd, cur in zip(COUNT_KEYS, target_arr, guard, current):
            trial += ((cur + deltas[key] - tgt) / grd) ** 2
        trial[u] = np.inf  # the self-pair entry is computed but never chosen
        v = int(np.argmin(trial))  # first minimum = smallest node index
        g.toggle_edge(u, v)
        for i, key in enumerate(COUNT_KEYS):
            current[i] += deltas[key][v]
        if __debug__ and iteration % 1000 == 0:
            fresh = subgraph_counts(g)
            assert [fresh[k] for k in COUNT_KEYS] == list(current)
        err = error_of(current)
        if err < best_error:
            best_error = err
            best_graph = g.copy()
            best_counts = current.copy()
            since_best = 0
        else:
            since_best += 1
        trace.append((iteration, err, best_error))
        if since_best >= stop_after:
            break

    result = GenerationResult(
        graph=best_graph,
        error=best_error,
        trace=trace,
        final_graph=g,
        final_error=error_of(current),
        iterations=iteration,
        hit_max_iterations=hit_max,
        patience=stop_after,
    )
    # belt-and-braces: the incremental counts must match a fresh recount
    assert list(best_counts) == [subgraph_counts(best_graph)[k] for k in COUNT_KEYS]
    return result


def trace_to_text(trace: list[tuple[int, float, float]]) -> str:
    """Line-oriented trace: iteration, error, best error (tab-separated)."""
    return "".join(f"{it}\t{err!r}\t{best!r}\n" for it, err, best in trace)
