import numpy as np
import pytest

from graphsketch import GeneratorConfig, TargetStats, erdos_renyi, generate, relative_error
from graphsketch.generator import (
    delta_claws,
    delta_crosses,
    delta_edges,
    delta_squares,
    delta_triangles,
    delta_vectors,
    delta_wedges,
    patience,
)
from graphsketch.stats import COUNT_KEYS, subgraph_counts

from helpers import cycle, path, random_graph, star, triangle


def exact_targets(g):
    return TargetStats(
        n_prime=g.n,
        targets={k: float(v) for k, v in subgraph_counts(g).items()},
        method="si",
    )


class TestDeltaVectors:
    def test_edges_on_triangle(self):
        d = delta_edges(triangle(), 0)
        assert (d[1], d[2]) == (-1, -1)

    def test_edges_on_empty_graph(self):
        from graphsketch import Graph

        d = delta_edges(Graph(3), 0)
        assert (d[1], d[2]) == (1, 1)

    def test_wedges_closing_a_path(self):
        # adding 0-2 to the path 0-1-2 adds d(0)+d(2) = 2 wedges
        assert delta_wedges(path(3), 0)[2] == 2

    def test_wedges_removing_the_only_edge(self):
        from graphsketch import Graph

        g = Graph(2)
        g.add_edge(0, 1)
        assert delta_wedges(g, 0)[1] == 0

    def test_claws_completing_a_star(self):
        # 2-star plus an isolated node: adding the third spoke makes one claw
        from graphsketch import Graph

        g = Graph(4)
        g.add_edge(0, 1)
        g.add_edge(0, 2)
        assert delta_claws(g, 0)[3] == 1

    def test_claws_between_isolated_nodes(self):
        from graphsketch import Graph

        assert delta_claws(Graph(4), 0)[1] == 0

    def test_crosses_completing_a_star(self):
        # 3-star plus an isolated node: adding the fourth spoke makes one cross
        from graphsketch import Graph

        g = Graph(5)
        for leaf in (1, 2, 3):
            g.add_edge(0, leaf)
        assert delta_crosses(g, 0)[4] == 1

    def test_crosses_removing_a_spoke(self):
        assert delta_crosses(star(4), 0)[1] == -1

    def test_triangles_on_path_and_triangle(self):
        assert delta_triangles(path(3), 0)[2] == 1
        assert delta_triangles(triangle(), 0)[1] == -1

    def test_squares_closing_and_opening(self):
        assert delta_squares(path(4), 0)[3] == 1
        assert delta_squares(cycle(4), 0)[1] == -1

    def test_all_deltas_match_toggle_and_recount(self):
        rng = np.random.default_rng(7)
        for _ in range(120):
            g = random_graph(rng, n_max=6)
            for u in range(g.n):
                deltas = delta_vectors(g, u)
                before = subgraph_counts(g)
                for w in range(g.n):
                    if w == u:
                        continue
                    g.toggle_edge(u, w)
                    after = subgraph_counts(g)
                    g.toggle_edge(u, w)
                    for key in COUNT_KEYS:
                        assert deltas[key][w] == after[key] - before[key], (
                            key,
                            sorted(g.edges()),
                            (u, w),
                        )


class TestErrorFunction:
    def test_zero_at_target(self):
        assert relative_error([1, 2, 3, 4, 5, 6], [1, 2, 3, 4, 5, 6]) == 0.0

    def test_full_relative_miss_contributes_one(self):
        assert relative_error([2, 5], [1, 5]) == 1.0
        assert relative_error([20, 5], [10, 5]) == 1.0

    def test_zero_target_guard(self):
        # denominator max(|x|, 1): a miss of 2 against target 0 costs 4
        assert relative_error([2.0], [0.0]) == 4.0


class TestPatience:
    def test_default_constants(self):
        assert patience(80, 0.01) == 369

    def test_ceil_applied(self):
        assert patience(10, 0.01) == 47  # -10 ln 0.01 = 46.05...


class TestGenerate:
    def test_reaches_exact_targets_of_small_graph(self):
        ref = erdos_renyi(30, 0.15, 5)
        res = generate(exact_targets(ref), GeneratorConfig(n_prime=30, seed=1))
        assert res.error <= 0.05

    def test_empty_targets_reach_zero_error(self):
        targets = TargetStats(n_prime=12, targets={k: 0.0 for k in COUNT_KEYS})
        res = generate(targets, GeneratorConfig(n_prime=12, seed=3))
        assert res.error == 0.0
        assert res.graph.m == 0

    def test_deterministic(self):
        ref = erdos_renyi(25, 0.2, 9)
        cfg = GeneratorConfig(n_prime=25, seed=42)
        r1 = generate(exact_targets(ref), cfg)
        r2 = generate(exact_targets(ref), cfg)
        assert r1.trace == r2.trace
        assert sorted(r1.graph.edges()) == sorted(r2.graph.edges())

    def test_best_error_non_increasing_and_bounds_error(self):
        ref = erdos_renyi(20, 0.3, 17)
        res = generate(exact_targets(ref), GeneratorConfig(n_prime=20, seed=2))
        best_seen = np.inf
        for _, err, best in res.trace:
            best_seen = min(best_seen, err)
            assert best == best_seen
            assert best <= err

    def test_returned_graph_counts_match_recount(self):
        ref = erdos_renyi(20, 0.25, 3)
        res = generate(exact_targets(ref), GeneratorConfig(n_prime=20, seed=8))
        counts = subgraph_counts(res.graph)
        assert relative_error(
            [counts[k] for k in COUNT_KEYS], exact_targets(ref).as_array()
        ) == pytest.approx(res.error)

    def test_max_iterations_flagged(self):
        ref = erdos_renyi(20, 0.25, 3)
        res = generate(
            exact_targets(ref), GeneratorConfig(n_prime=20, seed=8, max_iterations=5)
        )
        assert res.hit_max_iterations
        assert res.iterations == 5

    def test_size_mismatch_rejected(self):
        targets = TargetStats(n_prime=10, targets={k: 1.0 for k in COUNT_KEYS})
        with pytest.raises(ValueError):
            generate(targets, GeneratorConfig(n_prime=12, seed=0))

    def test_overfull_edge_target_clamps_probability(self):
        # more edges requested than pairs exist: initial p clamps to 1
        targets = TargetStats(
            n_prime=5,
            targets={"edges": 100.0, "wedges": 0.0, "claws": 0.0, "crosses": 0.0,
                     "triangles": 0.0, "squares": 0.0},
        )
        res = generate(targets, GeneratorConfig(n_prime=5, seed=1))
        assert res.iterations >= 1  # best effort, no crash


class TestConfig:
    def test_epsilon_bounds(self):
        with pytest.raises(ValueError):
            GeneratorConfig(epsilon=0.0)
        with pytest.raises(ValueError):
            GeneratorConfig(epsilon=1.0)

    def test_n_prime_bounds(self):
        with pytest.raises(ValueError):
            GeneratorConfig(n_prime=1)
