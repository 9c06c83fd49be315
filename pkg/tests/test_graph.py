import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphsketch import EdgeListError, Graph, erdos_renyi, from_edge_list, largest_component

from helpers import complete, triangle


class TestFromEdgeList:
    def test_triangle(self):
        g = from_edge_list("a b\nb c\nc a")
        assert (g.n, g.m) == (3, 3)

    def test_duplicates_and_loops_collapse(self):
        g = from_edge_list("a b\na b\na a")
        assert (g.n, g.m) == (2, 1)

    def test_trailing_columns_ignored(self):
        g = from_edge_list("1 2 1\n2 3 1")
        assert (g.n, g.m) == (3, 2)
        assert sorted(g.edges()) == [(0, 1), (1, 2)]

    def test_comments_skipped(self):
        g = from_edge_list("% a comment\n# another\na b\n\nb c")
        assert (g.n, g.m) == (3, 2)

    def test_labels_first_appearance_order(self):
        g = from_edge_list("x y\ny z")
        assert g.labels == ["x", "y", "z"]
        assert g.label_of(2) == "z"

    def test_single_token_line_reports_line_number(self):
        with pytest.raises(EdgeListError, match="line 2"):
            from_edge_list("a b\nc\nd e")

    def test_empty_input_fails(self):
        with pytest.raises(EdgeListError):
            from_edge_list("")
        with pytest.raises(EdgeListError):
            from_edge_list("% only a comment\n")


class TestToggle:
    def test_removal(self):
        g = triangle()
        g.toggle_edge(0, 1)
        assert g.m == 2
        assert not g.has_edge(0, 1)

    def test_addition(self):
        g = Graph(2)
        g.toggle_edge(0, 1)
        assert g.m == 1
        assert list(g.degrees) == [1, 1]

    def test_involution(self):
        g = triangle()
        before = sorted(g.edges())
        g.toggle_edge(0, 2)
        g.toggle_edge(0, 2)
        assert sorted(g.edges()) == before

    def test_loop_rejected(self):
        g = triangle()
        with pytest.raises(ValueError):
            g.toggle_edge(1, 1)

    def test_out_of_range_rejected(self):
        g = triangle()
        with pytest.raises(ValueError):
            g.toggle_edge(0, 3)

    def test_dense_cache_stays_in_sync(self):
        g = triangle()
        dense = g.dense_adjacency()
        g.toggle_edge(0, 1)
        assert dense[0, 1] == 0.0 and dense[1, 0] == 0.0
        g.toggle_edge(0, 1)
        assert dense[0, 1] == 1.0

    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 10_000), st.integers(2, 9), st.integers(1, 40))
    def test_degrees_match_recount_after_toggles(self, seed, n, steps):
        rng = np.random.default_rng(seed)
        g = erdos_renyi(n, 0.4, rng)
        for _ in range(steps):
            u, w = rng.choice(n, size=2, replace=False)
            g.toggle_edge(int(u), int(w))
        assert list(g.degrees) == list(g.recomputed_degrees())
        assert g.m == sum(g.degrees) // 2

    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 10_000), st.integers(2, 9))
    def test_toggle_twice_is_identity(self, seed, n):
        rng = np.random.default_rng(seed)
        g = erdos_renyi(n, 0.5, rng)
        before = sorted(g.edges())
        u, w = rng.choice(n, size=2, replace=False)
        g.toggle_edge(int(u), int(w))
        g.toggle_edge(int(u), int(w))
        assert sorted(g.edges()) == before


class TestErdosRenyi:
    def test_p_zero_empty(self):
        assert erdos_renyi(5, 0.0, 1).m == 0

    def test_p_one_complete(self):
        g = erdos_renyi(5, 1.0, 1)
        assert g.m == 10

    def test_bad_p_rejected(self):
        with pytest.raises(ValueError):
            erdos_renyi(5, 1.5, 1)

    def test_deterministic_given_seed(self):
        a = erdos_renyi(30, 0.2, 77)
        b = erdos_renyi(30, 0.2, 77)
        assert sorted(a.edges()) == sorted(b.edges())

    def test_simple_and_loopless(self):
        for seed in range(30):
            g = erdos_renyi(12, 0.5, seed)
            for u in range(g.n):
                assert u not in g.neighbors(u)
            assert g.m == len(set(g.edges()))

    def test_edge_count_matches_binomial_mean(self):
        # E[m] = 0.3 * C(20,2) = 57, sd of the mean over 1000 draws ~ 0.2
        mean = np.mean([erdos_renyi(20, 0.3, seed).m for seed in range(1000)])
        assert abs(mean - 57.0) < 3 * 0.1998


class TestAdjacencyColumn:
    def test_triangle(self):
        assert list(triangle().adjacency_column(0)) == [0, 1, 1]

    def test_star_hub(self):
        g = from_edge_list("h a\nh b\nh c")
        assert list(g.adjacency_column(0)) == [0, 1, 1, 1]

    def test_empty_graph(self):
        assert list(Graph(4).adjacency_column(2)) == [0, 0, 0, 0]

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            triangle().adjacency_column(5)


class TestLargestComponent:
    def test_two_triangles_tie_breaks_to_node_zero(self):
        g = from_edge_list("0 1\n1 2\n2 0\n3 4\n4 5\n5 3")
        lc = largest_component(g)
        assert lc.n == 3
        assert lc.labels == ["0", "1", "2"]

    def test_connected_graph_unchanged(self):
        g = complete(4)
        lc = largest_component(g)
        assert (lc.n, lc.m) == (4, 6)
        assert sorted(lc.edges()) == sorted(g.edges())

    def test_isolated_node_dropped(self):
        g = Graph(4)
        g.add_edge(0, 1)
        g.add_edge(1, 2)
        g.add_edge(2, 0)
        lc = largest_component(g)
        assert (lc.n, lc.m) == (3, 3)

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError):
            largest_component(Graph(0))

    def test_mapping_recorded(self):
        g = from_edge_list("isolated_a isolated_b\nbig1 big2\nbig2 big3\nbig3 big1")
        lc = largest_component(g)
        assert lc.labels == ["big1", "big2", "big3"]
