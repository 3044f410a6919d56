import pytest

from sepdecomp.errors import NotSeparatedError, SizeLimitExceededError
from sepdecomp.generators import (
    complete_graph,
    cycle_graph,
    gnp_graph,
    path_graph,
    random_tree,
)
from sepdecomp.graph import build_graph, is_balanced, is_separation, is_w_balanced
from sepdecomp.separations import (
    balanced_separation_within,
    make_oracle,
    min_balanced_separation,
    min_w_balanced_separation,
    separation_number,
    stz_separation,
)


class TestStzSeparation:
    def test_path(self):
        G = path_graph(5)
        sep = stz_separation(G, {0}, {2}, {4})
        assert sep.a_side == {0, 1, 2} and sep.b_side == {2, 3, 4}
        assert is_separation(G, sep)

    def test_not_separated(self):
        G = path_graph(3)
        with pytest.raises(NotSeparatedError):
            stz_separation(G, {0}, set(), {2})

    def test_empty_s(self):
        G = path_graph(3)
        sep = stz_separation(G, set(), set(), {0, 1, 2})
        assert sep.a_side == frozenset() and sep.b_side == {0, 1, 2}


class TestMinBalancedSeparation:
    def test_k1(self):
        sep = min_balanced_separation(complete_graph(1))
        assert sep.order == 1  # ({0},{0}) is the only balanced separation

    def test_path_order_one(self):
        sep = min_balanced_separation(path_graph(9))
        assert sep.order == 1
        assert is_balanced(path_graph(9), sep)

    def test_cycle_order_two(self):
        assert min_balanced_separation(cycle_graph(9)).order == 2

    def test_complete(self):
        # K_n only separates via (A, B) with A or B = V; order >= ceil(n/3)
        assert min_balanced_separation(complete_graph(6)).order == 2

    def test_size_limit(self):
        with pytest.raises(SizeLimitExceededError):
            min_balanced_separation(path_graph(25), exact_limit=20)

    def test_deterministic_tiebreak(self):
        a = min_balanced_separation(path_graph(12))
        b = min_balanced_separation(path_graph(12))
        assert a == b


class TestSeparationNumber:
    @pytest.mark.parametrize("n", range(1, 10))
    def test_complete_graphs(self, n):
        assert separation_number(complete_graph(n)) == -(-n // 3)

    def test_paths_and_trees(self):
        assert separation_number(path_graph(10)) == 1
        assert separation_number(random_tree(11, seed=4)) == 1

    def test_cycles(self):
        assert separation_number(cycle_graph(3)) == 1
        assert separation_number(cycle_graph(8)) == 2

    def test_empty_and_singleton(self):
        assert separation_number(build_graph(0, [])) == 0
        assert separation_number(build_graph(1, [])) == 1

    def test_monotone_under_subgraphs(self):
        G = gnp_graph(9, 0.4, 5)
        from sepdecomp.graph import induced_subgraph

        full = separation_number(G)
        for drop in range(G.n):
            H, _ = induced_subgraph(G, set(range(G.n)) - {drop})
            assert separation_number(H) <= full


class TestBalancedSeparationWithin:
    def test_exact_success_is_certified(self):
        out = balanced_separation_within(path_graph(10), 1)
        assert out.found and out.certified
        assert out.separation.order <= 1

    def test_exact_failure_is_certified(self):
        out = balanced_separation_within(cycle_graph(10), 1)
        assert not out.found and out.certified

    def test_bounded_order_stays_exact_on_large_graphs(self):
        # n = 200 far exceeds the subset limit, but order <= 1 is enumerable
        out = balanced_separation_within(path_graph(200), 1)
        assert out.found and out.certified
        assert is_balanced(path_graph(200), out.separation)

    def test_heuristic_mode_finds_trivial(self):
        G = gnp_graph(40, 0.5, 11)
        a = -(-G.n // 3)
        out = balanced_separation_within(G, a, mode="heuristic", seed=1)
        assert out.found
        assert is_balanced(G, out.separation)
        assert out.separation.order <= a

    def test_exact_mode_rejects_oversize(self):
        with pytest.raises(SizeLimitExceededError):
            balanced_separation_within(gnp_graph(40, 0.5, 1), 13, mode="exact")


class TestMinWBalanced:
    def test_w_balance_respected(self):
        G = path_graph(12)
        W = {0, 5, 11}
        sep = min_w_balanced_separation(G, W)
        assert is_w_balanced(G, sep, W)
        assert sep.order == 1

    def test_w_equals_v_matches_balanced(self):
        G = gnp_graph(9, 0.3, 3)
        assert min_w_balanced_separation(G, range(G.n)) == min_balanced_separation(G)


class TestOracle:
    def test_oracle_counts_and_validates(self):
        oracle = make_oracle(1)
        out = oracle(path_graph(30))
        assert out.found and is_balanced(path_graph(30), out.separation)

    def test_oracle_failure_certified_when_exact(self):
        out = make_oracle(1)(cycle_graph(12))
        assert not out.found and out.certified
