import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sepdecomp import kernels
from sepdecomp.generators import gnp_graph
from sepdecomp.kernels import _pykernels

_ck = kernels._ckernels
needs_compiled = pytest.mark.skipif(
    _ck is None, reason="compiled kernels unavailable"
)


def random_graph(n, seed):
    return gnp_graph(n, 0.4, seed)


class TestPureHelpers:
    def test_component_mask(self):
        # 0-1 edge, isolated 2: masks 0b011 and 0b100
        adj = (0b010, 0b001, 0b000)
        assert _pykernels.component_mask(adj, 0b111, 0) == 0b011
        assert _pykernels.components_in(adj, 0b111) == [0b011, 0b100]

    def test_components_respect_universe(self):
        adj = (0b010, 0b101, 0b010)
        assert _pykernels.components_in(adj, 0b101) == [0b001, 0b100]

    def test_sum_window(self):
        assert _pykernels._sum_window_reachable([2, 3], 2, 3)
        assert not _pykernels._sum_window_reachable([2, 3], 4, 4)
        assert _pykernels._sum_window_reachable([], 0, 0)

    @settings(max_examples=100, deadline=None)
    @given(st.lists(st.integers(0, 6), max_size=7), st.integers(0, 20), st.integers(0, 20))
    def test_sum_window_matches_bruteforce(self, sizes, lo, hi):
        reachable = {
            sum(s for s, pick in zip(sizes, picks) if pick)
            for picks in __import__("itertools").product((0, 1), repeat=len(sizes))
        }
        expected = any(lo <= r <= hi for r in reachable)
        assert _pykernels._sum_window_reachable(sizes, lo, hi) == expected


class TestPureKernels:
    def test_big_graph_bigint_path(self):
        # n = 70 exceeds any single machine word; order-1 search still exact
        from sepdecomp.generators import path_graph

        G = path_graph(70)
        found = _pykernels.min_balanced_separation(G.n, G.adj_masks, 1)
        assert found is not None and found[0] == 1

    def test_no_separation_within_order(self):
        from sepdecomp.generators import cycle_graph

        G = cycle_graph(10)
        assert _pykernels.min_balanced_separation(G.n, G.adj_masks, 1) is None


@needs_compiled
class TestDifferential:
    """The compiled kernels must agree with the pure ones bit for bit."""

    def test_min_balanced(self):
        for seed in range(40):
            G = random_graph(random.Random(seed).randint(1, 10), seed)
            for a in (1, 2, G.n):
                assert _ck.min_balanced_separation(
                    G.n, G.adj_masks, a
                ) == _pykernels.min_balanced_separation(G.n, G.adj_masks, a)

    def test_min_w_balanced(self):
        rng = random.Random(7)
        for seed in range(40):
            n = rng.randint(1, 10)
            G = random_graph(n, seed)
            w_mask = rng.randint(1, (1 << n) - 1)
            assert _ck.min_w_balanced_separation(
                G.n, G.adj_masks, w_mask, n
            ) == _pykernels.min_w_balanced_separation(G.n, G.adj_masks, w_mask, n)

    def test_separation_number(self):
        for seed in range(40):
            G = random_graph(random.Random(seed + 99).randint(1, 9), seed)
            assert _ck.separation_number(G.n, G.adj_masks) == (
                _pykernels.separation_number(G.n, G.adj_masks)
            )

    def test_treewidth(self):
        for seed in range(30):
            G = random_graph(random.Random(seed + 5).randint(1, 8), seed)
            assert _ck.treewidth(G.n, G.adj_masks) == _pykernels.treewidth(
                G.n, G.adj_masks
            )

    def test_compiled_treewidth_size_cap(self):
        with pytest.raises(ValueError):
            _ck.treewidth(29, tuple([0] * 29))


class TestSelection:
    def test_large_n_routes_to_python(self):
        from sepdecomp.generators import path_graph

        G = path_graph(70)  # above the 62-vertex compiled limit
        found = kernels.min_balanced_separation(G.n, G.adj_masks, 1)
        assert found is not None and found[0] == 1

    def test_implementation_flag(self):
        assert kernels.IMPLEMENTATION in ("compiled", "python")

    def test_pure_python_env_override(self):
        import subprocess
        import sys

        out = subprocess.run(
            [
                sys.executable,
                "-c",
                "from sepdecomp import kernels; print(kernels.IMPLEMENTATION)",
            ],
            capture_output=True,
            text=True,
            env={"SEPDECOMP_PURE_PYTHON": "1", "PATH": "/usr/bin:/bin"},
        )
        assert out.stdout.strip() == "python"
