import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sepdecomp.errors import EmptyWError, WidthOutOfRangeError
from sepdecomp.generators import complete_graph, gnp_graph, path_graph
from sepdecomp.graph import build_graph
from sepdecomp.wsequence import build_w_sequence, validate_w_sequence


class TestBuildExamples:
    def test_path_three_singleton_w(self):
        # P3, W = {0}, w = 1: layers grow one vertex per round until the far
        # end is swallowed, then r = 0 < w ends the sequence with Z empty.
        G = path_graph(3)
        ws = build_w_sequence(G, {0}, 1)
        assert ws.levels[0] == {0}
        assert ws.levels[-1] == {0, 1, 2}
        assert ws.z_set == frozenset()
        assert ws.sizes[-1] == 0
        ok, tags = validate_w_sequence(G, ws)
        assert ok, tags

    def test_isolated_w_terminates_immediately(self):
        G = build_graph(4, [(1, 2), (2, 3)])
        ws = build_w_sequence(G, {0}, 1)
        assert ws.ell == 0
        assert ws.levels == ({0}, {0})
        assert ws.z_set == frozenset()

    def test_complete_graph_width_two(self):
        G = complete_graph(6)
        ws = build_w_sequence(G, {0, 1}, 2)
        ok, tags = validate_w_sequence(G, ws)
        assert ok, tags
        # every level past the first adds exactly two vertices until < 2 remain
        assert all(s == 2 for s in ws.sizes[1 : ws.ell + 1])

    def test_z_separates_top(self):
        G = path_graph(8)
        ws = build_w_sequence(G, {3}, 1)
        ok, tags = validate_w_sequence(G, ws)
        assert ok, tags
        # the separator size always matches the final deficit
        assert len(ws.z_set) == ws.sizes[-1]


class TestErrors:
    def test_empty_w(self):
        with pytest.raises(EmptyWError):
            build_w_sequence(path_graph(3), set(), 1)

    def test_width_zero(self):
        with pytest.raises(WidthOutOfRangeError):
            build_w_sequence(path_graph(3), {0}, 0)

    def test_width_above_w(self):
        with pytest.raises(WidthOutOfRangeError):
            build_w_sequence(path_graph(3), {0, 1}, 3)


class TestValidateRejects:
    def test_broken_nesting(self):
        G = path_graph(3)
        ws = build_w_sequence(G, {0}, 1)
        bad = type(ws)(
            levels=(ws.levels[0], frozenset({2})),
            width_w=1,
            z_set=frozenset(),
            witness_paths=ws.witness_paths[:2],
        )
        ok, tags = validate_w_sequence(G, bad)
        assert not ok and "nesting" in tags

    def test_wrong_z(self):
        G = path_graph(6)
        ws = build_w_sequence(G, {0, 2}, 2)
        bad = type(ws)(
            levels=ws.levels, width_w=ws.width_w,
            z_set=frozenset({0}), witness_paths=ws.witness_paths,
        )
        ok, tags = validate_w_sequence(G, bad)
        assert not ok and "(e)" in tags


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_random_sequences_validate(data):
    n = data.draw(st.integers(2, 9))
    seed = data.draw(st.integers(0, 10_000))
    G = gnp_graph(n, 0.4, seed)
    k = data.draw(st.integers(1, min(3, n)))
    W = frozenset(data.draw(st.permutations(range(n)))[:k])
    w = data.draw(st.integers(1, len(W)))
    ws = build_w_sequence(G, W, w)
    ok, tags = validate_w_sequence(G, ws)
    assert ok, tags
    assert ws.levels[0] == W and ws.width_w == w
