import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sepdecomp.decomposition import RootedTreeDecomposition, separation_tree
from sepdecomp.errors import InvalidDecompositionError, ParseError
from sepdecomp.generators import complete_graph, gnp_graph, path_graph
from sepdecomp.graph import build_graph
from sepdecomp.pace import export_dot, parse_gr, parse_td, write_gr, write_td


def td(host_n, parents, bags):
    return RootedTreeDecomposition(
        host_n, tuple(parents), tuple(frozenset(b) for b in bags)
    )


class TestGrFormat:
    def test_parse_simple(self):
        G = parse_gr("c a comment\np tw 3 2\n1 2\n2 3\n")
        assert G.n == 3 and sorted(G.edges()) == [(0, 1), (1, 2)]

    def test_write_exact(self):
        assert write_gr(path_graph(3)) == "p tw 3 2\n1 2\n2 3\n"
        assert write_gr(build_graph(2, [])) == "p tw 2 0\n"

    def test_round_trip(self):
        for seed in range(5):
            G = gnp_graph(10, 0.3, seed)
            H = parse_gr(write_gr(G))
            assert H.n == G.n and sorted(H.edges()) == sorted(G.edges())

    @pytest.mark.parametrize(
        "text",
        [
            "",  # no header
            "p tw 2\n",  # short header
            "p cnf 2 0\n",  # wrong descriptor
            "1 2\np tw 2 1\n",  # edge before header
            "p tw 2 1\n1 3\n",  # vertex out of range
            "p tw 2 2\n1 2\n",  # edge count mismatch
            "p tw 2 1\n1 2\np tw 2 1\n",  # duplicate header
            "p tw 2 1\n1 2 3\n",  # malformed edge
            "p tw -1 0\n",  # negative n
        ],
    )
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            parse_gr(text)

    def test_error_carries_line_number(self):
        with pytest.raises(ParseError) as ei:
            parse_gr("p tw 2 1\n1 5\n")
        assert "line 2" in str(ei.value) or ei.value.lineno == 2


class TestTdFormat:
    def test_single_vertex_exact(self):
        G = complete_graph(1)
        t = td(1, [-1], [{0}])
        assert write_td(t, G) == "s td 1 1 1\nb 1 1\n"

    def test_path_chain_exact(self):
        G = path_graph(3)
        t = td(3, [-1, 0], [{0, 1}, {1, 2}])
        assert write_td(t, G) == "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n"

    def test_empty_bag_line(self):
        G = build_graph(0, [])
        t = td(0, [-1], [set()])
        assert write_td(t, G) == "s td 1 0 0\nb 1\n"

    def test_parse_round_trip(self):
        G = gnp_graph(9, 0.35, 4)
        t = separation_tree(G, 3, 2)
        back = parse_td(write_td(t, G))
        assert back.host_n == G.n
        # same bag multiset and same tree shape up to the root orientation
        assert sorted(back.bags) == sorted(t.bags)
        assert write_td(back, G) == write_td(t, G)

    def test_invalid_decomposition_refused(self):
        G = path_graph(3)
        bad = td(3, [-1, 0], [{0, 1}, {2}])
        with pytest.raises(InvalidDecompositionError):
            write_td(bad, G)

    @pytest.mark.parametrize(
        "text",
        [
            "",  # no header
            "s td 1 1 1\n",  # missing bag
            "s td 2 1 1\nb 1 1\nb 2 1\n",  # missing tree edge
            "s td 1 1 1\nb 1 1\nb 1 1\n",  # duplicate bag index
            "s td 1 1 1\nb 1 2\n",  # vertex out of range
            "s td 2 1 1\nb 1 1\nb 2 1\n1 1\n",  # self-loop tree edge
            "s td 3 1 1\nb 1 1\nb 2 1\nb 3 1\n1 2\n1 2\n",  # disconnected
            "s td 0 0 0\n",  # zero bags
        ],
    )
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            parse_td(text)


class TestDot:
    def test_exact_output(self):
        G = path_graph(3)
        t = td(3, [-1, 0], [{0, 1}, {1, 2}])
        assert export_dot(t) == (
            "graph td {\n"
            '  n1 [label="{1, 2}"];\n'
            '  n2 [label="{2, 3}"];\n'
            "  n1 -- n2;\n"
            "}\n"
        )


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 9), st.integers(0, 5000))
def test_gr_td_pipeline_round_trips(n, seed):
    G = gnp_graph(n, 0.4, seed)
    assert parse_gr(write_gr(G)).adj_masks == G.adj_masks
    t = separation_tree(G, -(-n // 3), 1)
    text = write_td(t, G)
    assert write_td(parse_td(text), G) == text
