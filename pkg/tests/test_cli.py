import json

from sepdecomp.cli import dispatch
from sepdecomp.generators import cycle_graph, grid_graph, path_graph
from sepdecomp.pace import parse_gr, parse_td, write_gr


def gr(tmp_path, G, name="g.gr"):
    p = tmp_path / name
    p.write_text(write_gr(G))
    return str(p)


class TestGen:
    def test_writes_gr(self, tmp_path, capsys):
        out = tmp_path / "p.gr"
        assert dispatch(["gen", "--kind", "path", "--params", "n=5", "--out", str(out)]) == 0
        assert parse_gr(out.read_text()).n == 5

    def test_stdout_default(self, capsys):
        assert dispatch(["gen", "--kind", "complete", "--params", "n=3"]) == 0
        assert capsys.readouterr().out == "p tw 3 3\n1 2\n1 3\n2 3\n"

    def test_bad_params(self, capsys):
        assert dispatch(["gen", "--kind", "path", "--params", "nonsense"]) == 2


class TestConstruct:
    def test_end_to_end(self, tmp_path, capsys):
        g = gr(tmp_path, path_graph(60))
        tdf = tmp_path / "out.td"
        stats = tmp_path / "stats.json"
        code = dispatch(
            [
                "construct", "--input", g, "--a", "1",
                "--td", str(tdf), "--stats", str(stats),
            ]
        )
        assert code == 0
        out = capsys.readouterr().out
        assert out.startswith("width ") and "(bound 7915/139)" in out
        td = parse_td(tdf.read_text())
        assert td.host_n == 60
        blob = json.loads(stats.read_text())
        assert set(blob) == {
            "n", "m", "a_used", "width", "bound_rhs_num", "bound_rhs_den",
            "oracle_calls", "elapsed_ms", "assertions_checked",
        }
        assert blob["n"] == 60 and blob["a_used"] == 1

    def test_auto_a_small_graph(self, tmp_path, capsys):
        g = gr(tmp_path, cycle_graph(12))
        assert dispatch(["construct", "--input", g]) == 0

    def test_auto_a_refused_when_large(self, tmp_path, capsys):
        g = gr(tmp_path, path_graph(40))
        assert dispatch(["construct", "--input", g]) == 2
        assert "error" in capsys.readouterr().err

    def test_explicit_w(self, tmp_path, capsys):
        g = gr(tmp_path, path_graph(50))
        assert dispatch(["construct", "--input", g, "--a", "1", "--w", "25"]) == 0

    def test_infeasible_a_is_usage_error(self, tmp_path, capsys):
        g = gr(tmp_path, grid_graph(6, 6))
        assert dispatch(["construct", "--input", g, "--a", "1"]) == 2

    def test_dot_output(self, tmp_path):
        g = gr(tmp_path, path_graph(40))
        dot = tmp_path / "t.dot"
        assert dispatch(["construct", "--input", g, "--a", "1", "--dot", str(dot)]) == 0
        assert dot.read_text().startswith("graph td {")


class TestValidate:
    def test_valid(self, tmp_path, capsys):
        g = gr(tmp_path, path_graph(30))
        tdf = tmp_path / "t.td"
        dispatch(["construct", "--input", g, "--a", "1", "--td", str(tdf)])
        capsys.readouterr()
        assert dispatch(["validate", "--input", g, "--td", str(tdf)]) == 0
        assert capsys.readouterr().out.startswith("valid, width ")

    def test_invalid(self, tmp_path, capsys):
        g = gr(tmp_path, path_graph(3))
        tdf = tmp_path / "bad.td"
        tdf.write_text("s td 2 2 3\nb 1 1 2\nb 2 3\n1 2\n")  # edge 2-3 uncovered
        assert dispatch(["validate", "--input", g, "--td", str(tdf)]) == 1

    def test_mismatched_sizes(self, tmp_path, capsys):
        g = gr(tmp_path, path_graph(4))
        tdf = tmp_path / "t.td"
        tdf.write_text("s td 1 1 1\nb 1 1\n")
        assert dispatch(["validate", "--input", g, "--td", str(tdf)]) == 1


class TestSepTw:
    def test_sep(self, tmp_path, capsys):
        g = gr(tmp_path, cycle_graph(9))
        assert dispatch(["sep", "--input", g]) == 0
        assert capsys.readouterr().out == "2\n"

    def test_tw(self, tmp_path, capsys):
        g = gr(tmp_path, cycle_graph(9))
        assert dispatch(["tw", "--input", g]) == 0
        assert capsys.readouterr().out == "2\n"

    def test_over_limit(self, tmp_path, capsys):
        g = gr(tmp_path, path_graph(30))
        assert dispatch(["tw", "--input", g]) == 2


class TestTheorem2:
    def test_end_to_end(self, tmp_path, capsys):
        g = gr(tmp_path, cycle_graph(12))
        tdf = tmp_path / "t.td"
        assert dispatch(["theorem2", "--input", g, "--a", "2", "--td", str(tdf)]) == 0
        assert "width " in capsys.readouterr().out
        assert parse_td(tdf.read_text()).host_n == 12

    def test_auto_a(self, tmp_path, capsys):
        g = gr(tmp_path, path_graph(12))
        assert dispatch(["theorem2", "--input", g]) == 0


class TestSuite:
    def test_config_run(self, tmp_path, capsys):
        cfg = tmp_path / "suite.json"
        cfg.write_text(
            json.dumps(
                {
                    "instances": [
                        {"kind": "path", "params": {"n": 40}},
                        {"kind": "complete", "params": {"n": 7}},
                        {"kind": "gnp", "params": {"n": 12, "p": 0.3}},
                    ]
                }
            )
        )
        rep = tmp_path / "report.json"
        assert dispatch(["suite", "--config", str(cfg), "--report", str(rep)]) == 0
        assert capsys.readouterr().out == "3/3 passed\n"
        blob = json.loads(rep.read_text())
        assert blob["passed"] and blob["total"] == 3

    def test_failing_instance_exits_one(self, tmp_path, capsys):
        cfg = tmp_path / "suite.json"
        cfg.write_text(
            json.dumps(
                {"instances": [{"kind": "grid", "params": {"rows": 6, "cols": 6}, "a": 1}]}
            )
        )
        assert dispatch(["suite", "--config", str(cfg)]) == 1

    def test_bad_json(self, tmp_path, capsys):
        cfg = tmp_path / "suite.json"
        cfg.write_text("{nope")
        assert dispatch(["suite", "--config", str(cfg)]) == 2


class TestUsage:
    def test_unknown_command(self, capsys):
        assert dispatch(["frobnicate"]) == 2

    def test_missing_file(self, capsys):
        assert dispatch(["sep", "--input", "/nonexistent.gr"]) == 2
