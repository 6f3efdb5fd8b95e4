import json
import xml.etree.ElementTree as ET

import pytest

from mixbiotic.cli import main


EVENTS = "10 a b\n10 a c\n20 b c\n30 a b\n"


def run(argv):
    return main([str(a) for a in argv])


@pytest.fixture()
def events_file(tmp_path):
    path = tmp_path / "contacts.tsv"
    path.write_text(EVENTS)
    return path


def svg_ok(path):
    root = ET.fromstring(path.read_text())
    assert root.tag.endswith("svg")
    return True


class TestGen:
    def test_ws_graph_json(self, tmp_path):
        out = tmp_path / "g.json"
        assert run(["gen", "--model", "ws", "--n", "100", "--k", "4", "--p", "0.7",
                    "--seed", "1", "--out", out]) == 0
        doc = json.loads(out.read_text())
        assert doc["n"] == 100
        assert len(doc["edges"]) == 200

    def test_ba_graph_json(self, tmp_path):
        out = tmp_path / "g.json"
        assert run(["gen", "--model", "ba", "--n", "100", "--na", "3", "--k", "2",
                    "--seed", "1", "--out", out]) == 0
        assert len(json.loads(out.read_text())["edges"]) == 197

    def test_byte_identical_rerun(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        args = ["gen", "--model", "ws", "--n", "40", "--k", "4", "--p", "0.3", "--seed", "5"]
        run(args + ["--out", a])
        run(args + ["--out", b])
        assert a.read_bytes() == b.read_bytes()

    def test_missing_params_usage_error(self, tmp_path):
        assert run(["gen", "--model", "ws", "--n", "10", "--out", tmp_path / "g.json"]) == 2


class TestStats:
    def test_graph_stats(self, tmp_path):
        gpath = tmp_path / "g.json"
        run(["gen", "--model", "ws", "--n", "50", "--k", "4", "--p", "0.2",
             "--seed", "3", "--out", gpath])
        out = tmp_path / "stats.json"
        assert run(["stats", "--graph", gpath, "--out", out]) == 0
        doc = json.loads(out.read_text())
        assert doc["vertex_count"] == 50
        assert doc["edge_count"] == 100

    def test_event_stats_include_meta(self, events_file, tmp_path):
        out = tmp_path / "stats.json"
        assert run(["stats", "--events", events_file, "--out", out]) == 0
        doc = json.loads(out.read_text())
        assert doc["vertex_count"] == 3
        assert doc["edge_count"] == 3
        assert doc["t_count"] == 4
        assert doc["t_max"] == 3
        assert doc["dropped_rows"] == 0

    def test_requires_exactly_one_input(self, events_file):
        assert run(["stats"]) == 2
        assert run(["stats", "--events", events_file, "--graph", "x.json"]) == 2

    def test_missing_file_is_input_error(self, tmp_path):
        assert run(["stats", "--graph", tmp_path / "nope.json"]) == 2


class TestSimulate:
    def test_trace_and_measures(self, tmp_path):
        trace, ms = tmp_path / "trace.csv", tmp_path / "ms.json"
        assert run(["simulate", "--model", "ws", "--n", "30", "--k", "4", "--p", "0.5",
                    "--g", "0.4", "--d", "0.3", "--tmax", "20", "--n0", "4",
                    "--seed", "7", "--out", trace, "--measures", ms]) == 0
        assert trace.read_text().startswith("t,q_0,")
        doc = json.loads(ms.read_text())
        assert doc["delta_count"] == 20

    def test_sparse_output_when_json(self, tmp_path):
        trace = tmp_path / "trace.json"
        run(["simulate", "--model", "ws", "--n", "20", "--k", "4", "--p", "0.5",
             "--g", "0.3", "--d", "0.5", "--tmax", "10", "--n0", "3",
             "--seed", "7", "--out", trace])
        doc = json.loads(trace.read_text())
        assert doc["n"] == 20
        assert len(doc["rows"]) == 11

    def test_trial_averaging_and_determinism(self, tmp_path):
        args = ["simulate", "--model", "ws", "--n", "30", "--k", "4", "--p", "0.5",
                "--g", "0.5", "--d", "0.2", "--tmax", "15", "--n0", "4",
                "--seed", "3", "--trials", "4"]
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        run(args + ["--measures", a])
        run(args + ["--measures", b])
        assert a.read_bytes() == b.read_bytes()

    def test_invalid_rate_is_contract_error(self, tmp_path):
        assert run(["simulate", "--model", "ws", "--n", "20", "--k", "4", "--p", "0.5",
                    "--g", "1.5", "--d", "0.3", "--out", tmp_path / "t.csv"]) == 3


class TestSweepCommand:
    def test_grid_csv_svg_meta(self, tmp_path):
        out, svg, meta = tmp_path / "grid.csv", tmp_path / "phase.svg", tmp_path / "meta.json"
        assert run(["sweep", "--model", "ws", "--n", "20", "--k", "4", "--p", "0.5",
                    "--trials", "2", "--tmax", "10", "--n0", "3", "--seed", "2",
                    "--mesh", "grid", "--out", out, "--svg", svg, "--meta", meta]) == 0
        lines = out.read_text().splitlines()
        assert lines[0].startswith("g,d,mu_I,")
        assert len(lines) == 122
        assert svg_ok(svg)
        assert json.loads(meta.read_text())["trials"] == 2

    def test_mesh_file_and_parallel_determinism(self, tmp_path):
        mesh_file = tmp_path / "mesh.json"
        mesh_file.write_text(json.dumps([[0.2, 0.1], [0.7, 0.6], [0.4, 0.9]]))
        base = ["sweep", "--model", "ws", "--n", "20", "--k", "4", "--p", "0.5",
                "--trials", "2", "--tmax", "10", "--n0", "3", "--seed", "2",
                "--mesh", f"file:{mesh_file}"]
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert run(base + ["--out", a, "--workers", "1"]) == 0
        assert run(base + ["--out", b, "--workers", "2"]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_unknown_mesh_flag(self, tmp_path):
        assert run(["sweep", "--model", "ws", "--n", "20", "--k", "4", "--p", "0.5",
                    "--mesh", "bogus", "--out", tmp_path / "g.csv"]) == 2

    def test_fixed_network_changes_results(self, tmp_path):
        mesh_file = tmp_path / "mesh.json"
        mesh_file.write_text(json.dumps([[0.5, 0.3]]))
        base = ["sweep", "--model", "ws", "--n", "20", "--k", "4", "--p", "0.5",
                "--trials", "3", "--tmax", "10", "--n0", "3", "--seed", "2",
                "--mesh", f"file:{mesh_file}"]
        fresh, fixed = tmp_path / "fresh.csv", tmp_path / "fixed.csv"
        assert run(base + ["--out", fresh]) == 0
        assert run(base + ["--fixed-network", "--out", fixed]) == 0
        assert fresh.read_bytes() != fixed.read_bytes()
        meta = tmp_path / "meta.json"
        run(base + ["--fixed-network", "--out", fixed, "--meta", meta])
        assert json.loads(meta.read_text())["fresh_network"] is False


class TestMeasure:
    def test_event_measures(self, events_file, tmp_path):
        out = tmp_path / "ms.json"
        assert run(["measure", "--events", events_file, "--out", out]) == 0
        doc = json.loads(out.read_text())
        assert doc["delta_count"] == 2  # three distinct timestamps

    def test_receiver_only_differs(self, events_file, tmp_path):
        both, recv = tmp_path / "b.json", tmp_path / "r.json"
        run(["measure", "--events", events_file, "--out", both])
        run(["measure", "--events", events_file, "--directed",
             "--endpoints", "receiver", "--out", recv])
        assert json.loads(both.read_text()) != json.loads(recv.read_text())


class TestTrajectory:
    def test_polar_csv_and_svg(self, tmp_path):
        trace = tmp_path / "trace.csv"
        run(["simulate", "--model", "ws", "--n", "20", "--k", "4", "--p", "0.5",
             "--g", "0.6", "--d", "0.2", "--tmax", "12", "--n0", "3",
             "--seed", "4", "--out", trace])
        out, svg = tmp_path / "polar.csv", tmp_path / "traj.svg"
        assert run(["trajectory", "--trace", trace, "--out", out, "--svg", svg]) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "t,r,theta"
        assert len(lines) == 14
        assert svg_ok(svg)

    def test_accepts_sparse_trace(self, tmp_path):
        trace = tmp_path / "trace.json"
        run(["simulate", "--model", "ws", "--n", "20", "--k", "4", "--p", "0.5",
             "--g", "0.6", "--d", "0.2", "--tmax", "8", "--n0", "3",
             "--seed", "4", "--out", trace])
        out = tmp_path / "polar.csv"
        assert run(["trajectory", "--trace", trace, "--out", out]) == 0
        assert len(out.read_text().splitlines()) == 10


class TestRadar:
    def make_measures(self, tmp_path, seed, name):
        path = tmp_path / name
        run(["simulate", "--model", "ws", "--n", "25", "--k", "4", "--p", "0.5",
             "--g", "0.5", "--d", "0.3", "--tmax", "15", "--n0", "4",
             "--seed", str(seed), "--measures", path])
        return path

    def test_single_input_self_normalizes_to_one(self, tmp_path):
        ms = self.make_measures(tmp_path, 1, "a.json")
        out = tmp_path / "radar.csv"
        assert run(["radar", ms, "--out", out]) == 0
        header, row = out.read_text().splitlines()
        values = [float(v) for v in row.split(",")[1:]]
        raw = json.loads(ms.read_text())
        axes = header.split(",")[1:]
        for axis, value in zip(axes, values):
            assert value == (1.0 if raw[axis] > 0 else 0.0)

    def test_multi_case_chart(self, tmp_path):
        a = self.make_measures(tmp_path, 1, "a.json")
        b = self.make_measures(tmp_path, 2, "b.json")
        out, svg = tmp_path / "radar.csv", tmp_path / "radar.svg"
        assert run(["radar", a, b, "--labels", "first,second",
                    "--out", out, "--svg", svg]) == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 3
        assert lines[1].startswith("first,")
        assert svg_ok(svg)
        # per-axis max across the inputs is exactly 1
        cols = list(zip(*([float(v) for v in ln.split(",")[1:]] for ln in lines[1:])))
        assert all(max(col) == pytest.approx(1.0) for col in cols)

    def test_no_inputs_is_input_error(self):
        assert run(["radar"]) == 2

    def test_label_count_mismatch(self, tmp_path):
        ms = self.make_measures(tmp_path, 1, "a.json")
        assert run(["radar", ms, "--labels", "a,b"]) == 2


class TestUsageErrors:
    def test_unknown_subcommand(self):
        assert run(["frobnicate"]) == 1

    def test_unknown_flag(self):
        assert run(["gen", "--bogus", "1"]) == 1
