from __future__ import annotations

import json
import subprocess
import sys

import pytest

from ivfg import read_graph, regular_constants, write_graph
from ivfg.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def strong_path(tmp_path):
    p = tmp_path / "strong.ivfg"
    p.write_text(json.dumps({
        "format_version": 1,
        "denominator": 10,
        "vertices": [{"id": "a", "mu": [3, 5]}, {"id": "b", "mu": [4, 6]}, {"id": "c", "mu": [2, 7]}],
        "edges": [{"u": "a", "v": "b", "mu": [3, 5]}],
    }))
    return p


class TestClassify:
    def test_four_vertex(self, fixture_path, capsys):
        code, out, _ = run(["classify", str(fixture_path("highly_irregular.ivfg"))], capsys)
        assert code == 0
        assert "highly_irregular: true" in out and "neighbourly_irregular: false" in out

    def test_json(self, fixture_path, capsys):
        code, out, _ = run(["classify", "--json", str(fixture_path("highly_irregular.ivfg"))], capsys)
        data = json.loads(out)
        assert code == 0 and data["highly_irregular"] is True

    def test_missing_file(self, tmp_path, capsys):
        code, _, err = run(["classify", str(tmp_path / "missing.ivfg")], capsys)
        assert code == 1 and "cannot read" in err

    def test_broken_constraint(self, tmp_path, capsys):
        p = tmp_path / "bad.ivfg"
        p.write_text(json.dumps({
            "format_version": 1, "denominator": 10,
            "vertices": [{"id": "a", "mu": [1, 2]}, {"id": "b", "mu": [1, 2]}],
            "edges": [{"u": "a", "v": "b", "mu": [2, 2]}],
        }))
        code, _, err = run(["classify", str(p)], capsys)
        assert code == 2 and "lower_bound at a-b" in err

    def test_malformed_document(self, tmp_path, capsys):
        p = tmp_path / "bad.ivfg"
        p.write_text("{")
        code, _, _ = run(["classify", str(p)], capsys)
        assert code == 2


class TestMetrics:
    def test_triangle(self, fixture_path, capsys):
        code, out, _ = run(["metrics", str(fixture_path("triangle.ivfg"))], capsys)
        assert code == 0
        for line in ("d(x) = (0.2, 0.7)", "d(y) = (0.3, 0.7)", "d(z) = (0.3, 0.8)",
                     "order = (0.9, 1.4)", "size = (0.4, 1.1)"):
            assert line in out.splitlines()

    def test_empty(self, tmp_path, capsys):
        p = tmp_path / "empty.ivfg"
        p.write_text(json.dumps({"format_version": 1, "denominator": 10, "vertices": [], "edges": []}))
        code, out, _ = run(["metrics", str(p)], capsys)
        assert code == 0 and "order = (0.0, 0.0)" in out and "size = (0.0, 0.0)" in out

    def test_json(self, fixture_path, capsys):
        code, out, _ = run(["metrics", "--json", str(fixture_path("triangle.ivfg"))], capsys)
        data = json.loads(out)
        assert data["degree"]["x"] == [2, 7] and data["order"] == [9, 14]


class TestComplement:
    def test_round_trip_bytes(self, strong_path, tmp_path, capsys):
        one, two = tmp_path / "one.ivfg", tmp_path / "two.ivfg"
        assert run(["complement", str(strong_path), str(one)], capsys)[0] == 0
        assert run(["complement", str(one), str(two)], capsys)[0] == 0
        assert two.read_bytes() == write_graph(read_graph(strong_path.read_bytes()))

    def test_not_strong(self, fixture_path, tmp_path, capsys):
        code, _, err = run(["complement", str(fixture_path("highly_irregular.ivfg")), str(tmp_path / "o")], capsys)
        assert code == 2 and "v1-v2" in err

    def test_complete_to_edgeless(self, tmp_path, capsys):
        p = tmp_path / "k2.ivfg"
        p.write_text(json.dumps({
            "format_version": 1, "denominator": 10,
            "vertices": [{"id": "a", "mu": [3, 5]}, {"id": "b", "mu": [4, 6]}],
            "edges": [{"u": "a", "v": "b", "mu": [3, 5]}],
        }))
        code, out, _ = run(["complement", str(p)], capsys)
        assert code == 0 and json.loads(out)["edges"] == []


class TestVerify:
    def test_identities(self, capsys):
        code, out, _ = run(["verify", "--theorem", "2,3", "--n-max", "3"], capsys)
        assert code == 0 and "ok" in out

    def test_converse_never_fails(self, capsys):
        code, out, _ = run(["verify", "--theorem", "4c", "--n-max", "3", "--grid", "0,0.5,1", "--json"], capsys)
        data = json.loads(out)
        assert code == 0
        assert data["outcomes"][0]["theorem_id"] == "4c"
        assert data["outcomes"][0]["counterexample_count"] > 0
        assert "counterexamples" in data["outcomes"][0]

    def test_counterexample_documents_read_back(self, capsys):
        _, out, _ = run(["verify", "--theorem", "4c", "--n-max", "2", "--json"], capsys)
        for c in json.loads(out)["outcomes"][0]["counterexamples"]:
            read_graph(json.dumps(c["graph"]))

    def test_unknown_theorem(self, capsys):
        assert run(["verify", "--theorem", "9"], capsys)[0] == 1

    def test_bad_flag(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["verify", "--bogus"])
        assert info.value.code == 1

    def test_json_random_needs_seed(self, capsys):
        assert run(["verify", "--theorem", "2", "--random-count", "5", "--json"], capsys)[0] == 1

    def test_exit_three_on_asserted_counterexample(self, capsys, monkeypatch):
        from ivfg.verify import CHECKS, VIOLATED, Verdict

        monkeypatch.setitem(CHECKS, "2", lambda g: Verdict(VIOLATED, "planted"))
        code, out, _ = run(["verify", "--theorem", "2", "--n-max", "0", "--constructed-count", "3",
                            "--seed", "1"], capsys)
        assert code == 3 and "FAIL" in out

    def test_deterministic_json(self, capsys):
        argv = ["verify", "--theorem", "2,5", "--n-max", "2", "--random-count", "50", "--seed", "4", "--json"]
        assert run(argv, capsys)[1] == run(argv, capsys)[1]


class TestGen:
    def test_cycle(self, capsys):
        code, out, _ = run(["gen", "--cycle", "4", "--k", "0.4,0.6", "--c", "0.2,0.3"], capsys)
        g = read_graph(out)
        assert code == 0 and regular_constants(g) == g.pair("0.4", "0.6")
        assert len(set(g.edges.values())) == 1

    def test_same_seed_same_file(self, tmp_path, capsys):
        a, b = tmp_path / "a", tmp_path / "b"
        run(["gen", "--n", "5", "--seed", "7", "--out", str(a)], capsys)
        run(["gen", "--n", "5", "--seed", "7", "--out", str(b)], capsys)
        assert a.read_bytes() == b.read_bytes()

    @pytest.mark.parametrize("argv", [["gen", "--n", "0"], ["gen", "--n", "3"], ["gen"],
                                      ["gen", "--cycle", "3", "--k", "0.4,0.6", "--c", "0.2,0.3"],
                                      ["gen", "--n", "3", "--seed", "1", "--edge-prob", "2"]])
    def test_usage_errors(self, argv, capsys):
        assert run(argv, capsys)[0] == 1


class TestExportDot:
    def test_report(self, fixture_path, capsys):
        code, out, _ = run(["export-dot", "--report", str(fixture_path("highly_irregular.ivfg"))], capsys)
        assert code == 0 and "highly_irregular=true" in out and out.count(" -- ") == 4


def test_console_script_exit_codes(fixture_path):
    ok = subprocess.run([sys.executable, "-m", "ivfg.cli", "metrics", str(fixture_path("triangle.ivfg"))],
                        capture_output=True, text=True)
    assert ok.returncode == 0 and "size = (0.4, 1.1)" in ok.stdout
    bad = subprocess.run([sys.executable, "-m", "ivfg.cli", "nope"], capture_output=True, text=True)
    assert bad.returncode == 1
