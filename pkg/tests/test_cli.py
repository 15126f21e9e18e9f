from __future__ import annotations

import json

import pytest

from longpath.cli import main
from longpath.generate import CONNECTED_COUNTS
from longpath.graphs import format_edge_list
from longpath.verify import build_witness


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestVerifyCommand:
    def test_single_order_json(self, capsys):
        code, out, _ = run(capsys, "verify", "--n", "5", "--jobs", "1", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["n"] == 5
        assert payload["graphs_total"] == 21
        assert payload["violations"] == []

    def test_n_max_range(self, capsys):
        code, out, _ = run(capsys, "verify", "--n-max", "4", "--jobs", "1")
        assert code == 0
        assert out.count("violations") == 4

    def test_report_file(self, capsys, tmp_path):
        report = tmp_path / "r.json"
        code, _, _ = run(
            capsys, "verify", "--n", "6", "--jobs", "1", "--report", str(report)
        )
        assert code == 0
        data = json.loads(report.read_text())
        assert data["graphs_total"] == CONNECTED_COUNTS[6]

    def test_checkpoint_env(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("LONGPATH_CHECKPOINT_DIR", str(tmp_path))
        code, _, _ = run(capsys, "verify", "--n", "5", "--jobs", "1")
        assert code == 0
        assert (tmp_path / "verify-n5.json").exists()

    def test_bad_source_argument(self, capsys):
        code, _, err = run(capsys, "verify", "--n", "5", "--source", "nope")
        assert code == 2 and "g6:" in err

    def test_g6_source(self, capsys, tmp_path):
        path = tmp_path / "n4.g6"
        code, _, _ = run(capsys, "enumerate", "--n", "4", "--out-g6", str(path))
        assert code == 0
        code, out, _ = run(
            capsys, "verify", "--n", "4", "--jobs", "1",
            "--source", f"g6:{path}", "--json",
        )
        assert code == 0
        assert json.loads(out)["graphs_total"] == 6


class TestWitnessCommand:
    def test_builtin(self, capsys):
        code, out, _ = run(capsys, "witness", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["n"] == 11 and payload["ell"] == 9

    def test_edges_file_failure(self, capsys, tmp_path):
        path = tmp_path / "c5.txt"
        path.write_text("5 5\n1 2\n2 3\n3 4\n4 5\n5 1\n")
        code, _, err = run(capsys, "witness", "--edges", str(path))
        assert code == 1
        assert json.loads(err)["witness"] == "failed"

    def test_edges_file_success(self, capsys, tmp_path):
        path = tmp_path / "w.txt"
        path.write_text(format_edge_list(build_witness()))
        code, out, _ = run(capsys, "witness", "--edges", str(path), "--json")
        assert code == 0 and json.loads(out)["ell"] == 9


class TestAnalyzeCommand:
    def test_g6_input(self, capsys):
        code, out, _ = run(capsys, "analyze", "--g6", "Bw")  # triangle
        assert code == 0
        payload = json.loads(out)
        assert payload["longest_path_vertices"] == 3
        assert payload["violation"] is None

    def test_edges_input_with_violation(self, capsys, tmp_path):
        path = tmp_path / "w.txt"
        path.write_text(format_edge_list(build_witness()))
        code, out, _ = run(capsys, "analyze", "--edges", str(path))
        assert code == 0
        payload = json.loads(out)
        assert payload["longest_path_length"] == 9
        assert payload["violation"]["ell"] == 9


class TestEnumerateAndCount:
    def test_enumerate_stdout(self, capsys):
        code, out, err = run(capsys, "enumerate", "--n", "3")
        assert code == 0
        assert len(out.split()) == 2  # P3 and K3
        assert "2 graphs" in err

    def test_enumerate_sharded_partition(self, capsys, tmp_path):
        lines: list[str] = []
        for sid in range(3):
            path = tmp_path / f"s{sid}.g6"
            code, _, _ = run(
                capsys, "enumerate", "--n", "6",
                "--shard", f"{sid}/3", "--out-g6", str(path),
            )
            assert code == 0
            lines.extend(path.read_text().split())
        assert len(lines) == CONNECTED_COUNTS[6]
        assert len(set(lines)) == len(lines)

    def test_count(self, capsys):
        code, out, _ = run(capsys, "count", "--n", "5")
        assert code == 0 and out.strip() == "21"


class TestLemmasCommand:
    def test_families_selectable(self, capsys):
        code, out, _ = run(capsys, "lemmas", "--remark", "--json")
        assert code == 0
        results = json.loads(out)
        assert results and all(r["family"] == "min-distance" for r in results)
        assert all(r["passed"] for r in results)

    def test_human_output(self, capsys):
        code, out, _ = run(capsys, "lemmas", "--lollipop")
        assert code == 0
        assert "lemma checks passed" in out


class TestUsageErrors:
    def test_missing_subcommand(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_verify_needs_n(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify"])
        assert exc.value.code == 2
