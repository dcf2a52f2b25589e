import json

import pytest

from arboreal.cli import EXIT_CLAIM, EXIT_GUARD, EXIT_INPUT, EXIT_OK, EXIT_USAGE, main
from arboreal.models import CaseRecord, HarnessSummary


@pytest.fixture
def exported(tmp_path):
    graph_path = tmp_path / "g0.txt"
    cycles_path = tmp_path / "c0.txt"
    assert main(["export", "0", "--graph", str(graph_path), "--cycles", str(cycles_path)]) == EXIT_OK
    return graph_path, cycles_path


def test_verify_octahedron(capsys):
    assert main(["verify", "0"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "Spanning trees: 384" in out
    assert "Verdict: counterexample verified" in out


def test_verify_writes_json(tmp_path):
    path = tmp_path / "report.json"
    assert main(["verify", "0", "--json", str(path), "--witnesses"]) == EXIT_OK
    report = json.loads(path.read_text())
    assert report["schema_version"] == 1
    assert report["verdict"] is True
    assert report["tree_count"] == "384"
    assert 3 in report["components"]
    assert len(report["witnesses"]) == 63


def test_verify_guard(capsys):
    assert main(["verify", "0", "--max-trees", "10"]) == EXIT_GUARD
    assert "Skipped:" in capsys.readouterr().err


def test_export_then_treegraph(exported, capsys):
    graph_path, cycles_path = exported
    assert main(["treegraph", str(graph_path), "--cycles", str(cycles_path), "--components"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("384 trees, ")
    assert "  3 trees (representative" in out


def test_treegraph_dot(exported, tmp_path):
    graph_path, _ = exported
    dot_path = tmp_path / "t.dot"
    assert main(["treegraph", str(graph_path), "--all", "--dot", str(dot_path)]) == EXIT_OK
    assert dot_path.read_text().startswith("graph T {")


def test_treegraph_on_triangle(tmp_path, capsys):
    path = tmp_path / "triangle.txt"
    path.write_text("V 3\nE 0 1\nE 1 2\nE 2 0\n")
    assert main(["treegraph", str(path), "--all"]) == EXIT_OK
    assert capsys.readouterr().out == "3 trees, 1 component\n"


def test_treegraph_rejects_non_cycle(tmp_path, capsys):
    graph_path = tmp_path / "triangle.txt"
    cycles_path = tmp_path / "bad.txt"
    graph_path.write_text("V 3\nE 0 1\nE 1 2\nE 2 0\n")
    cycles_path.write_text("0 1\n")
    assert main(["treegraph", str(graph_path), "--cycles", str(cycles_path)]) == EXIT_INPUT
    assert "line 1" in capsys.readouterr().err


def test_missing_file(tmp_path):
    assert main(["treegraph", str(tmp_path / "missing.txt"), "--all"]) == EXIT_INPUT


def test_treegraph_rejects_non_utf8(tmp_path, capsys):
    path = tmp_path / "binary.txt"
    path.write_bytes(b"V 3\nE 0 1\nE 1 2\nE 2 0\n\xff\xfe\n")
    assert main(["treegraph", str(path), "--all"]) == EXIT_INPUT
    assert "not UTF-8" in capsys.readouterr().err


def test_search_is_deterministic(tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["search", "--samples", "30", "--out", str(first)]) == EXIT_OK
    assert main(["search", "--samples", "30", "--out", str(second)]) == EXIT_OK
    assert first.read_text() == second.read_text()
    assert json.loads(first.read_text())["samples"] == 30


def _case(sample):
    return CaseRecord(sample=sample, vertices=3, edges=[[0, 1], [1, 2], [2, 0]], family=[], tree_count=3, components=3)


def test_search_exit_ignores_duality_discrepancies(monkeypatch, capsys):
    def fake_harness(config):
        return HarnessSummary(
            seed=config.seed, max_vertices=config.max_vertices, samples=config.samples,
            evaluated=1, duality_discrepancies=[_case(0)],
        )

    monkeypatch.setattr("arboreal.cli.random_harness", fake_harness)
    assert main(["search", "--samples", "1"]) == EXIT_OK
    assert "Duality discrepancies: 1" in capsys.readouterr().out


def test_search_fails_on_connected_but_not_spanning(monkeypatch):
    def fake_harness(config):
        return HarnessSummary(
            seed=config.seed, max_vertices=config.max_vertices, samples=config.samples,
            evaluated=1, connected_not_spanning=[_case(0)],
        )

    monkeypatch.setattr("arboreal.cli.random_harness", fake_harness)
    assert main(["search", "--samples", "1"]) == EXIT_CLAIM


def test_certify_octahedron(capsys):
    assert main(["certify"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "Two-face lemma:" in out
    assert "63 cycles, 0 failures" in out


@pytest.mark.parametrize("argv", [
    ["search", "--max-vertices", "12"],
    ["verify", "0", "--max-trees", "0"],
    ["verify", "-1"],
    ["frobnicate"],
    [],
])
def test_usage_errors(argv):
    assert main(argv) == EXIT_USAGE


def test_claim_exit_code_is_distinct():
    assert len({EXIT_OK, EXIT_GUARD, EXIT_CLAIM, EXIT_INPUT, EXIT_USAGE}) == 5
