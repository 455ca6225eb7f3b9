"""End-to-end CLI behavior via click's test runner."""

from __future__ import annotations

import json

import pytest
from click.testing import CliRunner

from starhalin.cli import main
from starhalin.graphs import HalinGraph
from starhalin.verify import EdgeColoring


@pytest.fixture
def runner():
    return CliRunner()


def run(runner, *args, **kw):
    return runner.invoke(main, list(args), catch_exceptions=False, **kw)


def test_gen_emits_valid_graph_json(runner):
    res = run(runner, "gen", "complete", "--level", "2")
    assert res.exit_code == 0
    g = HalinGraph.from_json(res.stdout.strip())
    g.validate()
    assert g.n == 10


def test_gen_caterpillar_and_necklace_agree(runner):
    a = run(runner, "gen", "caterpillar", "--h", "4", "--sides", "LL")
    b = run(runner, "gen", "necklace", "--h", "4")
    assert a.stdout == b.stdout


def test_gen_rejects_bad_sides(runner):
    res = run(runner, "gen", "caterpillar", "--h", "5", "--sides", "LRX")
    assert res.exit_code == 2


def test_color_check_round_trip(runner, tmp_path):
    res = run(runner, "color", "complete", "--level", "4", "--check")
    assert res.exit_code == 0
    graph_line, coloring_line = res.stdout.strip().splitlines()
    (tmp_path / "g.json").write_text(graph_line)
    (tmp_path / "c.json").write_text(coloring_line)
    ver = run(
        runner, "verify",
        "--graph", str(tmp_path / "g.json"),
        "--coloring", str(tmp_path / "c.json"),
    )
    assert ver.exit_code == 0
    assert ver.stdout == ""  # all machine output channels stay clean


def test_color_h2_emits_six_color_witness(runner):
    res = run(runner, "color", "caterpillar", "--h", "2", "--check")
    assert res.exit_code == 0
    coloring = EdgeColoring.from_json(res.stdout.strip().splitlines()[1])
    assert max(coloring.colors_used()) == 6


def test_verify_flags_violations_as_json_lines(runner, tmp_path):
    gen = run(runner, "gen", "complete", "--level", "1")
    (tmp_path / "g.json").write_text(gen.stdout)
    bad = EdgeColoring(
        2, {(0, 1): 1, (0, 2): 2, (0, 3): 1, (1, 2): 1, (1, 3): 2, (2, 3): 2}
    )
    (tmp_path / "c.json").write_text(bad.to_json())
    res = run(
        runner, "verify",
        "--graph", str(tmp_path / "g.json"),
        "--coloring", str(tmp_path / "c.json"),
    )
    assert res.exit_code == 1
    lines = [json.loads(l) for l in res.stdout.strip().splitlines()]
    assert all({"kind", "witness"} <= set(l) for l in lines)


def test_chi_reports_six_for_the_h2_necklace(runner, tmp_path):
    gen = run(runner, "gen", "necklace", "--h", "2")
    (tmp_path / "g.json").write_text(gen.stdout)
    res = run(runner, "chi", "--graph", str(tmp_path / "g.json"))
    assert res.exit_code == 0
    first, witness = res.stdout.strip().splitlines()
    assert json.loads(first) == {"chi": 6}
    assert EdgeColoring.from_json(witness).k == 6


def test_chi_requires_limit_on_big_graphs(runner, tmp_path):
    gen = run(runner, "gen", "complete", "--level", "3")  # 33 edges < 40
    (tmp_path / "ok.json").write_text(gen.stdout)
    gen = run(runner, "gen", "complete", "--level", "4")  # 69 edges
    (tmp_path / "big.json").write_text(gen.stdout)
    res = run(runner, "chi", "--graph", str(tmp_path / "big.json"))
    assert res.exit_code == 2
    res = run(
        runner, "chi", "--graph", str(tmp_path / "big.json"),
        "--node-limit", "10",
    )
    assert res.exit_code == 3


def test_sweep_reports_every_instance(runner):
    res = run(runner, "sweep", "caterpillar", "--max-h", "4")
    assert res.exit_code == 0
    lines = [json.loads(l) for l in res.stdout.strip().splitlines()]
    assert len(lines) == 1 + 1 + 2 + 4
    assert all(l["verified"] for l in lines)
    k_by_h = {l["spec"]["h"]: l["k_used"] for l in lines}
    assert k_by_h[2] == 6 and k_by_h[4] == 5


def test_sweep_sample_limits_instances(runner):
    res = run(runner, "sweep", "caterpillar", "--max-h", "5", "--sample", "3")
    assert res.exit_code == 0
    assert len(res.stdout.strip().splitlines()) == 3


def test_export_dot_includes_palette_colors(runner, tmp_path):
    res = run(runner, "color", "complete", "--level", "1")
    graph_line, coloring_line = res.stdout.strip().splitlines()
    (tmp_path / "g.json").write_text(graph_line)
    (tmp_path / "c.json").write_text(coloring_line)
    dot = run(
        runner, "export-dot",
        "--graph", str(tmp_path / "g.json"),
        "--coloring", str(tmp_path / "c.json"),
    )
    assert dot.exit_code == 0
    assert dot.stdout.startswith("graph halin {")
    assert "color=" in dot.stdout and "--" in dot.stdout
    plain = run(runner, "export-dot", "--graph", str(tmp_path / "g.json"))
    assert plain.exit_code == 0
    assert "color=" not in plain.stdout
