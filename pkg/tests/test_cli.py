import json
from pathlib import Path

from termpair.cli import parse_range, run
from termpair.constructions import triangle_demand
from termpair.io import format_demand, read_demand

GOLDEN = Path(__file__).parent / "golden" / "triangle_sweep_n3-9.json"


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_gen_round_trip(tmp_path):
    out = tmp_path / "d.dem"
    assert run(["gen", "--family", "triangle", "--n", "6", "--q", "4", "--out", str(out)]) == 0
    assert read_demand(out) == triangle_demand(6, 4)
    assert out.read_text() == format_demand(triangle_demand(6, 4))
    assert len(out.read_text().splitlines()) == 7


def test_gen_relabel_is_seeded(tmp_path):
    a, b = tmp_path / "a.dem", tmp_path / "b.dem"
    for p in (a, b):
        run(["gen", "--family", "triangle", "--n", "9", "--q", "4", "--relabel", "5", "--out", str(p)])
    assert a.read_text() == b.read_text() != format_demand(triangle_demand(9, 4))


def test_gen_rejects_odd_q(capsys):
    assert run(["gen", "--family", "triangle", "--n", "6", "--q", "3"]) == 64


def test_solve_not_realizable(tmp_path, capsys):
    d = tmp_path / "d.dem"
    run(["gen", "--family", "triangle", "--n", "6", "--q", "4", "--out", str(d)])
    assert run(["solve", "--host", "complete:6", "--demand", str(d), "--json"]) == 1
    doc = _json(capsys)
    assert doc["status"] == "not_realizable" and doc["schema"] == 1


def test_solve_verify_analyze_pipeline(tmp_path, capsys):
    d, p = tmp_path / "d.dem", tmp_path / "p.json"
    run(["gen", "--family", "triangle", "--n", "9", "--q", "4", "--out", str(d)])
    assert run(["solve", "--host", "complete:9", "--demand", str(d), "--out", str(p), "--json"]) == 0
    assert _json(capsys)["status"] == "realizable"
    assert run(["verify", "--host", "complete:9", "--demand", str(d), "--paths", str(p), "--json"]) == 0
    assert _json(capsys)["valid"]
    assert run(["analyze", "--demand", str(d), "--paths", str(p), "--json"]) == 0
    doc = _json(capsys)
    assert doc["check"]["passed"] and doc["q"] == 4

    broken = json.loads(p.read_text())
    broken["paths"][1]["path"] = broken["paths"][0]["path"]
    p.write_text(json.dumps(broken))
    assert run(["verify", "--host", "complete:9", "--demand", str(d), "--paths", str(p), "--json"]) == 1
    assert "edge_reused" in {v["kind"] for v in _json(capsys)["violations"]}


def test_solve_exhausted_exit_code(tmp_path, capsys):
    d = tmp_path / "d.dem"
    run(["gen", "--family", "triangle", "--n", "12", "--q", "6", "--out", str(d)])
    assert run(["solve", "--host", "complete:12", "--demand", str(d), "--node-budget", "50", "--json"]) == 2
    assert _json(capsys)["status"] == "exhausted"


def test_host_file_and_bipartite(tmp_path, capsys):
    d, h = tmp_path / "d.dem", tmp_path / "h.txt"
    run(["gen", "--family", "bipartite_one_factor", "--n", "3", "--out", str(d)])
    h.write_text("# K_{3,3}\nbipartite 3 3\n")
    assert run(["solve", "--host", str(h), "--demand", str(d), "--json"]) == 0
    assert run(["solve", "--host", "bipartite:3,3", "--demand", str(d)]) == 0


def test_input_errors(tmp_path, capsys):
    bad = tmp_path / "bad.dem"
    bad.write_text("3 2\n0 1 1\n")
    assert run(["solve", "--host", "complete:3", "--demand", str(bad)]) == 65
    assert run(["solve", "--host", "complete:3", "--demand", str(tmp_path / "missing.dem")]) == 65
    good = tmp_path / "g.dem"
    good.write_text("3 1\n0 1 1\n")
    assert run(["solve", "--host", "complete:4", "--demand", str(good)]) == 64
    assert run(["solve", "--demand", str(good)]) == 64
    assert run(["bounds", "--n", "5", "--q", "2"]) == 64
    assert run(["sweep", "--family", "triangle", "--n", "x..y", "--q", "2"]) == 64


def test_analyze_flags_non_triangle_input(tmp_path, capsys):
    d, p = tmp_path / "d.dem", tmp_path / "p.json"
    d.write_text("6 1\n0 3 1\n")
    p.write_text(json.dumps({"paths": [{"demand": [0, 3], "copy": 0, "path": [0, 3]}]}))
    assert run(["analyze", "--demand", str(d), "--paths", str(p)]) == 65


def test_bounds_json(capsys):
    assert run(["bounds", "--n", "27", "--q", "14", "--json"]) == 0
    doc = _json(capsys)
    assert doc["q_max_triangle"] == {"num": 14, "den": 1}
    assert doc["schema"] == 1


def test_parse_range():
    assert parse_range("3..9:3") == [3, 6, 9]
    assert parse_range("2..4") == [2, 3, 4]
    assert parse_range("2,6") == [2, 6]


def test_sweep_matches_golden_file(capsys):
    assert run(["sweep", "--family", "triangle", "--n", "3..9:3", "--q", "2..6:2", "--no-timing", "--json"]) == 0
    assert capsys.readouterr().out == GOLDEN.read_text()


def test_solve_exit_codes_match_sweep_rows(tmp_path, capsys):
    codes = {"realizable": 0, "refuted_by_counting": 1, "not_realizable": 1, "exhausted": 2}
    for row in json.loads(GOLDEN.read_text())["rows"]:
        d = tmp_path / f"{row['n']}_{row['q']}.dem"
        run(["gen", "--family", "triangle", "--n", str(row["n"]), "--q", str(row["q"]), "--out", str(d)])
        code = run(["solve", "--host", f"complete:{row['n']}", "--demand", str(d), "--json"])
        assert code == codes[row["outcome"]], row
        assert _json(capsys)["status"] == ("not_realizable" if code == 1 else row["outcome"])


def test_sweep_human_table(capsys):
    assert run(["sweep", "--family", "bipartite_one_factor", "--n", "3,6"]) == 0
    out = capsys.readouterr().out
    assert out.count("realizable") == 2
