from __future__ import annotations

import json

import pytest

from graphcode import format_graph, uncoded, scheme_to_graph
from graphcode.cli import main
from graphcode.constructions import algorithm1, format_scheme
from conftest import MIN_CUT_TABLE, PROBABILITY_TABLES, triangle


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_construct_writes_scheme(tmp_path, capsys):
    out = tmp_path / "g4.scheme"
    code, _, err = run(
        capsys, "construct", "alg1", "--n", "9", "--r", "2", "--k", "3",
        "--loops", "4", "--out", str(out),
    )
    assert code == 0
    assert out.read_text() == format_scheme(algorithm1(9, 2, 3, 4))
    assert err == ""


def test_construct_warns_outside_guarantees(capsys):
    code, out, err = run(capsys, "construct", "alg1", "--n", "9", "--r", "2",
                         "--k", "3", "--loops", "0")
    assert code == 0
    assert "warning" in err
    assert out.splitlines()[0] == "9 18"


def test_construct_usage_error(capsys):
    code, _, err = run(capsys, "construct", "alg1", "--n", "9", "--r", "2")
    assert code == 1
    assert "usage error" in err


def test_construct_invalid_params_exit_one(capsys):
    code, _, err = run(capsys, "construct", "alg1", "--n", "9", "--r", "2",
                       "--k", "4", "--loops", "0")
    assert code == 1
    assert "error" in err


def test_analyze_triangle(tmp_path, capsys):
    path = tmp_path / "tri.graph"
    path.write_text(format_graph(triangle()))
    code, out, _ = run(capsys, "analyze", str(path), "--parity", "odd", "--p", "0.5")
    assert code == 0
    assert "P(p=0.5) = 0.125000" in out
    assert "b = 1" in out


def test_analyze_reference_value(tmp_path, capsys):
    path = tmp_path / "g3.graph"
    path.write_text(format_scheme(algorithm1(9, 2, 3, 3)))  # same text format
    code, out, _ = run(capsys, "analyze", str(path), "--parity", "even", "--p", "0.6")
    assert code == 0
    assert "0.607826" in out


def test_analyze_json(tmp_path, capsys):
    path = tmp_path / "tri.graph"
    path.write_text(format_graph(triangle()))
    code, out, _ = run(capsys, "analyze", str(path), "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["parities"]["odd"]["spectrum"] == [1, 0, 0, 0]
    assert payload["parities"]["even"]["b"] == 0


def test_analyze_csv(tmp_path, capsys):
    path = tmp_path / "tri.graph"
    path.write_text(format_graph(triangle()))
    code, out, _ = run(capsys, "analyze", str(path), "--format", "csv",
                       "--parity", "odd", "--p", "0.5")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "parity,quantity,index,value"
    assert "odd,c,0,1" in lines
    assert "odd,P,0.5,0.125000" in lines


def test_analyze_missing_file(capsys):
    code, _, err = run(capsys, "analyze", "/nonexistent.graph")
    assert code == 1 and "cannot read" in err


def test_analyze_size_cap_exit_two(tmp_path, capsys):
    path = tmp_path / "big.graph"
    path.write_text(format_graph(scheme_to_graph(uncoded(9, 3))))  # 27 edges
    code, _, err = run(capsys, "analyze", str(path))
    assert code == 2
    assert "cap" in err


def test_bounds_csv(tmp_path, capsys):
    path = tmp_path / "tri.graph"
    path.write_text(format_graph(triangle()))
    code, out, _ = run(capsys, "bounds", str(path))
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "lemma_id,hypothesis_ok,bound_value,exact_value,satisfied"
    ids = {line.split(",")[0] for line in lines[1:]}
    assert "odd.delta_I" in ids and "even.min_L_delta" in ids


def test_reproduce_min_cut_table(capsys):
    code, out, _ = run(capsys, "reproduce", "--table", "b")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "graph,even,odd"
    got = {row.split(",")[0]: tuple(map(int, row.split(",")[1:])) for row in lines[1:]}
    assert got == MIN_CUT_TABLE


@pytest.mark.parametrize("table,p", [("p06", 0.6), ("p07", 0.7), ("p08", 0.8)])
def test_reproduce_probability_tables(capsys, table, p):
    code, out, _ = run(capsys, "reproduce", "--table", table)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "graph,even,odd"
    expected_lines = [
        f"{label},{even:.6f},{odd:.6f}"
        for label, (even, odd) in PROBABILITY_TABLES[p].items()
    ]
    assert lines[1:] == expected_lines


def test_reproduce_figure(tmp_path, capsys):
    code, out, _ = run(capsys, "reproduce", "--figure", "even-curves",
                       "--out", str(tmp_path))
    assert code == 0
    csv_path = tmp_path / "even-curves.csv"
    png_path = tmp_path / "even-curves.png"
    assert csv_path.exists() and png_path.stat().st_size > 0
    lines = csv_path.read_text().strip().splitlines()
    assert lines[0] == "p,G_3,G',G"
    assert len(lines) == 102
    by_p = {line.split(",")[0]: line.split(",") for line in lines[1:]}
    assert by_p["0.60"][1] == "0.607826"
    assert by_p["1.00"][1] == "1.000000"


def test_reproduce_requires_exactly_one_mode(capsys):
    code, _, err = run(capsys, "reproduce")
    assert code == 1 and "usage error" in err
    code, _, err = run(capsys, "reproduce", "--table", "b", "--figure", "even-curves")
    assert code == 1


def test_simulate_json(tmp_path, capsys):
    path = tmp_path / "g4.scheme"
    path.write_text(format_scheme(algorithm1(9, 2, 3, 4)))
    code, out, _ = run(capsys, "simulate", str(path), "--field", "2", "--p", "0.8",
                       "--trials", "2000", "--seed", "11")
    assert code == 0
    payload = json.loads(out)
    assert payload["trials"] == 2000
    assert payload["exact"] is not None
    assert payload["agrees_within_4se"] is True
    assert 0 <= payload["estimate"] <= 1


def test_threads_env_fallback(tmp_path, capsys, monkeypatch):
    path = tmp_path / "tri.graph"
    path.write_text(format_graph(triangle()))
    monkeypatch.setenv("GRAPHCODE_THREADS", "2")
    code, out, _ = run(capsys, "analyze", str(path), "--parity", "odd", "--p", "0.5")
    assert code == 0 and "0.125000" in out
    monkeypatch.setenv("GRAPHCODE_THREADS", "junk")
    code, _, err = run(capsys, "analyze", str(path))
    assert code == 1 and "GRAPHCODE_THREADS" in err
