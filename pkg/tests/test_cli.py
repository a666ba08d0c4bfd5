from __future__ import annotations

import csv
import io
import json

import pytest

from hyperseidel.cli import main
from hyperseidel.hypergraph import fixture_text, read_hypergraph


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_complete_bipartite(tmp_path, capsys):
    path = tmp_path / "c.json"
    code, out, _ = run(capsys, "gen", "complete-bipartite", "--k", "3", "--m", "3", "--n", "6", "--out", str(path))
    assert code == 0 and "edges: 63" in out
    assert path.read_text() == fixture_text("c3_3_6")


def test_gen_fixture_and_turan(tmp_path, capsys):
    code, out, _ = run(capsys, "gen", "fixture", "--name", "hstar", "--out", str(tmp_path / "h.json"))
    assert code == 0 and "edges: 6" in out
    code, out, err = run(capsys, "gen", "turan", "--n", "3", "--k", "3", "--r", "3")
    assert code == 0 and "edges: 1" in err and json.loads(out)["edges"] == [[1, 2, 3]]


def test_gen_bad_params(capsys):
    code, _, err = run(capsys, "gen", "complete-bipartite", "--k", "1", "--m", "2", "--n", "2")
    assert code == 2 and "error" in err


def test_spectrum_hstar(capsys):
    code, out, _ = run(capsys, "spectrum", "fixture:hstar", "--json")
    doc = json.loads(out)
    assert code == 0
    printed = [5.443, 1, 1, 1, -0.635, -7.808]
    assert max(abs(a - b) for a, b in zip(doc["eigenvalues"], printed)) < 5e-4
    assert doc["inertia"] == [4, 0, 2]


def test_spectrum_text_and_edgeless(tmp_path, capsys):
    path = tmp_path / "e.json"
    path.write_text('{"n": 3, "edges": []}')
    code, out, _ = run(capsys, "spectrum", str(path))
    assert code == 0
    assert "2  1" in out and "-1  2" in out and "trace residual" in out


def test_spectrum_is_deterministic(capsys):
    a = run(capsys, "spectrum", "fixture:c3_3_6")
    b = run(capsys, "spectrum", "fixture:c3_3_6")
    assert a == b


def test_energy(capsys):
    assert run(capsys, "energy", "fixture:hstar")[1].strip() == "16.8867097"
    assert run(capsys, "energy", "fixture:single_edge_5")[1].strip() == "8.0000000"
    iso = float(run(capsys, "energy", "fixture:hstar", "--delete-vertex", "4", "--mode", "isolate")[1])
    assert abs(iso - 18.336) < 5e-3
    strong = float(run(capsys, "energy", "fixture:hstar", "--delete-vertex", "4")[1])
    assert strong > 16.887


def test_energy_bad_file(capsys):
    assert run(capsys, "energy", "/nonexistent.json")[0] == 2
    assert run(capsys, "energy", "fixture:nope")[0] == 2


def test_seidel_tol_env(monkeypatch, capsys):
    monkeypatch.setenv("SEIDEL_TOL", "junk")
    assert run(capsys, "energy", "fixture:hstar")[0] == 2
    monkeypatch.setenv("SEIDEL_TOL", "1e-10")
    assert run(capsys, "energy", "fixture:hstar")[1].strip() == "16.8867097"


def test_delete_edge_classified(tmp_path, capsys):
    src, dst = tmp_path / "c.json", tmp_path / "d.json"
    src.write_text(fixture_text("c3_3_6"))
    code, out, _ = run(capsys, "delete", str(src), "--edge", "1,2,4", "--out", str(dst))
    assert code == 0 and "TypeII" in out and "edges 62" in out
    assert dst.read_text() == fixture_text("c3_3_6_minus_type2")
    code, out, _ = run(capsys, "delete", str(src), "--edge", "1,4,5", "--out", str(dst))
    assert "TypeI\n" in out


def test_delete_vertex_modes(tmp_path, capsys):
    dst = tmp_path / "d.json"
    code, out, _ = run(capsys, "delete", "fixture:hstar", "--vertex", "4", "--mode", "strong", "--out", str(dst))
    h = read_hypergraph(dst)
    assert (h.n, len(h.edges)) == (5, 4)
    run(capsys, "delete", "fixture:hstar", "--vertex", "4", "--mode", "weak", "--out", str(dst))
    h = read_hypergraph(dst)
    assert (h.n, len(h.edges)) == (5, 6)


def test_delete_missing_target(capsys):
    assert run(capsys, "delete", "fixture:c3_3_6", "--edge", "1,2,3")[0] == 2
    assert run(capsys, "delete", "fixture:c3_3_6", "--vertex", "10")[0] == 2
    assert run(capsys, "delete", "fixture:c3_3_6")[0] == 2


def test_quotient_commands(capsys):
    code, out, _ = run(capsys, "quotient", "fixture:c3_3_6", "--partition", "1-3|4-9")
    assert code == 0 and "-22 -78" in out and "x^2 + 47*x - 2492" in out
    code, out, _ = run(capsys, "quotient", "fixture:c3_3_6_minus_type1", "--partition", "1|4|5|2-3|6-9")
    assert code == 0 and "x^5 + 26*x^4 - 3232*x^3 + 54230*x^2 - 293585*x + 477600" in out
    code, out, _ = run(capsys, "quotient", "fixture:c3_3_6", "--partition", "1-2|3-9")
    assert code == 4 and "witness" in out
    assert run(capsys, "quotient", "fixture:c3_3_6", "--partition", "1-3")[0] == 2


def test_verify_pass_and_unknown(tmp_path, capsys):
    out_path = tmp_path / "r.jsonl"
    code, _, err = run(capsys, "verify", "--suite", "xi-exact", "--m-range", "2:4", "--n-range", "3:4",
                       "--out", str(out_path))
    assert code == 0 and "0 fail" in err
    rows = [json.loads(line) for line in out_path.read_text().splitlines()]
    assert len(rows) == 3 * 2 * 3 and all(r["status"] == "pass" for r in rows)
    assert run(capsys, "verify", "--suite", "nope")[0] == 2
    assert run(capsys, "verify", "--suite", "t9-spectrum", "--m-range", "2:3")[0] == 2


def test_verify_reported_rows_do_not_fail(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "observation-spectra", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and {r["status"] for r in rows} == {"reported"}


def test_verify_jobs_same_output(capsys):
    a = run(capsys, "verify", "--suite", "t4-spectrum", "--m-range", "2:4", "--n-range", "2:4")
    b = run(capsys, "verify", "--suite", "t4-spectrum", "--m-range", "2:4", "--n-range", "2:4", "--jobs", "2")
    assert a[1] == b[1]


def test_sweep(tmp_path, capsys):
    out_path = tmp_path / "s.csv"
    assert run(capsys, "sweep", "--quantity", "energy", "--m-range", "2:4", "--n-range", "2:5",
               "--out", str(out_path))[0] == 0
    rows = list(csv.DictReader(out_path.open()))
    first = rows[0]
    assert (first["m"], first["n"], first["U"]) == ("2", "2", "144")
    assert float(first["closed_energy"]) == pytest.approx(18.0)
    assert all(float(r["abs_diff"]) < 1e-7 for r in rows)
    for m in ("2", "3", "4"):
        col = [float(r["closed_energy"]) for r in rows if r["m"] == m]
        assert col == sorted(col) and len(set(col)) == len(col)
    code, out, _ = run(capsys, "sweep", "--quantity", "spectrum", "--m-range", "2", "--n-range", "3")
    assert code == 0 and out.startswith("m,n,closed_spectrum")
    assert run(capsys, "sweep", "--m-range", "1:3", "--n-range", "2:3")[0] == 2
    assert run(capsys, "sweep", "--m-range", "x", "--n-range", "2:3")[0] == 2


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    assert main(["bogus"]) == 2
