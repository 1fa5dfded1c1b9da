import csv
import io
import json
import subprocess
import sys

import pytest

from edgesum.cli import BENCH_COLUMNS, EXIT_BUDGET, EXIT_OK, EXIT_PRECONDITION, generate, run
from edgesum.generators import gen_path
from edgesum.io import to_json


def _json(argv):
    code, text = run(argv + ["--format", "json"])
    return code, json.loads(text)


def test_approx_complete4():
    code, doc = _json(["approx", "--gen", "complete:4"])
    assert code == EXIT_OK
    assert doc["achieved_sum"] == "12/1" and doc["lower_bound"] == "12/1"
    assert doc["achieved_ratio_vs_lower"] == "1/1"


def test_approx_random_cubic():
    code, doc = _json(["approx", "--gen", "random-regular:10,3", "--seed", "7"])
    assert code == EXIT_OK
    assert doc["sequential_set_size"] >= 3
    assert doc["formula_upper"] == "165/4"


def test_approx_rejects_path(tmp_path):
    path = tmp_path / "p.json"
    path.write_text(to_json(gen_path(4)))
    code, text = run(["approx", "--input", str(path)])
    assert code == EXIT_PRECONDITION and "regularity required" in text


def test_exact_complete5():
    code, doc = _json(["exact", "--gen", "complete:5"])
    assert code == EXIT_OK and doc["sum"] == 30 and doc["optimal"] is True


def test_exact_budget_exit_code():
    code, doc = _json(["exact", "--gen", "petersen", "--budget-ms", "0"])
    assert code == EXIT_BUDGET and doc["optimal"] is False


def test_split_command(tmp_path):
    doc = {"n": 4, "edges": [[0, 1], [0, 2], [1, 2], [0, 3], [1, 3], [2, 3]],
           "split_partition": {"C": [0, 1, 2], "I": [3]}}
    path = tmp_path / "s.json"
    path.write_text(json.dumps(doc))
    code, out = _json(["split", "--input", str(path), "--condition", "thm11"])
    assert code == EXIT_OK
    assert (out["term_clique_high"], out["term_clique_low"], out["bound"]) == (21, 21, 21)
    code, _ = run(["split", "--gen", "complete:4"])
    assert code == EXIT_PRECONDITION


def test_useq_command():
    code, doc = _json(["useq", "--gen", "complete-bipartite:3,3"])
    assert code == EXIT_OK and doc["sum"] == 18 == doc["formula_sum"] and doc["sequential"]


def test_verify_round_trip(tmp_path):
    graph = tmp_path / "g.json"
    code, text = run(["gen", "--gen", "petersen", "--format", "json"])
    graph.write_text(text)
    code, out = run(["approx", "--input", str(graph), "--format", "json"])
    coloring = tmp_path / "c.json"
    coloring.write_text(json.dumps(json.loads(out)["coloring"]))
    code, doc = _json(["verify", "--graph", str(graph), "--coloring", str(coloring)])
    assert code == EXIT_OK and doc["proper"] is True and doc["sum"] == json.loads(out)["coloring"]["sum"]
    coloring.write_text(json.dumps({"colors": [1] * 15}))
    code, doc = _json(["verify", "--graph", str(graph), "--coloring", str(coloring)])
    assert doc["proper"] is False


def test_gen_dimacs_and_split_spec(tmp_path):
    code, text = run(["gen", "--gen", "cycle:5"])
    assert code == EXIT_OK and "p edge 5 5" in text
    path = tmp_path / "c5.col"
    path.write_text(text)
    code, doc = _json(["exact", "--input", str(path)])
    assert doc["sum"] == 9
    parsed = generate("split:3,2,thm10", seed=1)
    assert parsed.split is not None and parsed.bipartition is None


@pytest.mark.parametrize("argv", [
    ["approx"],
    ["approx", "--gen", "complete:4", "--input", "x.json"],
    ["approx", "--gen", "bogus:1"],
    ["approx", "--input", "/nonexistent/graph.json"],
    ["exact", "--gen", "complete:9"],
])
def test_precondition_errors(argv):
    code, text = run(argv)
    assert code == EXIT_PRECONDITION and text.startswith("error:")


def test_output_flag(tmp_path):
    out = tmp_path / "r.json"
    code, text = run(["exact", "--gen", "complete:3", "--format", "json", "--output", str(out)])
    assert code == EXIT_OK and text == ""
    assert json.loads(out.read_text())["sum"] == 6


@pytest.mark.parametrize("argv", [
    ["approx", "--gen", "random-regular:12,3", "--seed", "3", "--format", "json"],
    ["split", "--gen", "split:3,3,thm11", "--seed", "9", "--format", "json"],
    ["bench", "--corpus", "complete"],
])
def test_byte_identical_output(argv):
    assert run(argv) == run(argv)


def test_bench_rows_all_pass():
    code, text = run(["bench", "--instances", "2", "--jobs", "2"])
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(text)))
    assert list(rows[0]) == BENCH_COLUMNS
    assert rows and all("fail" not in r["checks"] for r in rows)
    complete = [r for r in rows if r["family"] == "complete"]
    assert [int(r["exact_sum"]) for r in complete] == [1, 6, 12, 30, 45, 84]
    assert run(["bench", "--instances", "2"])[1] == text


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "edgesum.cli", "exact", "--gen", "complete:4", "--format", "csv"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1].startswith("12,True")
