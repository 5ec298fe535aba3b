import json
import subprocess
import sys

import pytest

from uberhom.cli import main
from uberhom.graphs import cycle, emit_edge_list, emit_graph6, petersen


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_bold_cycle(capsys):
    code, doc = run_json(capsys, "bold", "--family", "cycle", "--params", "5")
    assert code == 0
    assert doc["ranks"] == {"3": 1}
    assert doc["schema_version"] == 1 and doc["field"] == "GF(2)"
    assert doc["input"] == {"family": "cycle", "params": ["5"], "n": 5, "m": 5}
    assert "seconds" in doc["timing"]


def test_bold_fields_and_paths(capsys):
    for field in ("3", "Q"):
        for via in ("dh", "ch", "both"):
            code, doc = run_json(capsys, "bold", "--family", "complete_bipartite", "--params", "2,3",
                                 "--field", field, "--via", via)
            assert code == 0 and doc["ranks"] == {"2": 1}


def test_euler_petersen(capsys):
    code, doc = run_json(capsys, "euler", "--family", "petersen")
    assert code == 0
    assert (doc["chi"], doc["dc_at_minus1"], doc["pass"]) == (-1, -1, True)


def test_domp_connected_only(capsys):
    code, doc = run_json(capsys, "domp", "--g6", emit_graph6(cycle(4)), "--connected-only")
    assert code == 0 and doc["connected"] == [0, 0, 4, 4, 1]
    assert "dominating" not in doc
    code, doc = run_json(capsys, "domp", "--g6", emit_graph6(cycle(4)))
    assert doc["dominating"] == [0, 0, 6, 4, 1]


def test_uber(capsys):
    code, doc = run_json(capsys, "uber", "--family", "complete", "--params", "2")
    assert code == 0 and doc["ranks"] == {"0,0,1": 2, "0,1,2": 1, "1,0,0": 1}


def test_reduce(capsys, tmp_path):
    path = tmp_path / "p.txt"
    path.write_text(emit_edge_list(petersen()))
    code, doc = run_json(capsys, "reduce", "--edges", str(path))
    assert code == 0
    assert doc["dh_generators"] == {"4": 10, "5": 72, "6": 135, "7": 110, "8": 45, "9": 10, "10": 1}
    m = doc["matching"]
    assert m["certified"] and m["critical_equals_dh"] and m["critical"] == doc["dh_total"] == 383
    assert m["ch_generators"] == m["critical"] + 2 * m["pairs"]


def test_table1_subset(capsys):
    code, doc = run_json(capsys, "table1", "--only", "C_n")
    assert code == 0 and doc["summary"] == {"PASS": 7, "FAIL": 0, "SKIP": 0}
    code, out, _ = run(capsys, "table1", "--only", "Cube(5)")
    assert code == 0 and "SKIP" in out and "1 skipped" in out


def test_usage_errors(capsys):
    code, out, err = run(capsys, "bold", "--g6", "D?")
    assert code == 2 and "offset" in err and out == ""
    code, _, err = run(capsys, "bold", "--family", "cycle", "--params", "2")
    assert code == 2 and "n >= 3" in err
    code, _, err = run(capsys, "uber", "--family", "cube", "--params", "4")
    assert code == 2 and "--force" in err
    code, _, err = run(capsys, "bold", "--edges", "/nonexistent/file")
    assert code == 2 and "cannot read" in err
    code, _, err = run(capsys, "bold")
    assert code == 2
    code, _, err = run(capsys, "bold", "--family", "cycle", "--params", "5", "--field", "4")
    assert code == 2


def test_json_stable(capsys):
    docs = []
    for _ in range(2):
        code, doc = run_json(capsys, "bold", "--family", "random_connected", "--params", "7", "--seed", "3")
        doc.pop("timing")
        docs.append(json.dumps(doc, sort_keys=True))
    assert docs[0] == docs[1]


def test_text_output(capsys):
    code, out, _ = run(capsys, "bold", "--family", "cycle", "--params", "6")
    assert code == 0 and "ranks:" in out and "4  1" in out


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "uberhom", "bold", "--family", "cycle", "--params", "4", "--json"],
                       capture_output=True, text=True, check=False)
    assert p.returncode == 0 and json.loads(p.stdout)["ranks"] == {"2": 1}
