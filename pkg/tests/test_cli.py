import json
import shutil

import pytest

from quasitree import tables
from quasitree.cli import main
from quasitree.ribbon import build_all_a_ribbon_graph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_q_knotscape(capsys):
    code, out, _ = run(capsys, "q", str(tables.fixture_path(tables.KNOTSCAPE)))
    assert code == 0
    assert "Turaev genus  1" in out
    assert "q(t)          9 + 24t" in out


def test_q_trefoil(capsys):
    code, out, _ = run(capsys, "q", str(tables.fixture_path("trefoil.pd")))
    assert code == 0
    assert "Turaev genus  0" in out
    assert "q(t)          3\n" in out


def test_q_json(capsys):
    code, out, _ = run(capsys, "q", "--format", "json", str(tables.fixture_path(tables.KNOTATLAS_R3)))
    assert code == 0
    doc = json.loads(out)
    assert list(doc) == ["name", "crossings", "s_a", "s_b", "turaev_genus", "map", "q", "det",
                         "q_at_minus_1"]
    assert doc["turaev_genus"] == 1
    assert doc["q"] == [21, 6]
    assert doc["map"] == {"v": doc["s_a"], "e": 8, "f": doc["s_b"], "g": 1}
    assert doc["det"] == abs(doc["q_at_minus_1"]) == 15


def test_q_json_is_deterministic(capsys):
    path = str(tables.fixture_path(tables.KNOTSCAPE))
    outs = {run(capsys, "q", "--format", "json", path)[1] for _ in range(3)}
    outs.add(run(capsys, "q", "--format", "json", "--jobs", "2", path)[1])
    assert len(outs) == 1


def test_q_all_b(capsys):
    code, out, _ = run(capsys, "q", "--all-b", "--format", "json", str(tables.fixture_path(tables.KNOTSCAPE)))
    assert code == 0
    assert json.loads(out)["q"] == [24, 9]


def test_q_bad_input(capsys, tmp_path):
    bad = tmp_path / "bad.pd"
    bad.write_text("X(1,4,2,5) X(1,4,2,5)\n")
    code, _, err = run(capsys, "q", str(bad))
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "q", str(tmp_path / "missing.pd"))
    assert code == 2


def test_r3_command(capsys):
    code, out, _ = run(capsys, "r3", str(tables.fixture_path(tables.KNOTATLAS)), "--face", str(tables.r3_face()))
    assert code == 0
    assert out.strip() == tables.load_fixture(tables.KNOTATLAS_R3).to_text()
    code, _, err = run(capsys, "r3", str(tables.fixture_path(tables.KNOTATLAS)), "--face", "2")
    assert code == 2 and "sides" in err


def test_counterexample(capsys):
    code, out, _ = run(capsys, "counterexample")
    assert code == 0
    assert "21 + 6t" in out and "9 + 24t" in out
    assert "q is NOT a knot invariant" in out
    assert "FAIL" not in out


def test_counterexample_corrupted_fixture(capsys, tmp_path):
    for name in (tables.KNOTATLAS, tables.KNOTSCAPE):
        shutil.copy(tables.fixture_path(name), tmp_path / name)
    # swap the KnotScape diagram for its mirror image: q becomes 24 + 9t
    from quasitree.diagram import mirror

    scape = tables.load_fixture(tables.KNOTSCAPE)
    (tmp_path / tables.KNOTSCAPE).write_text(mirror(scape).to_text() + "\n")
    code, out, _ = run(capsys, "counterexample", "--fixtures", str(tmp_path))
    assert code == 1
    assert "FAIL  KnotScape: q(t) coefficients" in out

    (tmp_path / tables.KNOTATLAS).write_text("X(1,4,2,5) X(1,4,2,5)\n")
    code, out, _ = run(capsys, "counterexample", "--fixtures", str(tmp_path))
    assert code == 1 and "fixtures unusable" in out


def test_verify_bundled_table(capsys):
    code, out, _ = run(capsys, "verify", str(tables.fixture_path(tables.KNOT_TABLE)))
    assert code == 0
    assert "PASS  8_21: |q(-1)| = 15, det = 15" in out
    assert out.strip().endswith("35 rows: 35 pass, 0 fail, 0 unreadable")


def test_verify_parallel_keeps_order(capsys):
    path = str(tables.fixture_path(tables.KNOT_TABLE))
    serial = run(capsys, "verify", path)[1]
    parallel = run(capsys, "verify", path, "--jobs", "4")[1]
    assert serial == parallel


def test_verify_row_without_det(capsys, tmp_path):
    table = tmp_path / "t.csv"
    scape = tables.load_fixture(tables.KNOTSCAPE).to_text()
    table.write_text(f"name,pd\n8_21,{scape}\n")
    code, out, _ = run(capsys, "verify", str(table))
    assert code == 0 and "PASS  8_21: |q(-1)| = 15, det = 15" in out


def test_verify_failure_and_bad_rows(capsys, tmp_path):
    table = tmp_path / "t.csv"
    table.write_text(
        "name,pd,det\n"
        "3_1,X(1;4;2;5),3\n"
        "3_1,X(1,4,2,5) X(3,6,4,1) X(5,2,6,3),5\n"
        "4_1,X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8),five\n"
    )
    code, out, _ = run(capsys, "verify", str(table))
    assert code == 2
    assert "ERROR line 2" in out and "FAIL  3_1" in out and "ERROR line 4" in out
    assert "1 rows: 0 pass, 1 fail, 2 unreadable" in out
    assert out.index("ERROR line 2") < out.index("FAIL  3_1") < out.index("ERROR line 4")

    table.write_text("name,pd,det\n3_1,X(1,4,2,5) X(3,6,4,1) X(5,2,6,3),5\n")
    assert run(capsys, "verify", str(table))[0] == 1


def test_verify_quoted_rows(capsys, tmp_path):
    table = tmp_path / "t.csv"
    table.write_text('name,pd,det\n3_1,"X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)",3\n')
    code, out, _ = run(capsys, "verify", str(table))
    assert code == 0 and "PASS  3_1" in out


def test_verify_empty(capsys, tmp_path):
    table = tmp_path / "empty.csv"
    table.write_text("")
    code, out, _ = run(capsys, "verify", str(table))
    assert code == 2
    assert "0 rows" in out


def test_brt_command(capsys, tmp_path):
    mapfile = tmp_path / "m.txt"
    mapfile.write_text("sigma: 2 3 1 0\nalpha: 1 0 3 2\n")
    code, out, _ = run(capsys, "brt", str(mapfile))
    assert code == 0
    assert "C(X,Y,Z) = 1 + 2*Y + Y^2Z" in out
    assert "q(t,Y)   = 1 + 2Y + t\n" in out
    code, out, _ = run(capsys, "brt", "--format", "json", str(mapfile))
    doc = json.loads(out)
    assert doc["C"] == [[1, 0, 0, 0], [2, 0, 1, 0], [1, 0, 2, 1]]
    assert doc["q_tY"] == [[1, 0, 0], [2, 0, 1], [1, 1, 0]]


def test_brt_of_built_map(capsys, tmp_path, knotscape):
    mapfile = tmp_path / "m.txt"
    mapfile.write_text(build_all_a_ribbon_graph(knotscape).to_text())
    code, out, _ = run(capsys, "brt", "--format", "json", str(mapfile))
    assert code == 0
    q0 = {g: c for c, g, y in json.loads(out)["q_tY"] if y == 0}
    assert q0 == {0: 9, 1: 24}


def test_brt_bad_map(capsys, tmp_path):
    mapfile = tmp_path / "m.txt"
    mapfile.write_text("sigma: 0 0\n")
    assert run(capsys, "brt", str(mapfile))[0] == 2


def test_module_entry_point():
    import subprocess
    import sys

    res = subprocess.run([sys.executable, "-m", "quasitree", "counterexample"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert "NOT a knot invariant" in res.stdout


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        main(["q"])
    assert info.value.code == 2
