import json

import pytest

from cspaceqb.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_analyze_g2(capsys):
    rc, out, _ = run(capsys, "analyze", "G2", "2", "--format", "markdown")
    assert rc == 0
    assert "dim = 5" in out
    assert "Ric = 9 g" in out
    assert "9.0000 8.5000 1.5000 1.5000" in out
    assert "QB > 0" in out


def test_analyze_f4_alpha3_fails(capsys):
    rc, out, _ = run(capsys, "analyze", "F4", "3", "--format", "markdown")
    assert rc == 0
    assert "does not satisfy QB >= 0" in out


def test_analyze_out_of_scope_exit_code(capsys):
    rc, _, err = run(capsys, "analyze", "B", "--n", "3", "--p", "1")
    assert rc == 2
    assert "scope" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["analyze", "Q9", "1"])
    assert exc.value.code == 64
    with pytest.raises(SystemExit) as exc:
        main(["bogus-command"])
    assert exc.value.code == 64


def test_missing_p_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["analyze", "G2"])
    assert exc.value.code == 64


def test_json_output_deterministic(capsys):
    rc1, out1, _ = run(capsys, "analyze", "E6", "2", "--format", "json")
    rc2, out2, _ = run(capsys, "analyze", "E6", "2", "--format", "json")
    assert rc1 == rc2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["status"] == "QB_POSITIVE"
    assert doc["m1_top4"] == [11.0, 5.5, 5.5, 5.5]


def test_sweep_boundary_row(capsys):
    rc, out, _ = run(capsys, "sweep", "B", "--n", "3..6", "--format", "markdown")
    assert rc == 0
    assert "| B4 | 3 |" in out
    row = next(line for line in out.splitlines() if "| B4 | 3 |" in line)
    assert "QB>=0" in row and "INCONCLUSIVE" in row and "True" in row


def test_sweep_c_small(capsys):
    rc, out, _ = run(capsys, "sweep", "C", "--n", "3..3", "--format", "csv")
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("algebra,p,dim,mu")
    assert lines[1].startswith("C3,2,7,5,")
    assert "QB_POSITIVE" in lines[1]


def test_sweep_d_single(capsys):
    rc, out, _ = run(capsys, "sweep", "D", "--n", "4..4", "--format", "json")
    assert rc == 0
    docs = json.loads(out)
    assert len(docs) == 1
    assert docs[0]["p"] == 2 and docs[0]["status"] == "QB_POSITIVE"


def test_roots_dump(capsys):
    rc, out, _ = run(capsys, "roots", "E7")
    assert rc == 0
    doc = json.loads(out)
    assert len(doc["positive_roots"]) == 63


def test_m1_dump_exact(capsys):
    rc, out, _ = run(capsys, "m1", "G2", "2")
    assert rc == 0
    assert out.splitlines()[0] == "2,5/2,3,0,3/2"


def test_z_dump_coo(capsys):
    rc, out, _ = run(capsys, "z", "G2", "2")
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == "row_pair,col_pair,value"
    assert len(lines) == 33  # 32 stored entries


def test_reproduce_targets(capsys):
    for target in ("g2-B", "g2-Z", "f4-tables", "e6-tables", "e7-tables", "e8-tables"):
        rc, out, _ = run(capsys, "reproduce", target)
        assert rc == 0, (target, out)
    with pytest.raises(SystemExit) as exc:
        main(["reproduce"])
    assert exc.value.code == 64
    rc, _, err = run(capsys, "reproduce", "nope")
    assert rc == 64


def test_output_file(tmp_path, capsys):
    out_file = tmp_path / "roots.json"
    rc, out, _ = run(capsys, "roots", "G2", "--out", str(out_file))
    assert rc == 0 and out == ""
    assert json.loads(out_file.read_text())["algebra"] == "G2"
