import csv
import io
import json
import subprocess
import sys

import jsonschema
import pytest

from cosgrass import cli
from cosgrass.verify import Check

HEADER = "field,p,q,l,mu,lambda_re,lambda_im,eta_re,eta_im,status,method"


def run(capsys, *args):
    code = cli.main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_lattice_example(capsys):
    code, out, _ = run(capsys, "lattice", "--field", "R", "--p", "2", "--q", "3", "--max-degree", "4")
    assert code == 0
    assert [r["mu"] for r in rows(out)] == ["1-1", "3-1"]


def test_lattice_empty(capsys):
    code, out, _ = run(capsys, "lattice", "--field", "R", "--p", "2", "--q", "3", "--max-degree", "0")
    assert code == 0 and rows(out) == []


def test_lattice_constraint(capsys):
    code, _, err = run(capsys, "lattice", "--field", "R", "--p", "3", "--q", "4")
    assert code == 1 and "p = 2" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["lattice", "--field", "C", "--p", "1", "--q", "2"],
        ["lattice", "--field", "C", "--p", "1", "--q", "2", "--l", "0"],
        ["lattice", "--field", "X", "--p", "1", "--q", "2"],
        ["spectrum", "--field", "R", "--p", "2", "--q", "3"],
        ["spectrum", "--field", "R", "--p", "2", "--q", "3", "--lambda", "1:2"],
        ["spectrum", "--field", "R", "--p", "2", "--q", "3", "--lambda", "3:1:1"],
        ["verify", "transform"],
        ["verify", "nonsense"],
    ],
)
def test_config_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 1


def test_spectrum_values(capsys):
    code, out, _ = run(capsys, "spectrum", "--field", "C", "--p", "1", "--q", "2", "--l", "1",
                       "--lambda", "4:4:1", "--max-degree", "1")
    assert code == 0
    assert out.splitlines()[0] == HEADER
    (row,) = rows(out)
    assert row["mu"] == "1" and float(row["eta_re"]) == pytest.approx(1 / 3, rel=1e-15)
    assert row["eta_im"] == "0"
    assert row["eta_re"] == "0.33333333333333331"  # 17 significant digits


def test_spectrum_normalisation(capsys):
    _, out, _ = run(capsys, "spectrum", "--field", "R", "--p", "2", "--q", "3", "--lambda", "1.5:1.5:1",
                    "--max-degree", "2")
    assert float(rows(out)[0]["eta_re"]) == 1.0


def test_spectrum_pole_rows(capsys):
    _, out, _ = run(capsys, "spectrum", "--field", "C", "--p", "1", "--q", "2", "--l", "1",
                    "--lambda", "0:0:1", "--max-degree", "1")
    (row,) = rows(out)
    assert row["status"] == "pole" and row["eta_re"] == "" and row["eta_im"] == ""


def test_spectrum_ordering_and_cross_check(capsys):
    _, out, _ = run(capsys, "spectrum", "--field", "C", "--p", "2", "--q", "2", "--l", "1",
                    "--lambda", "2.5:4.5:1", "--max-degree", "6", "--cross-check")
    rs = rows(out)
    assert [r["mu"] for r in rs[::6]] == ["1-1", "3-1", "3-3", "5-1"]
    assert [r["method"] for r in rs[:2]] == ["closed", "recursive"]
    assert [r["lambda_re"] for r in rs[:6:2]] == ["2.5", "3.5", "4.5"]
    for a, b in zip(rs[::2], rs[1::2]):
        assert float(a["eta_re"]) == pytest.approx(float(b["eta_re"]), rel=1e-9, abs=1e-300)


def test_lambda_list(tmp_path, capsys):
    path = tmp_path / "lams.json"
    path.write_text(json.dumps([4, [4, 1], {"re": 4, "im": -1}, "3+2j"]))
    _, out, _ = run(capsys, "spectrum", "--field", "C", "--p", "1", "--q", "2", "--l", "1",
                    "--lambda-list", str(path), "--max-degree", "1")
    rs = rows(out)
    assert [(r["lambda_re"], r["lambda_im"]) for r in rs] == [("4", "0"), ("4", "1"), ("4", "-1"), ("3", "2")]
    assert float(rs[1]["eta_im"]) == pytest.approx(-float(rs[2]["eta_im"]))
    path.write_text('[true]')
    assert run(capsys, "spectrum", "--field", "C", "--p", "1", "--q", "2", "--l", "1",
               "--lambda-list", str(path))[0] == 1


def test_parse_grid_closed():
    assert cli.parse_grid("0:1:0.1")[-1] == pytest.approx(1.0)
    assert len(cli.parse_grid("0:1:0.1")) == 11
    assert cli.parse_grid("5:3:-1") == [5.0, 4.0, 3.0]


@pytest.mark.parametrize(
    "argv",
    [
        ["lattice", "--field", "C", "--p", "2", "--q", "3", "--l", "-3", "--max-degree", "11"],
        ["spectrum", "--field", "R", "--p", "2", "--q", "5", "--lambda=-3:6:0.5", "--max-degree", "8", "--cross-check"],
        ["verify", "gamma"],
    ],
)
def test_json_schema(capsys, argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, cli.schema())
    assert doc["metadata"]["kernel_phase_sign"] == 1
    assert doc["metadata"]["config"]["command"] == argv[0]


def test_out_file_and_determinism(tmp_path, capsys):
    argv = ["spectrum", "--field", "C", "--p", "2", "--q", "3", "--l", "3", "--lambda", "3:9:0.25",
            "--max-degree", "12", "--format", "json", "--out"]
    out = tmp_path / "run.json"
    assert run(capsys, *argv, str(out))[1] == ""
    first = out.read_bytes()
    run(capsys, *argv, str(out))
    assert out.read_bytes() == first


def test_jobs_do_not_change_output(capsys):
    base = ["spectrum", "--field", "R", "--p", "2", "--q", "3", "--lambda", "2:5:0.5", "--max-degree", "12"]
    _, serial, _ = run(capsys, *base)
    _, parallel, _ = run(capsys, *base, "--jobs", "2")
    assert serial == parallel


def test_verify_torus(capsys):
    code, out, _ = run(capsys, "verify", "torus", "--field", "R", "--p", "2", "--q", "3")
    assert code == 0
    (row,) = rows(out)
    assert row["result"] == "PASS" and float(row["measured"]) < 1e-6


def test_verify_failure_exit(monkeypatch, capsys):
    monkeypatch.setattr(cli, "run_suite", lambda *a, **k: [Check("gamma", "forced", 1.0, 0.5)])
    code, out, _ = run(capsys, "verify", "gamma")
    assert code == 2 and "FAIL" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cosgrass", "lattice", "--field", "R", "--p", "2", "--q", "3",
                           "--max-degree", "4"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1:] == ["R,2,3,0,1-1,2", "R,2,3,0,3-1,4"]
