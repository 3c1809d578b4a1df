import io
import json
import subprocess
import sys

import pytest

from squareice import cli, suite
from squareice.lattice import enumerate_states, state_from_json
from squareice.ring import VarSpace, from_json, to_json
from squareice.shapes import Partition, gt_from_json, staircase_from_json


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_z_smallest():
    code, out, _ = run("z", "--n", "1", "--lambda", "1")
    assert code == 0
    assert out.strip() == "-1 + x1*a1^-1"


def test_z_json_round_trip():
    code, out, _ = run("z", "--n", "2", "--lambda", "1", "--json")
    assert code == 0
    z = from_json(json.loads(out))
    sp = VarSpace(2, 3)
    x1, x2, a1, a2 = sp.x(1), sp.x(2), sp.a(1), sp.a(2)
    assert z * a1 * a2 == x2 * ((x1 - a1) + (x2 - a2))


def test_z_strategies_agree():
    assert run("z", "--n", "3", "--lambda", "2,1")[1] == run("z", "--n", "3", "--lambda", "2,1", "--strategy", "backtrack")[1]


def test_schur():
    code, out, _ = run("schur", "--n", "1", "--lambda", "1")
    assert (code, out.strip()) == (0, "-1*a1 + x1")
    assert run("schur", "--n", "2", "--lambda", "2,1", "--na", "3")[0] == 2


def test_enumerate_json():
    code, out, _ = run("enumerate", "--n", "2", "--lambda", "1,0", "--format", "json")
    assert code == 0
    states = [state_from_json(o) for o in json.loads(out)]
    assert states == enumerate_states(Partition((1, 0)))


def test_enumerate_ascii_and_backtrack():
    code, out, _ = run("enumerate", "--n", "3", "--lambda", "0", "--strategy", "backtrack")
    assert code == 0
    assert out.count("# state") == 7


def test_bijection_json():
    code, out, _ = run("bijection", "--n", "2", "--lambda", "1", "--json")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 3
    for row in rows:
        gt_from_json(row["gt"])
        staircase_from_json(row["staircase"])
        state_from_json(row["state"])


def test_bijection_ascii():
    code, out, _ = run("bijection", "--n", "1", "--lambda", "1")
    assert code == 0
    assert "GT pattern:" in out and "staircase:" in out and "ice state:" in out


def test_expand_lambda():
    code, out, _ = run("expand", "--n", "2", "--lambda", "1,1")
    assert code == 0
    assert out.splitlines()[0] == "a = 1,2,5,11"
    # (1,1) + (1,0) = (2,1), self-conjugate, so c = 1 / (a1^2 a2) at a = (1,2)
    assert "c(1,1) = 1/2" in out
    assert out.splitlines()[-1].startswith("PASS")


def test_expand_poly_file(tmp_path):
    sp = VarSpace(1, 2)
    path = tmp_path / "f.json"
    path.write_text(json.dumps(to_json(sp.x(1))))
    code, out, _ = run("expand", "--n", "1", "--poly", str(path), "--degree", "1", "--a", "1,2", "--json")
    assert code == 0
    got = json.loads(out)
    assert got["coefficients"] == [{"mu": [0], "c": "1"}, {"mu": [1], "c": "1"}]
    assert got["reconstructs"] is True


def test_expand_usage_errors(tmp_path):
    assert run("expand", "--n", "1")[0] == 2
    assert run("expand", "--n", "1", "--lambda", "1", "--a", "1,1")[0] == 2
    path = tmp_path / "f.json"
    path.write_text(json.dumps(to_json(VarSpace(1, 1).x(1))))
    assert run("expand", "--n", "1", "--poly", str(path))[0] == 2


def test_verify_main():
    code, out, _ = run("verify", "main", "--n", "2", "--lambda", "2,1")
    assert code == 0
    assert out.startswith("PASS main theorem for lambda=(2,1)")
    code, out, _ = run("verify", "main", "--n", "1", "--lambda", "1", "--json")
    assert json.loads(out)["verdict"] == "PASS"


def test_verify_yang_baxter():
    code, out, _ = run("verify", "yang-baxter")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 20
    assert all(line.startswith("PASS") for line in lines)


def test_verify_yang_baxter_single_case():
    code, out, _ = run("verify", "yang-baxter", "--case", "38", "--json")
    assert code == 0
    row = json.loads(out)
    assert row["boundary"] == "beta,gamma,zeta"
    assert row["lhs"] == "-1*x1*x2^-1*a1^-1 + x1*a1^-2"
    assert run("verify", "yang-baxter", "--case", "7")[0] == 0
    assert run("verify", "yang-baxter", "--case", "15")[0] == 2


def test_verify_vanishing():
    code, out, _ = run("verify", "vanishing", "--n", "2", "--lambda", "1", "--mu", "0")
    assert code == 0
    assert out.count("PASS") == 2
    assert ": 0" in out
    code, out, _ = run("verify", "vanishing", "--n", "2", "--lambda", "1", "--mu", "1", "--target", "z", "--json")
    assert json.loads(out)["value"] == json.loads(out)["expected"]
    assert run("verify", "vanishing", "--n", "2", "--lambda", "1")[0] == 2


def test_verify_symmetry_out_file(tmp_path):
    path = tmp_path / "report.jsonl"
    code, out, _ = run("verify", "symmetry", "--n", "3", "--lambda", "2,1", "--out", str(path))
    assert code == 0
    lines = [json.loads(line) for line in path.read_text().splitlines()]
    assert lines[0]["values"] == {"symmetric": True, "exchange": True, "polynomial": True}
    assert lines[-1]["overall"] == "PASS"


def test_verify_all_small():
    code, out, _ = run("verify", "all", "--n-max", "1", "--lambda-max", "1", "--json")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    by_name = {r["name"]: r for r in rows[:-1]}
    assert by_name["main(1)"]["values"] == {"lhs": "-1*a1 + x1", "rhs": "-1*a1 + x1"}
    assert by_name["bijection(1)"]["values"] == {"gt": 1, "staircase": 1, "via_gt": 1, "backtrack": 1}
    assert rows[-1]["overall"] == "PASS"


def test_verify_all_negative_control():
    code, out, _ = run("verify", "all", "--n-max", "2", "--lambda-max", "1", "--mutate", "cross:SW_SE")
    assert code == 1
    assert "FAIL yang-baxter" in out
    code, out, _ = run("verify", "all", "--n-max", "2", "--lambda-max", "1", "--mutate", "rect:NS")
    assert code == 1
    assert "FAIL main(1,0)" in out


def test_verify_all_parallel_matches_serial():
    serial = suite.verify_all(2, 1, workers=1)
    parallel = suite.verify_all(2, 1, workers=2)
    assert [r.name for r in serial.records] == [r.name for r in parallel.records]
    assert [r.values for r in serial.records] == [r.values for r in parallel.records]


@pytest.mark.parametrize(
    "argv",
    [
        ["z", "--n", "1", "--lambda", "2,foo"],
        ["z", "--n", "0", "--lambda", "1"],
        ["z", "--n", "2", "--lambda", "1,2"],
        ["z", "--n", "1", "--lambda", "1,1"],
        ["verify", "all", "--mutate", "rect:XX"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "squareice", "z", "--n", "1", "--lambda", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "-1 + x1*a1^-1"
