import io
import json
import subprocess
import sys

import pytest

from ospkit.cli import run
from ospkit.weights import SparseVector

X1_V0 = '{"terms":[{"basis":{"k":[1,0],"slot":0},"coeff":{"a":"1","b":"0"}}]}'


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_verify_singular_n1():
    code, out, _ = call("verify", "singular", "--n", "1", "--max-deg", "6")
    assert code == 0
    assert "full_total: 3" in out


def test_verify_singular_json_single_object():
    code, out, _ = call("verify", "singular", "--n", "1", "--max-deg", "6", "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["passed"] is True
    assert obj["reports"][0]["info"]["full_total"] == 3


def test_verify_failure_exit_code():
    code, out, _ = call("verify", "singular", "--n", "2", "--max-deg", "3")
    assert code == 1
    assert "minus-delta total dimension" in out


def test_gamma_matrix_lambda_j():
    code, out, _ = call("gamma", "matrix", "--n", "2", "--which", "w2", "--weight", "1/2,-1/2")
    assert code == 0
    assert "[ 1 ]" in out
    code, out, _ = call("gamma", "matrix", "--n", "2", "--which", "w2", "--weight", "1/2,-1/2",
                        "--format", "json")
    obj = json.loads(out)
    assert obj["matrix"] == {"rows": 1, "cols": 1, "entries": [[{"a": "1", "b": "0"}]]}


def test_gamma_pretty_uses_radical_sign():
    code, out, _ = call("gamma", "matrix", "--n", "2", "--which", "w1", "--weight", "1/2,1/2")
    assert code == 0 and "√2" in out


def test_act_example_and_roundtrip():
    code, out, _ = call("act", "--n", "2", "--gen", "X-1", "--vector", X1_V0, "--format", "json")
    assert code == 0
    obj = json.loads(out)
    got = SparseVector.from_json(obj)
    assert got.pretty() == "(1/2√2)1⊗v0 + x1⊗v3"
    again = SparseVector.from_json(json.loads(json.dumps(obj)))
    assert again == got
    # the output object is itself valid input
    code, out2, _ = call("act", "--n", "2", "--gen", "H1", "--vector", out, "--format", "json")
    assert code == 0
    assert json.loads(out2)["generator"] == "H1"


def test_act_on_file(tmp_path):
    p = tmp_path / "v.json"
    p.write_text(X1_V0, encoding="utf-8")
    code, out, _ = call("act", "--n", "2", "--gen", "X+1", "--vector", f"@{p}")
    assert code == 0 and "x1^2⊗v0" in out


def test_singular_weight():
    code, out, _ = call("singular", "--n", "2", "--max-deg", "2", "--weight", "1/2,1/2", "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["total_dimension"] == 1


def test_singular_minus_delta_scan():
    code, out, _ = call("singular", "--n", "2", "--max-deg", "4", "--spec", "minus-delta")
    assert code == 0 and "total dimension: 3" in out


@pytest.mark.parametrize("argv", [
    ("verify", "nope", "--n", "2", "--max-deg", "2"),
    ("verify", "singular", "--n", "0", "--max-deg", "2"),
    ("verify", "singular", "--n", "x", "--max-deg", "2"),
    ("singular", "--n", "2"),
    ("gamma", "matrix", "--n", "2", "--which", "w3", "--weight", "1/2,1/2"),
    ("gamma", "matrix", "--n", "2", "--which", "w1", "--weight", "0.5,1/2"),
    ("gamma", "matrix", "--n", "2", "--which", "w1", "--weight", "1/3,1/2"),
    ("act", "--n", "2", "--gen", "X+9", "--vector", X1_V0),
    ("act", "--n", "2", "--gen", "X+1", "--vector", "{not json"),
    ("act", "--n", "1", "--gen", "X+1", "--vector", X1_V0),
    ("verify", "intertwine", "--n", "1", "--max-deg", "2"),
    (),
])
def test_usage_errors_exit_2(argv):
    code, _, err = call(*argv)
    assert code == 2
    assert err


def test_module_entry_point_utf8():
    proc = subprocess.run(
        [sys.executable, "-m", "ospkit", "gamma", "matrix", "--n", "2", "--which", "w2",
         "--weight", "3/2,1/2"],
        capture_output=True,
    )
    assert proc.returncode == 0
    assert "√2" in proc.stdout.decode("utf-8")


def test_seed_flag_accepted():
    code, _, _ = call("--seed", "7", "verify", "brackets", "--n", "1", "--max-deg", "1")
    assert code == 0
