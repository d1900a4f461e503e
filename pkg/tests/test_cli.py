import io
import json
import subprocess
import sys

import pytest

from algetower.cli import run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), stream=out)
    return code, out.getvalue()


def call_json(*argv):
    code, text = call(*argv)
    return code, json.loads(text)


def test_commutant_H():
    code, rep = call_json("commutant", "--algebra", "H")
    assert code == 0
    assert rep["dimension"] == 4
    assert rep["relations"] == [
        "f[0][0] = f[1][1] = f[2][2] = f[3][3]",
        "f[0][1] = -f[1][0] = -f[2][3] = f[3][2]",
        "f[0][2] = f[1][3] = -f[2][0] = -f[3][1]",
        "f[0][3] = -f[1][2] = f[2][1] = -f[3][0]",
    ]


def test_commutant_generators_and_no_basis():
    code, rep = call_json("commutant", "--algebra", "CH", "--generators", "0,4", "--no-basis")
    assert code == 0 and rep["dimension"] == 32 and "basis" not in rep


def test_regular_check_fueter_variable():
    code, rep = call_json("regular-check", "--fn", "fueter1", "--everywhere")
    assert code == 0
    assert rep["fueter_system"]["holds"] is True


def test_regular_check_failure_exit_code():
    code, rep = call_json("regular-check", "--fn", "identity", "--point", "0,0,0,0")
    assert code == 1
    assert rep["fueter_system"]["residuals"] == ["-2", "0", "0", "0"]


def test_regular_check_inline_function():
    code, rep = call_json("regular-check", "--fn-json", '[["x", ["0","0","0","1"]], [["0","1","0","0"], "x", ["0","0","1","0"]]]',
                          "--everywhere")
    assert code == 0


def test_cube_witness_report():
    code, rep = call_json("regular-check", "--fn", "cube", "--point", "1,0,1,0")
    assert code == 1
    fail = rep["equal_diagonal"]["failures"][0]
    assert (fail["lhs"], fail["rhs"]) == ("0", "2")


def test_mul_and_norm():
    code, rep = call_json("mul", "0,1,0,0", "0,0,1,0")
    assert code == 0 and rep["product"] == ["0", "0", "0", "1"]
    code, rep = call_json("norm", "1,1,1,1")
    assert code == 0 and "4" in json.dumps(rep)


def test_quaternion_parameters():
    code, rep = call_json("mul", "--algebra", "quaternion", "--a", "2", "--b", "3", "0,1,0,0", "0,1,0,0")
    assert code == 0 and rep["product"] == ["2", "0", "0", "0"]


def test_rotate():
    code, rep = call_json("rotate", "--q", "1,1,0,0", "--v", "0,1,0")
    assert code == 0 and rep["rotated"] == ["0", "0", "1"]


def test_convert_round_trip():
    table = "[[1,2,0,0],[0,1,0,3],[0,0,1,0],[\"1/2\",0,0,1]]"
    code, std = call_json("convert", table, "--to", "standard", "--a", "2", "--b", "3")
    assert code == 0
    code, back = call_json("convert", json.dumps(std["result"]), "--to", "matrix", "--a", "2", "--b", "3")
    assert code == 0
    assert back["result"] == [["1", "2", "0", "0"], ["0", "1", "0", "3"], ["0", "0", "1", "0"], ["1/2", "0", "0", "1"]]


def test_tensor_and_tower():
    code, rep = call_json("tensor", "C", "H")
    assert code == 0 and rep["dim"] == 8
    spec = json.dumps({"outer": "C", "inner_dim": 2,
                       "constants": [[0, 0, 0, [1, 0]], [1, 0, 1, [1, 0]], [1, 1, 0, [1, 0]], [0, 1, 1, [0, 1]]]})
    code, rep = call_json("tower", spec)
    assert code == 0 and rep["dim"] == 4


def test_algebra_inline_json():
    data = json.dumps({"dim": 2, "constants": [[0, 0, 0, "1"], [1, 0, 1, "1"], [1, 1, 0, "1"], [0, 1, 1, "-1"]]})
    code, rep = call_json("algebra", "--algebra", data)
    assert code == 0


def test_paper_suite_all_pass():
    code, text = call("paper-suite", "--format", "table")
    assert code == 0
    lines = text.strip().splitlines()
    assert len(lines) == 26
    assert all("PASS" in line for line in lines[:-1])


def test_paper_suite_only():
    code, rep = call_json("paper-suite", "--only", "fueter-system,cube-relaxed-cr")
    assert code == 0
    assert [r["key"] for r in rep["rows"]] == ["fueter-system", "cube-relaxed-cr"]


def test_tensor_order():
    code, rep = call_json("tensor-order")
    assert code == 0


@pytest.mark.parametrize("argv", [
    ["bogus"],
    [],
    ["norm", "1,1"],
    ["mul", "1/0,0,0,0", "1,0,0,0"],
    ["invert", "0,0,0,0"],
    ["algebra", "--algebra", "{not json"],
    ["algebra", "--algebra", "/no/such/file.json"],
    ["commutant", "--generators", "0,9"],
    ["commutant", "--generators", "x"],
    ["convert", "[[1,2],[3,4]]"],
    ["convert", "[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]", "--a", "0", "--b", "1"],
    ["regular-check", "--fn", "sine", "--everywhere"],
    ["regular-check", "--fn", "square"],
    ["regular-check", "--fn-json", "[[\"y\"]]", "--everywhere"],
    ["rotate", "--q", "0,0,0,0", "--v", "1,0,0"],
    ["tower", "{\"outer\": \"C\"}"],
    ["paper-suite", "--only", "no-such-row"],
])
def test_bad_input_exits_2(argv):
    code, text = call(*argv)
    assert code == 2
    err = json.loads(text)["error"]
    assert err["type"] and err["message"]


def test_bad_input_table_format():
    code, text = call("norm", "1,1", "--format", "table")
    assert code == 2 and "expected 4 coordinates" in text


def test_deterministic_output():
    for argv in (["commutant", "--algebra", "CH", "--generators", "0,4"], ["paper-suite"],
                 ["regular-check", "--fn", "cube", "--everywhere"]):
        assert call(*argv) == call(*argv)


def test_seed_from_environment(monkeypatch):
    monkeypatch.setenv("ALGETOWER_SEED", "7")
    code, rep = call_json("paper-suite", "--only", "fueter-system")
    assert code == 0 and rep["seed"] == 7
    monkeypatch.setenv("ALGETOWER_SEED", "seven")
    code, _ = call("paper-suite")
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "algetower", "commutant", "--algebra", "C"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["relations"] == ["f[0][0] = f[1][1]", "f[0][1] = -f[1][0]"]
