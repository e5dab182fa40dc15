from __future__ import annotations

import json
import subprocess
import sys

import pytest

from birfol import serialize as S
from birfol.cli import parse_matrix, parse_matrix_input, run
from birfol.algebra.quad import I, J, SQRT2, Q


def ok(*argv) -> dict:
    code, out, err = run(list(argv))
    assert code == 0, err or out
    doc = json.loads(out)
    S.validate(doc)
    return doc


def fails(code: int, *argv) -> dict:
    got, out, _ = run(list(argv))
    assert got == code
    doc = json.loads(out)
    S.validate(doc)
    assert doc["error"]["exit_code"] == code
    return doc


def num(obj) -> Q:
    return S.read_number(obj)


# -- input parsing ------------------------------------------------------------------


def test_matrix_input_forms():
    want = [[Q(1), Q(2)], [Q(1), Q(1)]]
    assert parse_matrix("[[1,2],[1,1]]") == want
    assert parse_matrix("1,2;1,1") == want
    assert parse_matrix("1 2 1 1") == want
    assert parse_matrix("[[i, 1], [0, 1+sqrt(2)]]")[0][0] == I
    rows, lat = parse_matrix_input('{"lattice": "zj", "matrix": [[["-1/2", "1/2", -3], 0], [0, "1"]]}')
    assert lat == "zj" and rows[0][0] == J
    with pytest.raises(Exception):
        parse_matrix("1,2,3")


def test_schema_version_everywhere():
    assert ok("reduce", "x*dy + y*dx")["schema_version"] == S.SCHEMA_VERSION


# -- reduce ---------------------------------------------------------------------------


def test_reduce_examples():
    doc = ok("reduce", "x*dy + y*dx")
    assert doc["blowups"] == 0 and [r["kind"] for r in doc["reports"]] == ["NonDegenerate"]
    doc = ok("reduce", "2*y*dx - x*dy")
    assert doc["blowups"] == 2 and doc["dicritical"] is True
    assert ok("reduce", "3*y*dx - 2*x*dy")["blowups"] == 3


def test_reduce_budget_and_dot():
    fails(2, "reduce", "8*x*dy - 5*y*dx", "--max-blowups", "2")
    code, out, _ = run(["reduce", "2*y*dx - x*dy", "--format", "dot"])
    assert code == 0 and out.startswith("graph dual {") and '"E1" -- "E2"' in out
    code, out, _ = run(["reduce", "2*y*dx - x*dy", "--format", "text"])
    assert "blowups: 2" in out and "(dicritical)" in out


def test_reduce_saturation_note():
    doc = ok("reduce", "x*y*dy + y^2*dx")
    assert doc["notes"]


def test_trace_round_trip(tmp_path):
    trace = tmp_path / "t.json"
    doc = ok("reduce", "3*y*dx - 2*x*dy", "--trace", str(trace))
    tdoc = json.loads(trace.read_text())
    S.validate(tdoc, "trace")
    assert len(tdoc["centers"]) == doc["blowups"]
    for cid in [c["id"] for c in doc["curves"] if c["invariant"]]:
        cs = ok("cs-check", "--trace", str(trace), "--curve", cid)
        assert cs["ok"] and num(cs["sum"]) == cs["self_int"]


# -- cs-check --------------------------------------------------------------------------


def test_cs_check_examples():
    doc = ok("cs-check", "w*dz + 3*z*dw", "--atlas", "p1xp1", "--curve", "Z0")
    assert num(doc["sum"]) == 0 and doc["self_int"] == 0 and doc["ok"]
    doc = ok("cs-check", "x*dy + sqrt(2)*y*dx", "--blowup", "A:0,0", "--curve", "E1")
    assert num(doc["sum"]) == -1 and doc["self_int"] == -1 and doc["ok"]
    fails(4, "cs-check", "dy - 2*x*dx", "--atlas", "p2", "--curve", "Ly")


# -- classify ----------------------------------------------------------------------------


def test_classify_examples():
    assert ok("classify", "[[1,0],[1,1]]")["growth"]["tag"] == "Linear"
    tor = ok("classify", "[[1,0],[1,1]]", "--mode", "torus")
    assert tor["growth"]["tag"] == "Quadratic"
    doc = ok("classify", "[[1,2],[1,1]]")
    assert doc["growth"]["tag"] == "Exponential" and num(doc["growth"]["rate"]) == 1 + SQRT2
    assert len(doc["invariant_foliations"]) == 2
    tor = ok("classify", "[[1,2],[1,1]]", "--mode", "torus")
    assert num(tor["growth"]["rate"]) == (1 + SQRT2) ** 2
    fails(5, "classify", "[[2,0],[0,1]]")


def test_classify_mixed_sign_reports_conjugator():
    doc = ok("classify", "[[-1,-1],[1,2]]")
    assert doc["algebraically_stable"] is False
    assert doc["stabilizing_conjugator"] is not None


# -- bir-group, torus-classify, liouville --------------------------------------------------


def test_bir_group_examples():
    assert ok("bir-group", "2/3")["tag"] == "Fibration"
    doc = ok("bir-group", "1+sqrt(2)", "--bounds", "5,20")
    assert doc["tag"] == "InfiniteMonomial" and doc["witness"] == [[0, 1], [1, 2]]
    assert doc["bounds"] == {"t": 5, "a": 20}
    assert ok("bir-group", "i")["tag"] == "Finite"
    code, _, _ = run(["bir-group", "1", "--bounds", "0,5"])
    assert code == 1


def test_torus_classify_examples():
    assert ok("torus-classify", "--lattice", "zi", "--generator", "i")["tag"] == "RationalZi4"
    assert ok("torus-classify", "--lattice", "zj", "--generator=-1/2+1/2*sqrt(-3)")["tag"] == "RationalZj3"
    assert ok("torus-classify", "--lattice", "e", "--generator", "-1")["tag"] == "Kummer"
    fails(6, "torus-classify", "--lattice", "zj", "--generator", "i")


def test_liouville_examples():
    doc = ok("liouville", "w*dz + 2*z*dw")
    assert doc["eta"] == "1/z dz + 1/w dw" and doc["singer"] is True
    assert ok("liouville", "w*dz + 2*z*dw", "--eta", "0")["singer"] is False
    assert ok("liouville", "w*dz + z*dw", "--eta", "0")["singer"] is True


# -- exit codes, determinism, batch --------------------------------------------------------


def test_usage_errors():
    code, out, err = run(["reduce"])
    assert code == 1 and "error" in err
    code, out, _ = run(["reduce", "x*dy + $"])
    assert code == 1 and json.loads(out)["error"]["type"] == "FormSyntaxError"


def test_help_exits_cleanly(capsys):
    code, _, err = run(["--help"])
    assert code == 0 and err == ""
    assert "reduce" in capsys.readouterr().out


def test_outputs_are_deterministic():
    argv = ["reduce", "5*x*dy - 3*y*dx"]
    assert run(argv) == run(argv)


def test_batch_keeps_order(tmp_path):
    lines = ["bir-group 2/3", "classify [[1,0],[1,1]]", "reduce '3*y*dx - 2*x*dy'", "torus-classify --lattice zj --generator i"]
    path = tmp_path / "jobs.txt"
    path.write_text("\n".join(lines) + "\n")
    code1, out1, _ = run(["batch", str(path)])
    code3, out3, _ = run(["batch", str(path), "--jobs", "3"])
    assert out1 == out3 and code1 == code3 == 6
    dec = json.JSONDecoder()
    docs, pos = [], 0
    while pos < len(out1):
        doc, pos = dec.raw_decode(out1, pos)
        docs.append(doc)
        while pos < len(out1) and out1[pos].isspace():
            pos += 1
    assert [d["command"] for d in docs] == ["bir-group", "classify", "reduce", "torus-classify"]


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "birfol", "bir-group", "2/3", "--format", "text"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "Fibration" in res.stdout
