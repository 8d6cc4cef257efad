import csv
import io
import json
import subprocess
import sys

import pytest

from mackey_t3.cli import parse_sym, run
from mackey_t3.sym import SymElement, SymTensor


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, _ = call(*argv, "--format", "json")
    assert code == 0
    return json.loads(out)


def test_ext_example():
    code, out, _ = call("ext", "--source", "2,0:0:1", "--target", "1:1:1", "--q", "1")
    assert code == 0
    assert out.splitlines()[-1].split() == ["2:0:1", "1:1:1", "1", "1"]
    doc = call_json("ext", "--source", "2:0:1", "--target", "1:1:1", "--q", "1")
    assert doc == {
        "source": {"lambda": [2], "mu": [], "nu": [1]},
        "target": {"lambda": [1], "mu": [1], "nu": [1]},
        "q": 1,
        "dim": 1,
    }


def test_ext_all_degrees():
    doc = call_json("ext", "--source", "1,1:0:1", "--target", "1:1:1", "--check-socle")
    assert [r["dim"] for r in doc] == [0, 1, 0]


def test_socle_json():
    doc = call_json("socle", "--lambda", "1", "--mu", "1", "--nu", "1")
    assert doc["injective"] == {"lambda": [1], "mu": [1], "nu": [1]}
    assert len(doc["layers"]) == 2
    assert doc["layers"][0] == [{"simple": {"lambda": [1], "mu": [1], "nu": [1]}, "mult": 1}]
    second = {(tuple(e["simple"]["lambda"]), tuple(e["simple"]["nu"])) for e in doc["layers"][1]}
    assert second == {((2,), (1,)), ((1, 1), (1,)), ((1,), ())}


def test_socle_single_layer_and_csv():
    doc = call_json("socle", "--lambda", "0", "--mu", "2", "--nu", "0", "--layer", "3")
    assert doc["entries"] == [{"simple": {"lambda": [2], "mu": [], "nu": []}, "mult": 1}]
    code, out, _ = call("socle", "--lambda", "0", "--mu", "1", "--nu", "1", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["layer", "simple", "mult"]
    assert rows[1:] == [["1", "0:1:1", "1"], ["2", "0:0:0", "1"], ["2", "1:0:1", "1"]]


def test_lr_and_product():
    assert call_json("lr", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1")["coeff"] == 2
    prod = SymElement.from_json(call_json("product", "--lambda", "2", "--mu", "1"))
    oracle = SymElement.from_json(call_json("product", "--lambda", "2", "--mu", "1", "--oracle", "3"))
    assert prod == oracle
    assert prod.coefficient([2, 1]) == 1


def test_coproduct_and_component():
    t = SymTensor.from_json(call_json("coproduct", "--lambda", "2"))
    assert len(t) == 3
    part = call_json("coproduct", "--lambda", "2", "--degrees", "1,1")
    assert part == [{"partitions": [[1], [1]], "coeff": 1}]
    assert len(call_json("coproduct", "--lambda", "2", "--arity", "3")) == 6


def test_pairing():
    assert call_json("pairing", "--a", "2*2,1 + 3", "--b", "2,1")["pairing"] == 2
    assert parse_sym("0") == SymElement.schur(())


def test_poset_subcommands():
    assert call_json("poset", "leq", "--i", "1,0,0", "--j", "0,1,0")["leq"] is True
    assert call_json("poset", "defect", "--i", "1,0,0", "--j", "0,2,1")["defect"] == 2
    assert call_json("poset", "covers", "--i", "0,1,1")["covers"] == [[0, 0, 0], [1, 0, 1]]
    assert call_json("poset", "downset", "--i", "0,1,1")["down_set"] == [[0, 0, 0], [0, 1, 1], [1, 0, 1]]
    assert call_json("poset", "defect", "--i", "0,0", "--j", "2,2", "--pairs")["defect"] == 2


def test_block_decompose_hom():
    assert call_json("block", "--label", "0:0:2")["block"] == -2
    doc = call_json("decompose", "--index", "0,3,0")
    assert [s["mult"] for s in doc["summands"]] == [1, 2, 1]
    assert call_json("hom", "--from", "0,2,0", "--to", "2,0,0")["dim"] == 2


def test_socle2_and_restrict():
    doc = call_json("socle2", "--mu", "2", "--nu", "1")
    assert doc["layers"][1]["entries"] == [{"simple": {"mu": [1], "nu": []}, "mult": 1}]
    doc = call_json("restrict", "--lambda", "1", "--mu", "1", "--nu", "0", "--layer", "2")
    assert len(doc["layers"][0]["entries"]) == 2


def test_check_exit_zero():
    code, out, _ = call("check", "--max-boxes", "2")
    assert code == 0
    assert "FAIL" not in out
    doc = call_json("check", "--max-boxes", "1")
    assert doc["passed"] is True


def test_check_failure_exits_two(monkeypatch):
    from mackey_t3 import cat3

    monkeypatch.setattr(cat3, "hom_dim", lambda source, target: -1)
    code, out, _ = call("check", "--max-boxes", "1")
    assert code == 2
    assert "FAIL" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        [],
        ["ext", "--source", "1:1", "--target", "1:1:1", "--q", "1"],
        ["lr", "--lambda", "1,2", "--mu", "1", "--nu", "2"],
        ["poset", "defect", "--i", "0,1,1", "--j", "1,0,0"],
        ["poset", "defect", "--i", "0,1,1"],
        ["socle", "--lambda", "1", "--mu", "1", "--nu", "1", "--layer", "0"],
        ["ext", "--source", "1:1:1", "--target", "1:1:1", "--format", "xml"],
        ["product", "--lambda", "2", "--mu", "1", "--oracle", "2"],
    ],
)
def test_usage_errors_exit_one(argv):
    code, _, _ = call(*argv)
    assert code == 1


def test_arithmetic_failure_exits_two(monkeypatch):
    from mackey_t3 import cli

    def boom(*args):
        raise OverflowError("simulated")

    monkeypatch.setattr(cli, "lr_coefficient", boom)
    code, _, err = call("lr", "--lambda", "1", "--mu", "1", "--nu", "2")
    assert code == 2 and "simulated" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["socle", "--lambda", "1", "--mu", "2,1", "--nu", "1"],
        ["check", "--max-boxes", "2"],
        ["decompose", "--index", "1,2,1"],
        ["coproduct", "--lambda", "3,1", "--arity", "3"],
    ],
)
@pytest.mark.parametrize("fmt", ["text", "json", "csv"])
def test_deterministic_output(argv, fmt):
    first = call(*argv, "--format", fmt)
    second = call(*argv, "--format", fmt)
    assert first == second
    if fmt == "json":
        doc = json.loads(first[1])
        assert json.loads(json.dumps(doc)) == doc


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "mackey_t3", "block", "--label", "1:1:1"],
        capture_output=True, text=True, check=True,
    )
    assert proc.stdout.split()[-1] == "1"
