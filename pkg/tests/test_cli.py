import io
import json
import os
from contextlib import redirect_stdout

import pytest

from gf2lie.cli import main


def run_cli(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(argv)
    return code, json.loads(buf.getvalue()) if buf.getvalue().strip() else None


def test_build_jurman():
    code, doc = run_cli(["build", "jurman", "--g", "2", "--h", "1"])
    assert code == 0
    assert doc["dim"] == 14
    assert doc["validated"] is True


def test_build_emits_stable_json():
    _, d1 = run_cli(["build", "kap", "--family", "2", "--n", "4"])
    _, d2 = run_cli(["build", "kap", "--family", "2", "--n", "4"])
    assert json.dumps(d1, sort_keys=True) == json.dumps(d2, sort_keys=True)


def test_usage_error():
    code, _ = run_cli(["frobnicate"])
    assert code == 1


def test_pipeline_h2(tmp_path):
    out = str(tmp_path / "hp.json")
    code, _ = run_cli(["build", "h", "--N", "2,2", "--derived", "--out", out])
    assert code == 0 and os.path.exists(out)
    code, doc = run_cli(["h2", "--algebra", out, "--weight", "4,-2", "--mode", "z"])
    assert code == 0
    assert doc["H2"] == 1
    # the block contains the Jurman cocycle representative
    assert doc["representatives"]


def test_simple_subcommand(tmp_path):
    out = str(tmp_path / "j.json")
    run_cli(["build", "jurman", "--g", "2", "--h", "1", "--out", out])
    code, doc = run_cli(["simple", "--algebra", out])
    assert code == 0 and doc["verdict"] == "simple"
    assert doc["seed"] == 0  # seeds are printed in every report


def test_iso_subcommand(tmp_path):
    a = str(tmp_path / "a.json")
    b = str(tmp_path / "b.json")
    run_cli(["build", "kap", "--family", "4A", "--n", "4", "--arf", "1", "--out", a])
    run_cli(["build", "classical", "--family", "oPi", "--n", "5",
             "--variant", "derived", "--out", b])
    code, doc = run_cli(["iso", "--algebra", a, "--other", b])
    assert code == 0 and doc["verdict"] == "iso"


def test_deform_jurman_subcommand():
    code, doc = run_cli(["deform", "jurman", "--g", "2", "--h", "1"])
    assert code == 0
    assert doc["isomorphic_to_jurman"] is True
    assert doc["cocycle_weight"] == [4, -2]


def test_closure_subcommand():
    code, doc = run_cli(["closure", "--base", "2", "--n", "4"])
    assert code == 0
    assert doc["dim"] == 19 and doc["restricted_ok"] is True


def test_super_subcommand():
    code, doc = run_cli(["super", "--base", "2", "--n", "4", "--mode", "nonlinear",
                         "--arf2", "0"])
    assert code == 0 and doc["axioms_ok"] is True
    assert sum(doc["parity"]) == 9  # odd part of KapS_{2,0}(4)


def test_experiment_file(tmp_path):
    spec = {
        "name": "dims",
        "steps": [{"cmd": ["build", "jurman", "--g", "2", "--h", "1"]}],
        "expectations": [{"path": "0.dim", "equals": 14}],
    }
    path = str(tmp_path / "exp.json")
    with open(path, "w") as fh:
        json.dump(spec, fh)
    code, doc = run_cli(["experiment", path])
    assert code == 0 and doc["pass"] is True
    # deliberately wrong expectation fails with a diff
    spec["expectations"][0]["equals"] = 15
    with open(path, "w") as fh:
        json.dump(spec, fh)
    code, doc = run_cli(["experiment", path])
    assert code == 2 and doc["failures"][0]["actual"] == 14
    # empty suite passes vacuously with a warning
    with open(path, "w") as fh:
        json.dump({"name": "empty"}, fh)
    code, doc = run_cli(["experiment", path])
    assert code == 0 and "warning" in doc
