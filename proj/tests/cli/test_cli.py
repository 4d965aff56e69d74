import json
import os
import subprocess

import pytest

CLI = os.environ.get("SPMODELS_CLI", "build/tools/spmodels")


def run(*args, expect=0):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    assert proc.returncode == expect, proc.stderr + proc.stdout
    return proc


def out(*args, expect=0):
    return json.loads(run(*args, expect=expect).stdout)


def test_dim():
    assert out("dim", "--n", "4", "--weight", "2,1")["dimension"] == 160
    assert out("dim", "--n", "2", "--weight", "0,0")["dimension"] == 1


def test_dim_not_dominant():
    proc = run("dim", "--n", "4", "--weight", "1,2", expect=2)
    assert "not dominant" in proc.stderr


def test_bad_flags_exit_2():
    run("dim", "--n", "x", expect=2)
    run("kernel", "--kind", "nope", "--n", "2", "--degrees", "1", expect=2)


def test_kernel_examples():
    r = out("kernel", "--kind", "symplectic-harmonic", "--n", "4", "--degrees", "2,1")
    assert (r["kernelDim"], r["ambientDim"]) == (160, 288)
    assert out("kernel", "--kind", "orthogonal-harmonic", "--n", "3", "--degrees", "2")["kernelDim"] == 5
    r = out("kernel", "--kind", "symplectic-monogenic", "--n", "1", "--degrees", "0", "--zmax", "2")
    assert r["perZDegreeDims"] == {"0": 1, "1": 1, "2": 1}
    assert r["truncationStable"] is True


def test_kernel_basis_and_config():
    r = out("kernel", "--kind", "orthogonal-harmonic", "--n", "2", "--degrees", "2", "--basis")
    assert len(r["vectors"]) == 2
    assert r["config"]["command"] == "kernel"


def test_verify_suites():
    r = out("verify", "--suite", "so5", "--n", "2")
    assert r["pass"] and r["dimension"] == 10
    assert out("verify", "--suite", "sp-invariance", "--n", "2")["pass"]
    assert out("verify", "--suite", "parafermion", "--N", "1", "--n", "1")["pass"]


def test_tensor_cartan_only():
    r = out("tensor", "--n", "4", "--weight", "2,1", "--with", "spinor", "--cartan-only")
    weights = {(s["parity"], tuple(s["weight"]["coords"])) for s in r["summands"]}
    assert weights == {
        ("even", ("3/2", "1/2", "-1/2", "-1/2")),
        ("odd", ("3/2", "1/2", "-1/2", "-3/2")),
    }


def test_project_fixes_highest_weight(tmp_path):
    f = tmp_path / "f.txt"
    f.write_text("x2.1*x2.2\n")
    r = out("project", "--triple", "sl2-u", "--n", "2", "--input", str(f))
    assert r["output"] == r["input"]
    assert r["termsUsed"] == 0


def test_project_singular_weight(tmp_path):
    f = tmp_path / "f.json"
    f.write_text(json.dumps([{"coef": "1", "exps": {"y1": 2}}]))
    run("project", "--triple", "finite-xy", "--n", "1", "--input", str(f), expect=1)


def test_rs_calibrate():
    r = out("rs-calibrate", "--k", "1", "--n", "2", "--zmax", "3")
    assert r["workingDenominators"]
    assert r["paperDenominator"] == "5"
    assert isinstance(r["paperDenominatorWorks"], bool)
    run("rs-calibrate", "--k", "1", "--n", "2", "--zmax", "2", "--candidates", "0", expect=2)


def test_rs_apply_trivial(tmp_path):
    f = tmp_path / "f.txt"
    f.write_text("x1.1*z1")
    r = out("rs-apply", "--k", "0", "--n", "2", "--input", str(f))
    a = out("apply", "--op", "z1*dy1.1 + z2*dy1.2 - dx1.1*dz1 - dx1.2*dz2", "--n", "2", "--N", "2", "--poly", "x1.1*z1")
    assert r["output"] == a["output"]


def test_commutator():
    r = out("commutator", "--a", "dz1^2", "--b", "z1^2", "--n", "1")
    assert r["commutator"] == "4*z1*dz1 + 2"


def test_output_file(tmp_path):
    path = tmp_path / "r.json"
    run("--output", str(path), "dim", "--n", "3", "--weight", "1")
    assert json.loads(path.read_text())["dimension"] == 6


def test_pretty():
    text = run("--pretty", "dim", "--n", "2", "--weight", "1").stdout
    assert "dimension: 4" in text


@pytest.mark.parametrize(
    "args",
    [
        ["kernel", "--kind", "symplectic-harmonic", "--n", "3", "--degrees", "2,1", "--basis"],
        ["rs-calibrate", "--k", "1", "--n", "2", "--zmax", "3"],
        ["verify", "--suite", "parafermion", "--N", "2", "--n", "2", "--seed", "5"],
    ],
)
def test_byte_identical(args):
    assert run(*args).stdout == run(*args).stdout
