import pytest

import spmodels


def test_weyl_dim():
    assert spmodels.weyl_dim([2, 1], 4) == 160
    with pytest.raises(ValueError):
        spmodels.weyl_dim([1, 2], 4)


def test_poly_and_operators():
    p = spmodels.Poly("x1.1*z1", n=1)
    ds = spmodels.named_operator("dirac", 1, copies=[1])
    assert str(ds(p)) == "-1"
    a = spmodels.WeylOp("dz1^2")
    b = spmodels.WeylOp("z1^2")
    assert str(spmodels.commutator(a, b)) == "4*z1*dz1 + 2"


def test_kernel_and_verify():
    assert spmodels.kernel("symplectic-harmonic", 4, [2, 1])["kernelDim"] == 160
    assert spmodels.verify("so5", 2, N=2)["dimension"] == 10


def test_tensor_and_projector():
    cp = spmodels.cartan_product([2, 1], 4)
    assert cp["odd"]["coords"] == ["3/2", "1/2", "-1/2", "-3/2"]
    f = spmodels.Poly("y1^2", n=1)
    with pytest.raises(ArithmeticError):
        spmodels.extremal_project("finite-xy", 1, f)


def test_rs_calibrate():
    r = spmodels.rs_calibrate(1, 2, 3)
    assert r["workingDenominators"]
