"""Exact polynomial models of sp(2n)-representations.

Thin wrapper around the C++ core. Structured results come back as plain
dicts and lists; polynomials and operators are exact ``Poly``/``WeylOp``
objects built from the text grammar (``"2*x1.1^2 - 1/2*z1"``,
``"z1*dy1.1 - dz1*dx1.1"``).
"""

import json

from ._spmodels import ComputationError, InvalidInput, Poly, WeylOp, commutator, named_operator, rs_apply
from . import _spmodels as _core

__all__ = [
    "InvalidInput",
    "ComputationError",
    "Poly",
    "WeylOp",
    "commutator",
    "named_operator",
    "weyl_dim",
    "kernel",
    "verify",
    "tensor_with_spinor",
    "cartan_product",
    "extremal_project",
    "rs_apply",
    "rs_calibrate",
]


def _coords(weight):
    return [str(c) for c in weight]


def weyl_dim(weight, n):
    return int(_core.weyl_dim(_coords(weight), n))


def kernel(kind, n, degrees, zmax=None, basis=False, allow_out_of_range=False):
    return json.loads(_core.kernel_json(kind, n, list(degrees), zmax, basis, allow_out_of_range))


def verify(suite, n, N=1, degrees=()):
    return json.loads(_core.verify_json(suite, n, N, list(degrees)))


def tensor_with_spinor(weight, n):
    return json.loads(_core.tensor_json(_coords(weight), n))


def cartan_product(weight, n):
    return json.loads(_core.cartan_product_json(_coords(weight), n))


def extremal_project(triple, n, poly):
    return json.loads(_core.extremal_project_json(triple, n, poly))


def rs_calibrate(k, n, zmax, candidates=(), x_degree=1, strict=False):
    return json.loads(_core.rs_calibrate_json(k, n, zmax, [str(c) for c in candidates], x_degree, strict))
