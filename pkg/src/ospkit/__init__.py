"""Exact computations for the osp(1|2n)-module C[x_1..x_n] (x) C^{1|2n}."""

from .action import Generator, TensorModule, module, parse_label, tensor_apply
from .exactfield import ONE, SQRT2, ZERO, QSqrt2
from .intertwiner import Intertwiner, Kind, gamma, gamma_apply, restrict
from .linalg import ExactMatrix, det, inverse, nullspace, rank
from .singular import FULL_POSITIVE, MINUS_DELTA, DELTA_DELTA, annihilated_at, scan_singular
from .weights import BasisVector, SparseVector, Y, Z, basis_of, classify, enumerate_weights

__all__ = [
    "BasisVector", "DELTA_DELTA", "ExactMatrix", "FULL_POSITIVE", "Generator", "Intertwiner", "Kind",
    "MINUS_DELTA", "ONE", "QSqrt2", "SQRT2", "SparseVector", "TensorModule", "Y", "Z", "ZERO",
    "annihilated_at", "basis_of", "classify", "det", "enumerate_weights", "gamma", "gamma_apply",
    "inverse", "module", "nullspace", "parse_label", "rank", "restrict", "scan_singular", "tensor_apply",
]
