from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ospkit.exactfield import ONE, SQRT2, ZERO, QSqrt2
from ospkit.intertwiner import Kind, restrict
from ospkit.linalg import ExactMatrix, SingularMatrixError, det, inverse, nullspace, rank, rref

from strategies import qsqrt2

M = ExactMatrix.from_rows


def test_rank_examples():
    assert rank(ExactMatrix.identity(3)) == 3
    assert rank(M([[1, SQRT2], [SQRT2, 2]])) == 1
    assert rank(ExactMatrix.zeros(2, 2)) == 0


def test_nullspace_examples():
    (v,) = nullspace(M([[1, SQRT2]]))
    assert v == [ONE, QSqrt2(0, Fraction(-1, 2))]
    assert nullspace(ExactMatrix.identity(2)) == []
    assert len(nullspace(ExactMatrix.zeros(1, 3))) == 3


def test_nullspace_first_nonzero_is_one():
    m = M([[0, 1, SQRT2, 3], [0, 2, 0, 1]])
    for v in nullspace(m):
        assert next(x for x in v if x) == 1
        assert all(x.is_zero() for x in m.apply(v))


def test_det_examples():
    assert det(ExactMatrix.identity(4)) == 1
    assert det(M([[0, 1], [1, 0]])) == -1
    a = SQRT2
    assert det(M([[1, a, a], [a, 1, 0], [a, 0, 1]])) == -3
    with pytest.raises(ValueError):
        det(M([[1, 2]]))


def test_inverse_examples():
    assert inverse(ExactMatrix.identity(3)) == ExactMatrix.identity(3)
    assert inverse(ExactMatrix.diag([2, SQRT2])) == ExactMatrix.diag([QSqrt2(Fraction(1, 2)), SQRT2 / 2])
    half = Fraction(1, 2)
    block = restrict(Kind.W2, (half, half)).matrix(Kind.W2)
    assert block @ inverse(block) == ExactMatrix.identity(3)
    with pytest.raises(SingularMatrixError):
        inverse(M([[1, SQRT2], [SQRT2, 2]]))


def test_json_roundtrip():
    m = M([[1, SQRT2], [QSqrt2(0, -1), 0]])
    obj = m.to_json()
    assert obj["rows"] == 2 and obj["cols"] == 2
    assert ExactMatrix.from_json(obj) == m


def matrices(max_dim=4):
    dims = st.tuples(st.integers(1, max_dim), st.integers(1, max_dim))
    small = st.sampled_from([ZERO, ZERO, ONE, -ONE, SQRT2, QSqrt2(2, -1), QSqrt2(0, 3)])
    return dims.flatmap(lambda rc: st.lists(st.lists(small, min_size=rc[1], max_size=rc[1]),
                                            min_size=rc[0], max_size=rc[0])).map(M)


@given(matrices())
def test_rank_nullity(m):
    null = nullspace(m)
    assert rank(m) + len(null) == m.cols
    for v in null:
        assert all(x.is_zero() for x in m.apply(v))


@given(matrices())
def test_rref_idempotent(m):
    r, pivots, k = rref(m)
    r2, pivots2, k2 = rref(r)
    assert r2 == r and pivots2 == pivots and k2 == k


@given(matrices())
def test_det_nonzero_iff_full_rank(m):
    if m.rows != m.cols:
        return
    d = det(m)
    assert (not d.is_zero()) == (rank(m) == m.rows)
    if not d.is_zero():
        assert m @ inverse(m) == ExactMatrix.identity(m.rows)
        assert inverse(m) @ m == ExactMatrix.identity(m.rows)


@given(matrices(3), matrices(3))
def test_det_multiplicative(a, b):
    if a.rows == a.cols == b.rows == b.cols:
        assert det(a @ b) == det(a) * det(b)


@given(qsqrt2)
def test_scalar_matrix(x):
    assert det(ExactMatrix.diag([x, x])) == x * x
