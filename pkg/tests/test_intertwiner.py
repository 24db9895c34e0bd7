from fractions import Fraction as F

import pytest
from hypothesis import given

from ospkit.action import cartan, module, odd, odd_lower, odd_raise, tensor_apply
from ospkit.exactfield import INV_SQRT2, SQRT2, QSqrt2
from ospkit.intertwiner import (
    Intertwiner,
    Kind,
    WrongSlotError,
    arrowhead_det,
    arrowhead_violations,
    conjugated_action,
    conjugated_action_big,
    conjugated_action_lil,
    gamma,
    gamma_apply,
    restrict,
)
from ospkit.linalg import ExactMatrix, det, inverse
from ospkit.singular import w2
from ospkit.weights import LambdaC, SparseVector, Y, Z, all_basis_vectors, basis_of, enumerate_weights

from strategies import basis_vectors

h = F(1, 2)


def vec(*terms):
    return SparseVector(terms)


def test_gamma_w2_of_vacuum_is_w2():
    assert gamma_apply(Kind.W2, Y((0, 0))) == w2(2)


@pytest.mark.parametrize("kind", list(Kind))
def test_lambda_j_vectors_fixed(kind):
    for n in (1, 2, 3):
        for j in range(1, n + 1):
            z = Z((0,) * n, n + j)
            assert gamma_apply(kind, z) == SparseVector.basis(z)


def test_one_by_one_blocks():
    block = restrict(None, (h, -h))
    assert block.matrix_w1 == ExactMatrix.identity(1)
    assert block.matrix_w2 == ExactMatrix.identity(1)
    # polynomial multiples of 1 (x) v_{n+j} with x_j absent are also fixed
    block = restrict(None, (F(5, 2), -h))
    assert block.basis == (Z((2, 0), 4),)
    assert block.matrix_w1 == ExactMatrix.identity(1)


def test_lambda0_block_n2():
    block = restrict(Kind.W2, (h, h))
    m = block.matrix_w2
    assert m.rows == 3
    assert arrowhead_violations(m) == []
    d = det(m)
    assert d in (QSqrt2(-3), QSqrt2(5))
    assert d == QSqrt2(5)
    assert block.expected_det() == -3
    assert m @ inverse(m) == ExactMatrix.identity(3)


def test_c1_block_n2():
    block = restrict(None, (F(3, 2), h))
    assert isinstance(block.cls, LambdaC) and block.cls.C == 1
    for m in (block.matrix_w1, block.matrix_w2):
        assert m.rows == 4
        assert arrowhead_violations(m) == []
        assert not det(m).is_zero()
        assert arrowhead_det(m) == det(m)
    row = [block.matrix_w2[0, j] for j in range(4)]
    assert row == [1, 2 * SQRT2, SQRT2, -SQRT2]
    assert block.a_value == -SQRT2


@pytest.mark.parametrize("n", [2, 3])
def test_arrow_entries_follow_a_times_integer(n):
    # row 1: -a (k_j + 1) for the v_{n+j} columns, a for the v_i columns;
    # column 1: a for the v_{n+j} rows, a k_i for the v_i rows  (W2)
    for lam in enumerate_weights(n, 4):
        block = restrict(Kind.W2, lam)
        if not isinstance(block.cls, LambdaC):
            continue
        m, a, k = block.matrix_w2, block.a_value, block.basis[0].k
        for j in range(1, n + 1):
            assert m[0, j] == -a * (k[j - 1] + 1)
            assert m[j, 0] == a
        for p, i in enumerate(block.cls.positions, start=n + 1):
            assert m[0, p] == a
            assert m[p, 0] == a * k[i - 1]


@pytest.mark.parametrize("n", [2, 3])
def test_gamma_commutes_with_cartan(n):
    for kind in Kind:
        g = gamma(kind, n)
        for b in all_basis_vectors(n, 4):
            for j in range(1, n + 1):
                assert module(n).apply(cartan(j), g(b)) == g(b) * QSqrt2(b.weight[j - 1])


def test_lil_examples():
    assert conjugated_action_lil(odd_raise(1), Y((0, 0))) == vec((Y((1, 0)), -INV_SQRT2))
    assert conjugated_action_lil(odd_lower(1), Y((0, 1))).is_zero()
    assert conjugated_action_lil(odd_lower(2), Y((1, 2))) == vec((Y((1, 1)), -INV_SQRT2 * 2))


def test_big_examples():
    got = conjugated_action_big(odd_raise(1), Z((0, 0), 1))
    assert got == vec((Z((1, 0), 1), INV_SQRT2 - SQRT2))
    assert got == vec((Z((1, 0), 1), QSqrt2(0, -h)))
    assert conjugated_action_big(odd_raise(1), Z((0, 0), 3)) == vec((Z((1, 0), 3), INV_SQRT2))
    assert conjugated_action_big(odd_lower(1), Z((0, 0), 1)) == vec((Z((1, 0), 3), SQRT2))


def test_wrong_slot():
    with pytest.raises(WrongSlotError):
        conjugated_action_lil(odd_raise(1), Z((0, 0), 1))
    with pytest.raises(WrongSlotError):
        conjugated_action_big(odd_raise(1), Y((0, 0)))
    with pytest.raises(ValueError):
        conjugated_action(cartan(1), Y((0, 0)))


@given(basis_vectors(2, 4))
def test_intertwining_identity(b):
    mod = module(2)
    g = gamma(Kind.W2 if b.slot == 0 else Kind.W1, 2)
    for s in (1, -1):
        for j in (1, 2):
            x = odd(s, j)
            assert mod.apply(x, g(b)) == g(conjugated_action(x, b))


@given(basis_vectors(2, 4))
def test_gamma_preserves_weight(b):
    for kind in Kind:
        assert gamma_apply(kind, b).weight() == b.weight


def test_koszul_output_reading_breaks_intertwining():
    mod = module(2)
    g = Intertwiner(Kind.W2, 2, koszul="output")
    b = Y((1, 0))
    x = odd_raise(1)
    assert mod.apply(x, g(b)) != g(conjugated_action(x, b))


def test_unknown_koszul():
    with pytest.raises(ValueError):
        Intertwiner(Kind.W1, 2, koszul="both")
    assert Kind.parse("w1") is Kind.W1
    with pytest.raises(ValueError):
        Kind.parse("w3")
