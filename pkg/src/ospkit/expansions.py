"""Hand transcriptions of the displayed expansions from the proof that the
Gamma images are submodules.

Each :class:`Display` pairs an operator-side left-hand side (computed by the
action and the intertwiners) with a right-hand side written out term by term
from the printed formula.  Symbols with a negative exponent are zero.

Several printed right-hand sides contain index slips that make them
inconsistent with the weight of their left-hand side.  Those displays carry a
second, corrected transcription; ``verbatim`` always reproduces the print.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .action import TensorModule, odd_lower, odd_raise
from .exactfield import INV_SQRT2, SQRT2, QSqrt2
from .intertwiner import Intertwiner, Kind
from .weights import BasisVector, MultiIndex, SparseVector, vsum


def _vec(m: list[int] | tuple[int, ...], slot: int, c) -> SparseVector:
    if any(e < 0 for e in m):
        return SparseVector()
    return SparseVector.basis(BasisVector(tuple(m), slot), c)


def _add(k: MultiIndex, *moves: tuple[int, int]) -> list[int]:
    out = list(k)
    for idx, by in moves:
        out[idx - 1] += by
    return out


def _sgn(e: int) -> int:
    return -1 if e % 2 else 1


def _d(i: int, j: int) -> int:
    return 1 if i == j else 0


@dataclass(frozen=True)
class Context:
    n: int
    mod: TensorModule
    g1: Intertwiner
    g2: Intertwiner


Side = Callable[[Context, MultiIndex, int, int], SparseVector]


@dataclass(frozen=True)
class Display:
    name: str
    description: str
    lhs: Side
    verbatim: Side
    corrected: Side | None = None
    uses_i: bool = True
    # alternative reading requested for the last display: Z slots repaired only
    slot_corrected: Side | None = None


def Yv(m, c=1):
    return _vec(m, 0, c)


def Zv(m, s, c=1):
    return _vec(m, s, c)


# ---------------------------------------------------------------- Y-basis, W2

def lhs_raise_lil(cx, k, i, j):
    return cx.mod.apply(odd_raise(j), cx.g2(BasisVector(k, 0)))


def rhs_raise_lil(cx, k, i, j):
    n, s = cx.n, _sgn(sum(k))
    out = [Yv(_add(k, (j, 1)), -INV_SQRT2), Zv(k, j, s)]
    for p in range(1, n + 1):
        out.append(Zv(_add(k, (p, -1), (j, 1)), p, s * k[p - 1]))
        out.append(Zv(_add(k, (p, 1), (j, 1)), n + p, s))
    return vsum(out)


def lhs_gamma_lil_up(cx, k, i, j):
    return cx.g2(BasisVector(tuple(_add(k, (j, 1))), 0))


def rhs_gamma_lil_up(cx, k, i, j):
    n, s = cx.n, _sgn(sum(k))
    out = [Yv(_add(k, (j, 1)))]
    for p in range(1, n + 1):
        out.append(Zv(_add(k, (p, -1), (j, 1)), p, -SQRT2 * s * (k[p - 1] + _d(p, j))))
        out.append(Zv(_add(k, (p, 1), (j, 1)), n + p, -SQRT2 * s))
    return vsum(out)


def lhs_lower_lil(cx, k, i, j):
    return cx.mod.apply(odd_lower(j), cx.g2(BasisVector(k, 0)))


def _rhs_lower_lil(cx, k, j, z_shift):
    n, s = cx.n, _sgn(sum(k))
    out = [Yv(_add(k, (j, -1)), -INV_SQRT2 * k[j - 1]), Zv(k, n + j, -s)]
    for p in range(1, n + 1):
        out.append(Zv(_add(k, (p, -1), (j, z_shift)), p, s * k[p - 1] * (k[j - 1] - _d(p, j))))
        out.append(Zv(_add(k, (p, 1), (j, -1)), n + p, s * (k[j - 1] + _d(p, j))))
    return vsum(out)


def rhs_lower_lil(cx, k, i, j):
    # printed: Z_{k - d_i + d_j, i}
    return _rhs_lower_lil(cx, k, j, +1)


def rhs_lower_lil_fixed(cx, k, i, j):
    # weight-consistent: Z_{k - d_i - d_j, i}
    return _rhs_lower_lil(cx, k, j, -1)


def lhs_gamma_lil_down(cx, k, i, j):
    m = _add(k, (j, -1))
    if min(m) < 0:
        return SparseVector()
    return cx.g2(BasisVector(tuple(m), 0))


def _rhs_gamma_lil_down(cx, k, j, z_shift):
    n = cx.n
    if k[j - 1] < 1:
        return SparseVector()
    s = _sgn(sum(k) - 1)
    out = [Yv(_add(k, (j, -1)))]
    for p in range(1, n + 1):
        out.append(Zv(_add(k, (p, -1), (j, z_shift)), p, SQRT2 * s * (k[p - 1] - _d(p, j))))
        out.append(Zv(_add(k, (p, 1), (j, -1)), n + p, SQRT2 * s))
    return vsum(out)


def rhs_gamma_lil_down(cx, k, i, j):
    return _rhs_gamma_lil_down(cx, k, j, +1)


def rhs_gamma_lil_down_fixed(cx, k, i, j):
    return _rhs_gamma_lil_down(cx, k, j, -1)


# ---------------------------------------------------------------- Z-basis, W1

def lhs_raise_big_i(cx, k, i, j):
    return cx.mod.apply(odd_raise(j), cx.g1(BasisVector(k, i)))


def rhs_raise_big_i(cx, k, i, j):
    s = _sgn(sum(k))
    return vsum([
        Zv(_add(k, (j, 1)), i, INV_SQRT2),
        Yv(_add(k, (i, 1), (j, 1)), s),
        Zv(_add(k, (i, 1)), j, -SQRT2),
    ])


def lhs_gamma_big_i(cx, k, i, j):
    v = vsum([Zv(_add(k, (j, 1)), i), Zv(_add(k, (i, 1)), j, -1)])
    return cx.g1(v)


def rhs_gamma_big_i(cx, k, i, j):
    s = _sgn(sum(k))
    return vsum([
        Zv(_add(k, (j, 1)), i),
        Yv(_add(k, (i, 1), (j, 1)), -SQRT2 * s),
        Zv(_add(k, (i, 1)), j, -1),
        Yv(_add(k, (i, 1), (j, 1)), SQRT2 * s),
    ])


def lhs_raise_big_ni(cx, k, i, j):
    return cx.mod.apply(odd_raise(j), cx.g1(BasisVector(k, cx.n + i)))


def rhs_raise_big_ni(cx, k, i, j):
    s = _sgn(sum(k))
    return vsum([
        Zv(_add(k, (j, 1)), cx.n + i, INV_SQRT2),
        Yv(k, _d(i, j) * s),
        Yv(_add(k, (i, -1), (j, 1)), -s * k[i - 1]),
        Zv(_add(k, (i, -1)), j, SQRT2 * k[i - 1]),
    ])


def lhs_gamma_big_ni(cx, k, i, j):
    return cx.g1(vsum([Zv(_add(k, (j, 1)), cx.n + i), Zv(_add(k, (i, -1)), j)]))


def rhs_gamma_big_ni(cx, k, i, j):
    s = _sgn(sum(k))
    return vsum([
        Zv(_add(k, (j, 1)), cx.n + i),
        Yv(_add(k, (i, -1), (j, 1)), SQRT2 * s * (k[i - 1] + _d(i, j))),
        Yv(_add(k, (i, -1), (j, -1)), _d(i, j) * SQRT2 * s),
        Zv(_add(k, (i, -1)), j),
        Yv(_add(k, (i, -1), (j, 1)), -SQRT2 * s),
    ])


def rhs_gamma_big_ni_fixed(cx, k, i, j):
    # the Y_{k - d_i + d_j} produced by Z_{k - d_i, j} exists only when k_i >= 1,
    # and there is no Y_{k - d_i - d_j} term
    s = _sgn(sum(k))
    out = [
        Zv(_add(k, (j, 1)), cx.n + i),
        Yv(_add(k, (i, -1), (j, 1)), SQRT2 * s * (k[i - 1] + _d(i, j))),
    ]
    if k[i - 1] >= 1:
        out += [Zv(_add(k, (i, -1)), j), Yv(_add(k, (i, -1), (j, 1)), -SQRT2 * s)]
    return vsum(out)


def lhs_lower_big_i(cx, k, i, j):
    return cx.mod.apply(odd_lower(j), cx.g1(BasisVector(k, i)))


def rhs_lower_big_i(cx, k, i, j):
    s = _sgn(sum(k))
    return vsum([
        Zv(_add(k, (j, -1)), i, INV_SQRT2 * k[j - 1]),
        Yv(k, _d(i, j) * s),
        Yv(_add(k, (i, 1), (j, -1)), s * (k[j - 1] + _d(i, j))),
        Zv(_add(k, (i, 1)), cx.n + j, SQRT2),
    ])


def lhs_gamma_big_i_lower(cx, k, i, j):
    return cx.g1(vsum([Zv(_add(k, (j, -1)), i), Zv(_add(k, (i, 1)), cx.n + j, -1)]))


def rhs_gamma_big_i_lower(cx, k, i, j):
    s = _sgn(sum(k))
    return vsum([
        Zv(_add(k, (j, 1)), i),
        Yv(_add(k, (i, 1), (j, 1)), -SQRT2 * s),
        Zv(_add(k, (i, 1)), j),
        Yv(_add(k, (i, 1), (j, 1)), -SQRT2 * s),
    ])


def rhs_gamma_big_i_lower_fixed(cx, k, i, j):
    # Gamma1(Z_{m,i}) = Z_{m,i} + (-1)^{|m|} sqrt2 Y_{m+d_i};
    # Gamma1(Z_{m,n+j}) = Z_{m,n+j} - (-1)^{|m|} sqrt2 m_j Y_{m-d_j}
    s = _sgn(sum(k))
    out = [
        Zv(_add(k, (i, 1)), cx.n + j, -1),
        Yv(_add(k, (i, 1), (j, -1)), -SQRT2 * s * (k[j - 1] + _d(i, j))),
    ]
    if k[j - 1] >= 1:
        out += [Zv(_add(k, (j, -1)), i), Yv(_add(k, (i, 1), (j, -1)), -SQRT2 * s)]
    return vsum(out)


def lhs_lower_big_ni(cx, k, i, j):
    return cx.mod.apply(odd_lower(j), cx.g1(BasisVector(k, cx.n + i)))


def rhs_lower_big_ni(cx, k, i, j):
    s = _sgn(sum(k))
    return vsum([
        Zv(_add(k, (j, -1)), cx.n + i, INV_SQRT2 * k[j - 1]),
        Yv(_add(k, (i, -1), (j, -1)), -s * k[i - 1] * (k[j - 1] - _d(i, j))),
        Zv(_add(k, (i, -1)), cx.n + j, -SQRT2 * k[i - 1]),
    ])


def lhs_gamma_big_ni_lower(cx, k, i, j):
    return cx.g1(vsum([Zv(_add(k, (j, -1)), cx.n + i), Zv(_add(k, (i, -1)), cx.n + j)]))


def rhs_gamma_big_ni_lower(cx, k, i, j):
    s = _sgn(sum(k))
    return vsum([
        Zv(_add(k, (j, 1)), i),
        Yv(_add(k, (i, -1), (j, 1)), SQRT2 * s * k[i - 1]),
        Yv(_add(k, (i, -1), (j, 1)), _d(i, j) * SQRT2 * s),
        Zv(_add(k, (i, -1)), j),
        Yv(_add(k, (i, -1), (j, 1)), -SQRT2 * s),
    ])


def rhs_gamma_big_ni_lower_slots(cx, k, i, j):
    # printed right side with Z_{k+d_j,i} -> Z_{k-d_j,n+i} and Z_{k-d_i,j} -> Z_{k-d_i,n+j}
    s = _sgn(sum(k))
    return vsum([
        Zv(_add(k, (j, -1)), cx.n + i),
        Yv(_add(k, (i, -1), (j, 1)), SQRT2 * s * k[i - 1]),
        Yv(_add(k, (i, -1), (j, 1)), _d(i, j) * SQRT2 * s),
        Zv(_add(k, (i, -1)), cx.n + j),
        Yv(_add(k, (i, -1), (j, 1)), -SQRT2 * s),
    ])


def rhs_gamma_big_ni_lower_fixed(cx, k, i, j):
    # each Z_{m,n+p} contributes -(-1)^{|m|} sqrt2 m_p Y_{m-d_p}; both land on Y_{k-d_i-d_j}
    s = _sgn(sum(k))
    out = []
    if k[j - 1] >= 1:
        out += [Zv(_add(k, (j, -1)), cx.n + i),
                Yv(_add(k, (i, -1), (j, -1)), SQRT2 * s * (k[i - 1] - _d(i, j)))]
    if k[i - 1] >= 1:
        out += [Zv(_add(k, (i, -1)), cx.n + j),
                Yv(_add(k, (i, -1), (j, -1)), SQRT2 * s * (k[j - 1] - _d(i, j)))]
    return vsum(out)


DISPLAYS: list[Display] = [
    Display("raise_lil", "X_{d_j} Gamma^{w2}(Y_k)", lhs_raise_lil, rhs_raise_lil, uses_i=False),
    Display("gamma_lil_up", "Gamma^{w2}(Y_{k+d_j})", lhs_gamma_lil_up, rhs_gamma_lil_up, uses_i=False),
    Display("lower_lil", "X_{-d_j} Gamma^{w2}(Y_k)", lhs_lower_lil, rhs_lower_lil,
            rhs_lower_lil_fixed, uses_i=False),
    Display("gamma_lil_down", "Gamma^{w2}(Y_{k-d_j})", lhs_gamma_lil_down, rhs_gamma_lil_down,
            rhs_gamma_lil_down_fixed, uses_i=False),
    Display("raise_big_i", "X_{d_j} Gamma^{w1}(Z_{k,i})", lhs_raise_big_i, rhs_raise_big_i),
    Display("gamma_big_i", "Gamma^{w1}(Z_{k+d_j,i} - Z_{k+d_i,j})", lhs_gamma_big_i, rhs_gamma_big_i),
    Display("raise_big_ni", "X_{d_j} Gamma^{w1}(Z_{k,n+i})", lhs_raise_big_ni, rhs_raise_big_ni),
    Display("gamma_big_ni", "Gamma^{w1}(Z_{k+d_j,n+i} + Z_{k-d_i,j})", lhs_gamma_big_ni,
            rhs_gamma_big_ni, rhs_gamma_big_ni_fixed),
    Display("lower_big_i", "X_{-d_j} Gamma^{w1}(Z_{k,i})", lhs_lower_big_i, rhs_lower_big_i),
    Display("gamma_big_i_lower", "Gamma^{w1}(Z_{k-d_j,i} - Z_{k+d_i,n+j})", lhs_gamma_big_i_lower,
            rhs_gamma_big_i_lower, rhs_gamma_big_i_lower_fixed),
    Display("lower_big_ni", "X_{-d_j} Gamma^{w1}(Z_{k,n+i})", lhs_lower_big_ni, rhs_lower_big_ni),
    Display("gamma_big_ni_lower", "Gamma^{w1}(Z_{k-d_j,n+i} + Z_{k-d_i,n+j})", lhs_gamma_big_ni_lower,
            rhs_gamma_big_ni_lower, rhs_gamma_big_ni_lower_fixed,
            slot_corrected=rhs_gamma_big_ni_lower_slots),
]
