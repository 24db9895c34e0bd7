"""The intertwining automorphisms Gamma^{w1}, Gamma^{w2} of V.

    Gamma = 1(x)1 + s*sqrt2 * sum_i d_i (x) T_i - s*sqrt2 * sum_i x_i (x) T_{-i}

with s = -1 for W1 and s = +1 for W2.  Operator tensors act with the Koszul
rule (S (x) A)(v (x) w) = (-1)^{|A||v|} S(v) (x) A(w); the alternative rule,
which also swaps A past S, is kept selectable so the choice can be tested.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .action import Generator, TensorModule, module, odd, odd_lower, odd_raise
from .exactfield import INV_SQRT2, ONE, SQRT2, ZERO, QSqrt2
from .linalg import ExactMatrix, det
from .weights import (
    BasisVector,
    LambdaC,
    SparseVector,
    Weight,
    WeightClass,
    basis_of,
    classify,
    k_of,
    shift,
    vsum,
)


class Kind(enum.Enum):
    W1 = -1
    W2 = 1

    @property
    def sign(self) -> int:
        return self.value

    @classmethod
    def parse(cls, text: str) -> Kind:
        try:
            return cls[text.strip().upper()]
        except KeyError:
            raise ValueError(f"intertwiner must be w1 or w2, got {text!r}") from None


KOSZUL_CONVENTIONS = ("input", "output")


class Intertwiner:
    """Gamma^{w1} or Gamma^{w2} on V for a fixed n.

    ``koszul="input"`` signs by the parity of the polynomial the operator
    receives; ``"output"`` signs by the parity after the polynomial factor
    has acted (equivalent to an extra (-1)^{|S||A|}).  ``flip`` negates the
    coefficient of the x_i (x) T_{-i} part; used only by negative controls.
    """

    def __init__(
        self,
        kind: Kind,
        n: int,
        koszul: str = "input",
        mod: TensorModule | None = None,
        flip: bool = False,
    ):
        if koszul not in KOSZUL_CONVENTIONS:
            raise ValueError(f"koszul must be one of {KOSZUL_CONVENTIONS}")
        self.kind = kind
        self.n = n
        self.koszul = koszul
        self.mod = mod or module(n)
        self.flip = flip
        self._cache: dict[BasisVector, SparseVector] = {}

    def apply_basis(self, b: BasisVector) -> SparseVector:
        hit = self._cache.get(b)
        if hit is not None:
            return hit
        n, k = self.n, b.k
        coef = SQRT2 * self.kind.sign
        terms: list[tuple[BasisVector, QSqrt2]] = [(b, ONE)]
        for i in range(1, n + 1):
            # d_i (x) T_i
            km = shift(k, i, -1)
            if km is not None:
                par = sum(k) if self.koszul == "input" else sum(km)
                sgn = -1 if par % 2 else 1
                for s, c in self.mod.std_image(odd_raise(i), b.slot):
                    terms.append((BasisVector(km, s), coef * c * (k[i - 1] * sgn)))
            # x_i (x) T_{-i}
            kp = shift(k, i)
            par = sum(k) if self.koszul == "input" else sum(kp)
            sgn = -1 if par % 2 else 1
            if self.flip:
                sgn = -sgn
            for s, c in self.mod.std_image(odd_lower(i), b.slot):
                terms.append((BasisVector(kp, s), -coef * c * sgn))
        out = self._cache[b] = SparseVector(terms)
        return out

    def __call__(self, v: SparseVector | BasisVector) -> SparseVector:
        if isinstance(v, BasisVector):
            return self.apply_basis(v)
        return vsum(self.apply_basis(b) * c for b, c in v.terms.items())

    def matrix(self, lam: Weight) -> ExactMatrix:
        basis = basis_of(lam)
        index = {b: p for p, b in enumerate(basis)}
        size = len(basis)
        cols = []
        for b in basis:
            img = self.apply_basis(b)
            col = [ZERO] * size
            for t, c in img.terms.items():
                if t not in index:
                    raise AssertionError(f"Gamma moved {b} out of its weight space (hit {t})")
                col[index[t]] = c
            cols.append(col)
        return ExactMatrix.from_rows([list(r) for r in zip(*cols)], size)


def gamma(kind: Kind, n: int, koszul: str = "input") -> Intertwiner:
    key = (kind, n, koszul)
    g = _GAMMAS.get(key)
    if g is None:
        g = _GAMMAS[key] = Intertwiner(kind, n, koszul)
    return g


_GAMMAS: dict[tuple, Intertwiner] = {}


def gamma_apply(kind: Kind, v: SparseVector | BasisVector, n: int | None = None) -> SparseVector:
    if n is None:
        if isinstance(v, BasisVector):
            n = v.n
        elif v.is_zero():
            return v
        else:
            n = len(next(iter(v.terms)).k)
    return gamma(kind, n)(v)


# ---------------------------------------------------------------------------
# weight blocks

@dataclass(frozen=True)
class WeightBlock:
    weight: Weight
    cls: WeightClass
    basis: tuple[BasisVector, ...]
    matrix_w1: ExactMatrix | None = None
    matrix_w2: ExactMatrix | None = None
    a_value: QSqrt2 | None = None

    def matrix(self, kind: Kind) -> ExactMatrix:
        m = self.matrix_w1 if kind is Kind.W1 else self.matrix_w2
        if m is None:
            raise ValueError(f"block was built without the {kind.name} matrix")
        return m

    def expected_det(self) -> QSqrt2:
        """The closed form 1 - (n + C) a^2 = 1 - 2(n + C) for Lambda_C blocks, 1 otherwise."""
        if isinstance(self.cls, LambdaC):
            n = len(self.weight)
            return QSqrt2(1 - 2 * (n + self.cls.C))
        return ONE


def restrict(kind: Kind | None, lam: Weight, koszul: str = "input") -> WeightBlock:
    """Matrices of Gamma restricted to the weight space of ``lam``.

    ``kind=None`` fills both matrices.
    """
    cls = classify(lam)
    n = len(lam)
    basis = tuple(basis_of(lam))
    a = None
    if isinstance(cls, LambdaC):
        a = SQRT2 * (-1 if sum(k_of(lam)) % 2 else 1)
    m1 = gamma(Kind.W1, n, koszul).matrix(lam) if kind in (None, Kind.W1) else None
    m2 = gamma(Kind.W2, n, koszul).matrix(lam) if kind in (None, Kind.W2) else None
    return WeightBlock(tuple(Fraction(c) for c in lam), cls, basis, m1, m2, a)


def arrowhead_violations(m: ExactMatrix) -> list[str]:
    """Check unit diagonal and zero entries off the first row and column."""
    out = []
    for i in range(m.rows):
        for j in range(m.cols):
            x = m[i, j]
            if i == j:
                if x != 1:
                    out.append(f"diagonal ({i},{j}) = {x}")
            elif i and j and x:
                out.append(f"off-arrow ({i},{j}) = {x}")
    return out


def arrowhead_det(m: ExactMatrix) -> QSqrt2:
    """Determinant of a unit-diagonal arrowhead: 1 - sum_i m[0,i] m[i,0]."""
    s = ZERO
    for i in range(1, m.rows):
        s = s + m[0, i] * m[i, 0]
    return ONE - s


# ---------------------------------------------------------------------------
# conjugated actions on the Y and Z bases

class WrongSlotError(ValueError):
    pass


def _check_odd(g: Generator) -> None:
    if g.kind != "odd":
        raise ValueError(f"conjugated actions are given for X_(+-delta_j) only, got {g}")


def conjugated_action_lil(g: Generator, y: BasisVector) -> SparseVector:
    """Action on x^k (x) v_0 after conjugating by Gamma^{w2}."""
    _check_odd(g)
    if y.slot != 0:
        raise WrongSlotError(f"{y} is not in the Y-basis")
    j, k = g.j, y.k
    if g.sign > 0:
        return SparseVector.basis(BasisVector(shift(k, j), 0), -INV_SQRT2)
    km = shift(k, j, -1)
    if km is None:
        return SparseVector()
    return SparseVector.basis(BasisVector(km, 0), -INV_SQRT2 * k[j - 1])


def conjugated_action_big(g: Generator, z: BasisVector) -> SparseVector:
    """Action on x^k (x) v_i, i >= 1, after conjugating by Gamma^{w1}."""
    _check_odd(g)
    if z.slot < 1:
        raise WrongSlotError(f"{z} is not in the Z-basis")
    n = len(z.k)
    j, k, slot = g.j, z.k, z.slot
    terms: list[tuple[BasisVector | None, QSqrt2]] = []

    def Zb(m, s):
        return None if m is None else BasisVector(m, s)

    if slot <= n:
        i = slot
        if g.sign > 0:
            terms.append((Zb(shift(k, j), i), INV_SQRT2))
            terms.append((Zb(shift(k, i), j), -SQRT2))
        else:
            terms.append((Zb(shift(k, j, -1), i), INV_SQRT2 * k[j - 1]))
            terms.append((Zb(shift(k, i), n + j), SQRT2))
    else:
        i = slot - n
        if g.sign > 0:
            terms.append((Zb(shift(k, j), n + i), INV_SQRT2))
            terms.append((Zb(shift(k, i, -1), j), SQRT2 * k[i - 1]))
        else:
            terms.append((Zb(shift(k, j, -1), n + i), INV_SQRT2 * k[j - 1]))
            terms.append((Zb(shift(k, i, -1), n + j), -SQRT2 * k[i - 1]))
    return SparseVector((b, c) for b, c in terms if b is not None)


def conjugated_action(g: Generator, b: BasisVector) -> SparseVector:
    return conjugated_action_lil(g, b) if b.slot == 0 else conjugated_action_big(g, b)
