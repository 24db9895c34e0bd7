"""osp(1|2n) generators and their action on V = C[x] (x) C^{1|2n}.

Three realizations live here: the standard matrices ``T_beta`` on
``C^{1|2n}``, the oscillator operators on ``C[x]``, and the super tensor
product action

    X(x^k (x) v_j) = X(x^k) (x) v_j + (-1)^{|X||k|} x^k (x) T_X(v_j).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable

from .exactfield import HALF, INV_SQRT2, ONE, ZERO, QSqrt2
from .linalg import ExactMatrix
from .weights import BasisVector, MultiIndex, SparseVector, shift, vsum

ODD_KINDS = ("odd",)


@dataclass(frozen=True)
class Generator:
    """A root vector or Cartan element.

    kind is one of ``odd`` (X_{sign d_i}), ``pair`` (X_{sign(d_i + d_j)}),
    ``double`` (X_{sign 2d_i}), ``mixed`` (X_{d_i - d_j}), ``cartan`` (H_{2d_i}).
    For single-index kinds ``j == i``.
    """

    kind: str
    sign: int
    i: int
    j: int

    def __post_init__(self):
        if self.kind not in ("odd", "pair", "double", "mixed", "cartan"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.i < 1 or self.j < 1:
            raise ValueError("indices are 1-based")
        if self.kind in ("pair", "mixed") and self.i == self.j:
            raise ValueError(f"{self.kind} generator needs distinct indices")
        if self.kind in ("odd", "double", "cartan") and self.i != self.j:
            raise ValueError(f"{self.kind} generator takes a single index")

    @property
    def parity(self) -> int:
        return 1 if self.kind == "odd" else 0

    @property
    def max_index(self) -> int:
        return max(self.i, self.j)

    def root(self, n: int) -> tuple[int, ...]:
        r = [0] * n
        if self.kind == "odd":
            r[self.i - 1] = self.sign
        elif self.kind == "pair":
            r[self.i - 1] = r[self.j - 1] = self.sign
        elif self.kind == "double":
            r[self.i - 1] = 2 * self.sign
        elif self.kind == "mixed":
            r[self.i - 1] += 1
            r[self.j - 1] -= 1
        return tuple(r)

    @property
    def label(self) -> str:
        s = "+" if self.sign > 0 else "-"
        if self.kind == "odd":
            return f"X{s}{self.i}"
        if self.kind == "pair":
            return f"X{s}{self.i}{s}{self.j}"
        if self.kind == "double":
            return f"X{s}2d{self.i}"
        if self.kind == "mixed":
            return f"X{self.i}-{self.j}"
        return f"H{self.i}"

    def __str__(self) -> str:
        return self.label


def odd_raise(j: int) -> Generator:
    """X_{delta_j}."""
    return Generator("odd", 1, j, j)


def odd_lower(j: int) -> Generator:
    """X_{-delta_j}."""
    return Generator("odd", -1, j, j)


def odd(sign: int, j: int) -> Generator:
    return Generator("odd", sign, j, j)


def even_pair(sign: int, i: int, j: int) -> Generator:
    return Generator("pair", sign, min(i, j), max(i, j))


def even_double(sign: int, j: int) -> Generator:
    return Generator("double", sign, j, j)


def mixed(i: int, j: int) -> Generator:
    """X_{delta_i - delta_j}."""
    return Generator("mixed", 1, i, j)


def cartan(j: int) -> Generator:
    return Generator("cartan", 1, j, j)


_LABEL_RE = [
    (re.compile(r"^X([+-])(\d+)$"), lambda m: odd(int(m[1] + "1"), int(m[2]))),
    (re.compile(r"^X([+-])(\d+)([+-])(\d+)$"), None),
    (re.compile(r"^X([+-])2d(\d+)$"), lambda m: even_double(int(m[1] + "1"), int(m[2]))),
    (re.compile(r"^X(\d+)-(\d+)$"), lambda m: mixed(int(m[1]), int(m[2]))),
    (re.compile(r"^H(\d+)$"), lambda m: cartan(int(m[1]))),
]


def parse_label(text: str, n: int | None = None) -> Generator:
    """Parse ``X+1``, ``X-1-2``, ``X+2d1``, ``X1-2``, ``H1`` and friends."""
    text = text.strip()
    g = None
    for rx, build in _LABEL_RE:
        m = rx.match(text)
        if not m:
            continue
        if build is None:
            if m[1] != m[3]:
                raise ValueError(f"mixed-sign pair label {text!r}; use 'Xi-j' for d_i - d_j")
            g = even_pair(int(m[1] + "1"), int(m[2]), int(m[4]))
        else:
            g = build(m)
        break
    if g is None:
        raise ValueError(f"unrecognized generator label {text!r}")
    if n is not None and g.max_index > n:
        raise ValueError(f"generator {text} needs n >= {g.max_index}")
    return g


def all_generators(n: int) -> list[Generator]:
    """The full root-vector basis plus Cartan elements."""
    out = []
    for j in range(1, n + 1):
        out += [odd_raise(j), odd_lower(j), even_double(1, j), even_double(-1, j), cartan(j)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out += [even_pair(1, i, j), even_pair(-1, i, j)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                out.append(mixed(i, j))
    return out


def positive_generators(n: int) -> list[Generator]:
    """Root vectors for the positive system {-d_l, -2d_l, d_i - d_j, -d_i - d_j (i<j)}."""
    out = []
    for l in range(1, n + 1):
        out += [odd_lower(l), even_double(-1, l)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out += [mixed(i, j), even_pair(-1, i, j)]
    return out


def simple_generators(n: int) -> list[Generator]:
    return [odd_lower(1)] + [mixed(i, i + 1) for i in range(1, n)]


# ---------------------------------------------------------------------------
# standard representation on C^{1|2n}

def standard_matrix(g: Generator, n: int) -> ExactMatrix:
    """The (2n+1)x(2n+1) block matrix [[0, r], [c, A]] representing g.

    Basis order is v_0, v_1..v_n, v_{n+1}..v_{2n}; column s is the image of v_s.
    """
    if g.max_index > n:
        raise ValueError(f"{g} is not defined for n={n}")
    size = 2 * n + 1
    r = [ZERO] * (2 * n)
    A = [[ZERO] * (2 * n) for _ in range(2 * n)]
    i, j = g.i - 1, g.j - 1
    if g.kind == "odd":
        # r = (delta_j, 0) for -delta_j, (0, delta_j) for +delta_j
        r[j + (n if g.sign > 0 else 0)] = ONE
    elif g.kind == "pair":
        if g.sign < 0:  # lower-left block E_ij + E_ji
            A[n + i][j] = ONE
            A[n + j][i] = ONE
        else:  # upper-right block E_ij + E_ji
            A[i][n + j] = ONE
            A[j][n + i] = ONE
    elif g.kind == "double":
        if g.sign < 0:
            A[n + j][j] = ONE
        else:
            A[j][n + j] = ONE
    elif g.kind == "mixed":
        A[i][j] = ONE
        A[n + j][n + i] = -ONE
    else:
        A[j][j] = ONE
        A[n + j][n + j] = -ONE
    # c^T = (r_{n+1..2n}, -r_{1..n})
    c = r[n:] + [-x for x in r[:n]]
    rows = [[ZERO] + r]
    for p in range(2 * n):
        rows.append([c[p]] + A[p])
    return ExactMatrix.from_rows(rows, size)


def is_osp_member(m: ExactMatrix, n: int) -> bool:
    """alpha = 0, c coupled to r, and A in sp(2n)."""
    if m.rows != 2 * n + 1 or m.cols != 2 * n + 1 or m[0, 0]:
        return False
    r = [m[0, s] for s in range(1, 2 * n + 1)]
    c = [m[s, 0] for s in range(1, 2 * n + 1)]
    if c != r[n:] + [-x for x in r[:n]]:
        return False
    A = [[m[p + 1, q + 1] for q in range(2 * n)] for p in range(2 * n)]
    # A^T J + J A = 0 with J = [[0, I], [-I, 0]]
    J = [[ZERO] * (2 * n) for _ in range(2 * n)]
    for p in range(n):
        J[p][n + p] = ONE
        J[n + p][p] = -ONE
    for p in range(2 * n):
        for q in range(2 * n):
            s = ZERO
            for t in range(2 * n):
                s = s + A[t][p] * J[t][q] + J[p][t] * A[t][q]
            if s:
                return False
    return True


# ---------------------------------------------------------------------------
# oscillator realization on C[x]

Poly = dict[MultiIndex, QSqrt2]


def _add_term(out: Poly, m: MultiIndex | None, c: QSqrt2) -> None:
    if m is None or not c:
        return
    s = out.get(m, ZERO) + c
    if s:
        out[m] = s
    else:
        out.pop(m, None)


def oscillator_apply(g: Generator, m: MultiIndex) -> Poly:
    """Image of the monomial x^m under the oscillator operator of g."""
    out: Poly = {}
    i, j = g.i, g.j
    if g.kind == "odd":
        if g.sign > 0:
            _add_term(out, shift(m, j), INV_SQRT2)
        else:
            _add_term(out, shift(m, j, -1), INV_SQRT2 * m[j - 1])
    elif g.kind == "double":
        if g.sign > 0:
            _add_term(out, shift(m, j, 2), HALF)
        else:
            # -1/2 d_j^2
            c = Fraction(-m[j - 1] * (m[j - 1] - 1), 2)
            _add_term(out, shift(m, j, -2), QSqrt2(c))
    elif g.kind == "pair":
        if g.sign > 0:
            _add_term(out, shift(shift(m, i), j), ONE)
        else:
            t = shift(m, i, -1)
            if t is not None:
                _add_term(out, shift(t, j, -1), QSqrt2(-m[i - 1] * t[j - 1]))
    elif g.kind == "mixed":
        t = shift(m, j, -1)
        if t is not None:
            _add_term(out, shift(t, i), QSqrt2(m[j - 1]))
    else:
        # x_j d_j + 1/2
        _add_term(out, m, QSqrt2(Fraction(2 * m[j - 1] + 1, 2)))
    return out


# ---------------------------------------------------------------------------
# tensor product action

Operator = Callable[[SparseVector], SparseVector]


class TensorModule:
    """The tensor product representation on V for a fixed n.

    Subclasses may override :meth:`standard` or :meth:`oscillator` to build
    deliberately broken actions for negative controls.
    """

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be >= 1")
        self.n = n
        self._std_cache: dict[Generator, ExactMatrix] = {}
        self._basis_cache: dict[tuple[Generator, BasisVector], SparseVector] = {}

    def standard(self, g: Generator) -> ExactMatrix:
        m = self._std_cache.get(g)
        if m is None:
            m = self._std_cache[g] = standard_matrix(g, self.n)
        return m

    def oscillator(self, g: Generator, k: MultiIndex) -> Poly:
        return oscillator_apply(g, k)

    def std_image(self, g: Generator, slot: int) -> list[tuple[int, QSqrt2]]:
        m = self.standard(g)
        return [(s, m[s, slot]) for s in range(2 * self.n + 1) if m[s, slot]]

    def apply_basis(self, g: Generator, b: BasisVector) -> SparseVector:
        key = (g, b)
        hit = self._basis_cache.get(key)
        if hit is not None:
            return hit
        if len(b.k) != self.n:
            raise ValueError(f"basis vector {b} does not live in V for n={self.n}")
        terms = [(BasisVector(m, b.slot), c) for m, c in self.oscillator(g, b.k).items()]
        sign = -1 if (g.parity and sum(b.k) % 2) else 1
        terms += [(BasisVector(b.k, s), c * sign) for s, c in self.std_image(g, b.slot)]
        out = self._basis_cache[key] = SparseVector(terms)
        return out

    def apply(self, g: Generator, v: SparseVector) -> SparseVector:
        return vsum(self.apply_basis(g, b) * c for b, c in v.terms.items())

    def op(self, g: Generator) -> Operator:
        return lambda v: self.apply(g, v)


@lru_cache(maxsize=None)
def module(n: int) -> TensorModule:
    return TensorModule(n)


def tensor_apply(g: Generator, v: SparseVector | BasisVector, n: int | None = None) -> SparseVector:
    if isinstance(v, BasisVector):
        v = SparseVector.basis(v)
    if n is None:
        if v.is_zero():
            return v
        n = len(next(iter(v.terms)).k)
    return module(n).apply(g, v)


# ---------------------------------------------------------------------------
# super brackets of operators

@dataclass(frozen=True)
class ParityOp:
    """A homogeneous linear operator on V together with its parity."""

    fn: Operator
    parity: int

    def __call__(self, v: SparseVector) -> SparseVector:
        return self.fn(v)


def gen_op(g: Generator, mod: TensorModule) -> ParityOp:
    return ParityOp(mod.op(g), g.parity)


def super_bracket(A: ParityOp, B: ParityOp) -> ParityOp:
    """[A, B] = AB - (-1)^{|A||B|} BA."""
    sign = -1 if (A.parity and B.parity) else 1

    def fn(v: SparseVector) -> SparseVector:
        return A(B(v)) - B(A(v)) * sign

    return ParityOp(fn, (A.parity + B.parity) % 2)


def bracket_apply(g1: Generator, g2: Generator, v: SparseVector, n: int | None = None) -> SparseVector:
    if n is None:
        n = len(next(iter(v.terms)).k) if v else 1
    mod = module(n)
    return super_bracket(gen_op(g1, mod), gen_op(g2, mod))(v)


def linear_combination(ops: Iterable[tuple[QSqrt2 | int, ParityOp]]) -> Operator:
    ops = list(ops)

    def fn(v: SparseVector) -> SparseVector:
        return vsum(op(v) * c for c, op in ops)

    return fn
