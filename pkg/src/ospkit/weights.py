"""Graded basis of V = C[x_1..x_n] (x) C^{1|2n}.

Elementary tensors ``x^k (x) v_j`` are :class:`BasisVector`; slot 0 is the even
vector ``v_0`` (these are the ``Y_k``), slots ``1..2n`` are odd (the ``Z_{k,j}``).
Weights are tuples of Fractions, always half-integers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .exactfield import ONE, QSqrt2, Scalar, parse_rational

HALF = Fraction(1, 2)

MultiIndex = tuple[int, ...]
Weight = tuple[Fraction, ...]


class NotAWeightError(ValueError):
    pass


def unit(n: int, j: int) -> MultiIndex:
    """The multi-index delta_j (1-based ``j``)."""
    return tuple(1 if i == j - 1 else 0 for i in range(n))


def shift(k: MultiIndex, j: int, by: int = 1) -> MultiIndex | None:
    """``k + by*delta_j``, or None when an entry would go negative."""
    out = list(k)
    out[j - 1] += by
    if out[j - 1] < 0:
        return None
    return tuple(out)


def degree(k: MultiIndex) -> int:
    return sum(k)


def multi_indices(n: int, deg: int) -> Iterator[MultiIndex]:
    """All k in Z_{>=0}^n with |k| = deg, in lexicographic order."""
    if n == 1:
        yield (deg,)
        return
    for first in range(deg, -1, -1):
        for rest in multi_indices(n - 1, deg - first):
            yield (first,) + rest


def multi_indices_upto(n: int, max_deg: int) -> Iterator[MultiIndex]:
    for d in range(max_deg + 1):
        yield from multi_indices(n, d)


@dataclass(frozen=True)
class BasisVector:
    k: MultiIndex
    slot: int

    @property
    def n(self) -> int:
        return len(self.k)

    @property
    def parity(self) -> int:
        return (sum(self.k) + (0 if self.slot == 0 else 1)) % 2

    @property
    def weight(self) -> Weight:
        return weight_of(self)

    def sort_key(self) -> tuple:
        return (self.slot, self.k)

    def label(self) -> str:
        ks = ",".join(map(str, self.k))
        return f"Y({ks})" if self.slot == 0 else f"Z(({ks}),{self.slot})"

    def __str__(self) -> str:
        mono = "*".join(
            f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(self.k) if e
        ) or "1"
        return f"{mono}⊗v{self.slot}"

    def to_json(self) -> dict:
        return {"k": list(self.k), "slot": self.slot}

    @classmethod
    def from_json(cls, obj: Mapping) -> BasisVector:
        k = tuple(int(e) for e in obj["k"])
        slot = int(obj["slot"])
        if any(e < 0 for e in k) or not 0 <= slot <= 2 * len(k):
            raise ValueError(f"invalid basis vector {obj!r}")
        return cls(k, slot)


def Y(k: Iterable[int]) -> BasisVector:
    return BasisVector(tuple(k), 0)


def Z(k: Iterable[int], i: int) -> BasisVector:
    return BasisVector(tuple(k), i)


def weight_of(b: BasisVector) -> Weight:
    n = len(b.k)
    w = [e + HALF for e in b.k]
    if 1 <= b.slot <= n:
        w[b.slot - 1] += 1
    elif b.slot > n:
        w[b.slot - n - 1] -= 1
    return tuple(w)


class SparseVector:
    """Finite Q(sqrt 2)-linear combination of basis vectors.

    Zero coefficients are never stored.  Treated as immutable by callers;
    arithmetic returns new vectors.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[BasisVector, Scalar] | Iterable[tuple[BasisVector, Scalar]] = ()):
        acc: dict[BasisVector, QSqrt2] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for b, c in items:
            c = QSqrt2.coerce(c)
            if c.is_zero():
                continue
            s = acc.get(b)
            s = c if s is None else s + c
            if s.is_zero():
                acc.pop(b, None)
            else:
                acc[b] = s
        self._terms = acc

    @classmethod
    def basis(cls, b: BasisVector, c: Scalar = ONE) -> SparseVector:
        return cls([(b, c)])

    @property
    def terms(self) -> dict[BasisVector, QSqrt2]:
        return dict(self._terms)

    def items(self) -> list[tuple[BasisVector, QSqrt2]]:
        return sorted(self._terms.items(), key=lambda t: t[0].sort_key())

    def coeff(self, b: BasisVector) -> QSqrt2:
        return self._terms.get(b, QSqrt2())

    def support(self) -> list[BasisVector]:
        return [b for b, _ in self.items()]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SparseVector):
            return self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: SparseVector) -> SparseVector:
        if not isinstance(other, SparseVector):
            return NotImplemented
        return SparseVector(itertools.chain(self._terms.items(), other._terms.items()))

    def __neg__(self) -> SparseVector:
        return SparseVector((b, -c) for b, c in self._terms.items())

    def __sub__(self, other: SparseVector) -> SparseVector:
        if not isinstance(other, SparseVector):
            return NotImplemented
        return self + (-other)

    def __mul__(self, s: Scalar) -> SparseVector:
        s = QSqrt2.coerce(s)
        if s.is_zero():
            return SparseVector()
        return SparseVector((b, c * s) for b, c in self._terms.items())

    __rmul__ = __mul__

    def weight(self) -> Weight | None:
        """Common weight of all terms, or None for zero or mixed vectors."""
        ws = {weight_of(b) for b in self._terms}
        return ws.pop() if len(ws) == 1 else None

    def normalized(self) -> SparseVector:
        """Scale so the first coefficient in canonical order is 1."""
        if not self._terms:
            return self
        return self * self.items()[0][1].inv()

    def __repr__(self) -> str:
        return f"SparseVector({self.pretty()})"

    def pretty(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for b, c in self.items():
            if c == 1:
                parts.append(str(b))
            elif c == -1:
                parts.append(f"-{b}")
            else:
                parts.append(f"({c.pretty()}){b}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> list[dict]:
        return [{"basis": b.to_json(), "coeff": c.to_json()} for b, c in self.items()]

    @classmethod
    def from_json(cls, obj) -> SparseVector:
        if isinstance(obj, Mapping):
            obj = obj["terms"]
        return cls(
            (BasisVector.from_json(t["basis"]), QSqrt2.from_json(t["coeff"])) for t in obj
        )


def vsum(vectors: Iterable[SparseVector]) -> SparseVector:
    return SparseVector(itertools.chain.from_iterable(v.terms.items() for v in vectors))


# ---------------------------------------------------------------------------
# weight classes

@dataclass(frozen=True)
class LambdaJ:
    """The weight 1/2 nu_n - delta_j; its space is spanned by 1 (x) v_{n+j}."""

    j: int


@dataclass(frozen=True)
class LambdaC:
    """All components positive; ``positions`` are the components != 1/2."""

    C: int
    positions: tuple[int, ...]


@dataclass(frozen=True)
class LambdaNeg:
    """Component j equals -1/2 but the weight is not 1/2 nu_n - delta_j.

    Such weights belong to ``x^m (x) v_{n+j}`` with ``m_j = 0`` and ``m != 0``;
    the space is one-dimensional.
    """

    j: int


WeightClass = LambdaJ | LambdaC | LambdaNeg


def parse_weight(text: str, n: int | None = None) -> Weight:
    comps = tuple(parse_rational(p) for p in text.split(","))
    if n is not None and len(comps) != n:
        raise ValueError(f"expected {n} components, got {len(comps)}")
    return comps


def format_weight(lam: Weight) -> str:
    return "(" + ", ".join(str(c) for c in lam) + ")"


def _shadow(lam: Weight) -> MultiIndex:
    """``lam - 1/2 nu_n`` as integers; raises if not half-integral."""
    out = []
    for c in lam:
        d = Fraction(c) - HALF
        if d.denominator != 1:
            raise NotAWeightError(f"{format_weight(lam)} is not half-integral")
        out.append(int(d))
    return tuple(out)


def classify(lam: Weight) -> WeightClass:
    lam = tuple(Fraction(c) for c in lam)
    if not lam:
        raise NotAWeightError("empty weight")
    k = _shadow(lam)
    neg = [i for i, e in enumerate(k) if e < 0]
    if any(e < -1 for e in k) or len(neg) > 1:
        raise NotAWeightError(f"{format_weight(lam)} is not a weight of V")
    if neg:
        j = neg[0] + 1
        if all(e == 0 for i, e in enumerate(k) if i != j - 1):
            return LambdaJ(j)
        return LambdaNeg(j)
    positions = tuple(i + 1 for i, e in enumerate(k) if e != 0)
    return LambdaC(len(positions), positions)


def basis_of(lam: Weight) -> list[BasisVector]:
    """Ordered basis of the weight space: Y first, then Z_{k+d_j,n+j}, then Z_{k-d_i,i}."""
    cls = classify(lam)
    k = _shadow(lam)
    n = len(k)
    if isinstance(cls, (LambdaJ, LambdaNeg)):
        return [Z(shift(k, cls.j), n + cls.j)]
    out = [Y(k)]
    out += [Z(shift(k, j), n + j) for j in range(1, n + 1)]
    out += [Z(shift(k, i, -1), i) for i in cls.positions]
    return out


def k_of(lam: Weight) -> MultiIndex:
    """``lam - 1/2 nu_n`` (may contain one -1 entry)."""
    return _shadow(tuple(Fraction(c) for c in lam))


def weight_from_k(k: MultiIndex) -> Weight:
    return tuple(e + HALF for e in k)


def weight_sort_key(lam: Weight) -> tuple:
    return (sum(lam), tuple(reversed(lam)))


def enumerate_weights(n: int, max_deg: int) -> list[Weight]:
    """Weights of V up to the truncation ``max_deg``.

    Includes every ``k + 1/2 nu_n`` with ``|k| <= max_deg``, the n weights
    ``1/2 nu_n - delta_j``, and the weights ``m + 1/2 nu_n - delta_j``
    (``m_j = 0``, ``m != 0``) whose polynomial part has ``|m| <= max_deg``.
    """
    if n < 1 or max_deg < 0:
        raise ValueError("need n >= 1 and max_deg >= 0")
    found: set[Weight] = set()
    for k in multi_indices_upto(n, max_deg):
        found.add(weight_from_k(k))
    for j in range(1, n + 1):
        for m in multi_indices_upto(n, max_deg):
            if m[j - 1] == 0:
                found.add(weight_from_k(m[: j - 1] + (-1,) + m[j:]))
    return sorted(found, key=weight_sort_key)


def all_basis_vectors(n: int, max_poly_deg: int) -> Iterator[BasisVector]:
    """Every elementary tensor with polynomial degree <= max_poly_deg."""
    for k in multi_indices_upto(n, max_poly_deg):
        for slot in range(2 * n + 1):
            yield BasisVector(k, slot)
