"""Vectors of V annihilated by sets of positive root vectors, weight by weight.

Annihilation is weight-local, so every per-weight answer is exact; only the
list of weights scanned is truncated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .action import (
    Generator,
    TensorModule,
    even_double,
    even_pair,
    mixed,
    module,
    odd_lower,
    positive_generators,
    simple_generators,
)
from .exactfield import SQRT2, QSqrt2
from .linalg import ExactMatrix, nullspace, rank
from .weights import (
    BasisVector,
    SparseVector,
    Weight,
    basis_of,
    enumerate_weights,
    format_weight,
    weight_of,
)


@dataclass(frozen=True)
class AnnihilatorSpec:
    name: str
    generators: Callable[[int], list[Generator]]

    def __call__(self, n: int) -> list[Generator]:
        return self.generators(n)


FULL_POSITIVE = AnnihilatorSpec("full", positive_generators)
MINUS_DELTA = AnnihilatorSpec("minus-delta", lambda n: [odd_lower(i) for i in range(1, n + 1)])
DELTA_DELTA = AnnihilatorSpec("delta-delta", lambda n: [mixed(i, i + 1) for i in range(1, n)])
SIMPLE = AnnihilatorSpec("simple", simple_generators)
MINUS_DELTA_AND_DELTA_DELTA = AnnihilatorSpec(
    "minus-delta+delta-delta",
    lambda n: MINUS_DELTA(n) + DELTA_DELTA(n),
)

SPECS = {s.name: s for s in (FULL_POSITIVE, MINUS_DELTA, DELTA_DELTA, SIMPLE)}


@dataclass
class SingularReport:
    weight: Weight
    dimension: int
    basis: list[SparseVector] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "weight": [str(c) for c in self.weight],
            "dimension": self.dimension,
            "basis": [v.to_json() for v in self.basis],
        }


def stacked_system(gens: Sequence[Generator], basis: Sequence[BasisVector], mod: TensorModule) -> ExactMatrix:
    """Rows: (generator, target basis vector); columns: the weight-space basis."""
    rows: dict[tuple[Generator, BasisVector], list[QSqrt2]] = {}
    size = len(basis)
    for col, b in enumerate(basis):
        for g in gens:
            for t, c in mod.apply_basis(g, b).terms.items():
                row = rows.setdefault((g, t), [QSqrt2()] * size)
                row[col] = c
    ordered = sorted(rows.items(), key=lambda kv: (kv[0][0].label, kv[0][1].sort_key()))
    return ExactMatrix.from_rows([r for _, r in ordered], size)


def annihilated_at(spec: AnnihilatorSpec | Sequence[Generator], lam: Weight,
                   mod: TensorModule | None = None) -> SingularReport:
    n = len(lam)
    mod = mod or module(n)
    gens = spec(n) if isinstance(spec, AnnihilatorSpec) else list(spec)
    basis = basis_of(lam)
    system = stacked_system(gens, basis, mod)
    if system.rows == 0:
        null = [[QSqrt2(1) if i == j else QSqrt2() for i in range(len(basis))] for j in range(len(basis))]
    else:
        null = nullspace(system)
    vecs = [SparseVector(zip(basis, coords)) for coords in null]
    for v in vecs:
        for g in gens:
            if not mod.apply(g, v).is_zero():
                raise AssertionError(f"solver returned {v} not killed by {g}")
    return SingularReport(tuple(lam), len(vecs), vecs)


def scan_singular(n: int, max_deg: int, spec: AnnihilatorSpec = FULL_POSITIVE,
                  mod: TensorModule | None = None) -> list[SingularReport]:
    return [annihilated_at(spec, lam, mod) for lam in enumerate_weights(n, max_deg)]


def total_dimension(reports: Iterable[SingularReport]) -> int:
    return sum(r.dimension for r in reports)


# ---------------------------------------------------------------------------
# closed-form vectors

def w1(n: int, j: int | None = None) -> SparseVector:
    """1 (x) v_{n+j}; j defaults to n."""
    j = n if j is None else j
    return SparseVector.basis(BasisVector((0,) * n, n + j))


def w2(n: int) -> SparseVector:
    """1 (x) v_0 + sqrt2 sum_j x_j (x) v_{n+j}."""
    z = (0,) * n
    terms = [(BasisVector(z, 0), QSqrt2(1))]
    for j in range(1, n + 1):
        k = tuple(1 if p == j - 1 else 0 for p in range(n))
        terms.append((BasisVector(k, n + j), SQRT2))
    return SparseVector(terms)


def w3(n: int, j: int) -> SparseVector:
    """-sqrt2 x_j (x) v_0 + 1 (x) v_j + x_j^2 (x) v_{n+j}."""
    e = tuple(1 if p == j - 1 else 0 for p in range(n))
    e2 = tuple(2 if p == j - 1 else 0 for p in range(n))
    return SparseVector([
        (BasisVector(e, 0), -SQRT2),
        (BasisVector((0,) * n, j), QSqrt2(1)),
        (BasisVector(e2, n + j), QSqrt2(1)),
    ])


# ---------------------------------------------------------------------------
# span comparisons

def span_matrix(vectors: Sequence[SparseVector]) -> ExactMatrix:
    support = sorted({b for v in vectors for b in v.terms}, key=BasisVector.sort_key)
    index = {b: p for p, b in enumerate(support)}
    rows = []
    for v in vectors:
        row = [QSqrt2()] * len(support)
        for b, c in v.terms.items():
            row[index[b]] = c
        rows.append(row)
    return ExactMatrix.from_rows(rows, len(support))


def span_rank(vectors: Sequence[SparseVector]) -> int:
    vectors = [v for v in vectors if not v.is_zero()]
    if not vectors:
        return 0
    return rank(span_matrix(vectors))


def same_span(a: Sequence[SparseVector], b: Sequence[SparseVector]) -> tuple[bool, int, int, int]:
    ra, rb, rab = span_rank(a), span_rank(b), span_rank(list(a) + list(b))
    return ra == rb == rab, ra, rb, rab


def in_span(v: SparseVector, vectors: Sequence[SparseVector]) -> bool:
    return span_rank(list(vectors) + [v]) == span_rank(vectors)


# ---------------------------------------------------------------------------
# the delta-delta families

def _x1(n: int, k1: int, extra: dict[int, int] | None = None) -> tuple[int, ...]:
    k = [0] * n
    k[0] = k1
    for p, e in (extra or {}).items():
        k[p - 1] += e
    return tuple(k)


def delta_delta_families(n: int, k1: int, corrected: bool = True) -> dict[str, SparseVector]:
    """The five spanning families at exponent k1 of x_1.

    The last family is printed as x_1^{k1} x_2 (x) v_1 - x_1^{k1} (x) v_2, which
    is not a weight vector; the corrected reading uses x_1^{k1+1} (x) v_2.
    """
    fam = {
        "x1^k (x) v0": SparseVector.basis(BasisVector(_x1(n, k1), 0)),
        "x1^k sum x_j (x) v_{n+j}": SparseVector(
            (BasisVector(_x1(n, k1, {j: 1}), n + j), QSqrt2(1)) for j in range(1, n + 1)
        ),
        "x1^k (x) v_{2n}": SparseVector.basis(BasisVector(_x1(n, k1), 2 * n)),
        "x1^k (x) v1": SparseVector.basis(BasisVector(_x1(n, k1), 1)),
    }
    second = _x1(n, k1 + 1) if corrected else _x1(n, k1)
    fam["x1^k x2 (x) v1 - x1^? (x) v2"] = SparseVector([
        (BasisVector(_x1(n, k1, {2: 1}), 1), QSqrt2(1)),
        (BasisVector(second, 2), QSqrt2(-1)),
    ])
    return fam


@dataclass
class DeltaDeltaSpanReport:
    n: int
    max_deg: int
    solver_rank: int
    family_rank: int
    joint_rank: int
    equal: bool
    corrected: bool
    weights_checked: int
    mismatched_weights: list[Weight] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "max_deg": self.max_deg,
            "corrected_family": self.corrected,
            "solver_rank": self.solver_rank,
            "family_rank": self.family_rank,
            "joint_rank": self.joint_rank,
            "equal": self.equal,
            "weights_checked": self.weights_checked,
            "mismatched_weights": [format_weight(w) for w in self.mismatched_weights],
        }


def check_delta_delta_span(n: int, max_deg: int, corrected: bool = True,
                   mod: TensorModule | None = None) -> DeltaDeltaSpanReport:
    """Compare the delta-delta nullspaces over the scanned weights with the family span.

    Family vectors are kept when every term has a scanned weight.  The
    comparison is global (ranks of stacked spans) so a non-homogeneous family
    member is handled the same way as the others; per-weight mismatches are
    listed when the families are homogeneous.
    """
    if n < 2:
        raise ValueError("the delta-delta set is empty for n = 1")
    mod = mod or module(n)
    weights = enumerate_weights(n, max_deg)
    wset = set(weights)
    reports = {lam: annihilated_at(DELTA_DELTA, lam, mod) for lam in weights}
    solver = [v for r in reports.values() for v in r.basis]
    family: list[SparseVector] = []
    for k1 in range(max_deg + 2):
        for v in delta_delta_families(n, k1, corrected).values():
            if all(weight_of(b) in wset for b in v.terms):
                family.append(v)
    equal, rs, rf, rj = same_span(solver, family)
    mismatched = []
    if not equal:
        by_weight: dict[Weight, list[SparseVector]] = {}
        for v in family:
            w = v.weight()
            if w is not None:
                by_weight.setdefault(w, []).append(v)
        for lam in weights:
            ok, *_ = same_span(reports[lam].basis, by_weight.get(lam, []))
            if not ok:
                mismatched.append(lam)
    return DeltaDeltaSpanReport(n, max_deg, rs, rf, rj, equal, corrected, len(weights), mismatched)
