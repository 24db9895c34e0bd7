"""Dense exact linear algebra over Q(sqrt 2).

Pivoting takes the first nonzero entry scanning down a column, so results
are deterministic.  Blocks here are small (at most 2n+1 square for weight
spaces, a few dozen rows for stacked annihilator systems).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .exactfield import ONE, ZERO, QSqrt2, Scalar


class SingularMatrixError(ArithmeticError):
    pass


@dataclass(frozen=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[QSqrt2, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entries do not match shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]], cols: int | None = None) -> ExactMatrix:
        data = tuple(tuple(QSqrt2.coerce(x) for x in r) for r in rows)
        c = cols if cols is not None else (len(data[0]) if data else 0)
        return cls(len(data), c, data)

    @classmethod
    def zeros(cls, r: int, c: int) -> ExactMatrix:
        return cls(r, c, tuple((ZERO,) * c for _ in range(r)))

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls(n, n, tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def diag(cls, values: Iterable[Scalar]) -> ExactMatrix:
        vals = [QSqrt2.coerce(v) for v in values]
        n = len(vals)
        return cls(n, n, tuple(tuple(vals[i] if i == j else ZERO for j in range(n)) for i in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> QSqrt2:
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> list[QSqrt2]:
        return [r[j] for r in self.entries]

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else ())

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        ocols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        out = []
        for r in self.entries:
            row = []
            for c in ocols:
                s = ZERO
                for x, y in zip(r, c):
                    if x and y:
                        s = s + x * y
                row.append(s)
            out.append(tuple(row))
        return ExactMatrix(self.rows, other.cols, tuple(out))

    def apply(self, v: Sequence[QSqrt2]) -> list[QSqrt2]:
        out = []
        for r in self.entries:
            s = ZERO
            for x, y in zip(r, v):
                if x and y:
                    s = s + x * y
            out.append(s)
        return out

    def is_square(self) -> bool:
        return self.rows == self.cols

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[x.to_json() for x in r] for r in self.entries],
        }

    @classmethod
    def from_json(cls, obj: dict) -> ExactMatrix:
        return cls.from_rows([[QSqrt2.from_json(x) for x in r] for r in obj["entries"]], obj["cols"])

    def pretty(self) -> str:
        cells = [[x.pretty() for x in r] for r in self.entries]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)


def rref(m: ExactMatrix) -> tuple[ExactMatrix, list[int], int]:
    """Reduced row-echelon form, pivot columns, rank."""
    a = [list(r) for r in m.entries]
    pivots: list[int] = []
    row = 0
    for col in range(m.cols):
        if row >= m.rows:
            break
        p = next((i for i in range(row, m.rows) if a[i][col]), None)
        if p is None:
            continue
        a[row], a[p] = a[p], a[row]
        piv_inv = a[row][col].inv()
        a[row] = [x * piv_inv if x else x for x in a[row]]
        for i in range(m.rows):
            if i != row and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y if y else x for x, y in zip(a[i], a[row])]
        pivots.append(col)
        row += 1
    return ExactMatrix(m.rows, m.cols, tuple(tuple(r) for r in a)), pivots, len(pivots)


def rank(m: ExactMatrix) -> int:
    return rref(m)[2]


def nullspace(m: ExactMatrix) -> list[list[QSqrt2]]:
    """Basis of ``{v : m v = 0}``; each vector's first nonzero entry is 1."""
    r, pivots, _ = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for i, pc in enumerate(pivots):
            v[pc] = -r[i, f]
        lead = next(x for x in v if x)
        if lead != 1:
            li = lead.inv()
            v = [x * li for x in v]
        basis.append(v)
    return basis


def det(m: ExactMatrix) -> QSqrt2:
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    a = [list(r) for r in m.entries]
    n = m.rows
    d = ONE
    for col in range(n):
        p = next((i for i in range(col, n) if a[i][col]), None)
        if p is None:
            return ZERO
        if p != col:
            a[col], a[p] = a[p], a[col]
            d = -d
        piv = a[col][col]
        d = d * piv
        piv_inv = piv.inv()
        for i in range(col + 1, n):
            if a[i][col]:
                f = a[i][col] * piv_inv
                a[i] = [x - f * y if y else x for x, y in zip(a[i], a[col])]
    return d


def inverse(m: ExactMatrix) -> ExactMatrix:
    if not m.is_square():
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    aug = ExactMatrix.from_rows(
        [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(m.entries)],
        2 * n,
    )
    r, pivots, _ = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise SingularMatrixError("matrix is singular")
    return ExactMatrix(n, n, tuple(tuple(row[n:]) for row in r.entries))
