"""Deliberately broken actions and intertwiners used as negative controls."""

from __future__ import annotations

from .action import Generator, TensorModule, odd_raise
from .intertwiner import Intertwiner, Kind
from .linalg import ExactMatrix
from .weights import MultiIndex


class FlippedStandard(TensorModule):
    """Negate a single entry (row, col) of the standard matrix of one generator."""

    def __init__(self, n: int, target: Generator | None = None, entry: tuple[int, int] | None = None):
        super().__init__(n)
        self.target = target or odd_raise(1)
        self.entry = entry or (0, n + self.target.j)

    def standard(self, g: Generator) -> ExactMatrix:
        m = super().standard(g)
        if g != self.target:
            return m
        rows = [list(r) for r in m.entries]
        r, c = self.entry
        rows[r][c] = -rows[r][c]
        return ExactMatrix.from_rows(rows, m.cols)


class FlippedOscillator(TensorModule):
    """Negate the polynomial part of one generator."""

    def __init__(self, n: int, target: Generator | None = None):
        super().__init__(n)
        self.target = target or odd_raise(1)

    def oscillator(self, g: Generator, k: MultiIndex):
        out = super().oscillator(g, k)
        if g == self.target:
            return {m: -c for m, c in out.items()}
        return out


def flipped_gamma(kind: Kind, n: int) -> Intertwiner:
    """Gamma with the sign of its x_i (x) T_{-i} part reversed."""
    return Intertwiner(kind, n, flip=True)


def flipped_factory(kind: Kind, n: int, koszul: str, mod: TensorModule) -> Intertwiner:
    """Factory form of :func:`flipped_gamma` for suites that build both readings."""
    return Intertwiner(kind, n, koszul, mod, flip=True)
