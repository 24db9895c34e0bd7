"""Exact arithmetic in Q(sqrt 2).

Every coefficient in the package is a :class:`QSqrt2`.  Rational parts are
``fractions.Fraction`` so numerators and denominators are arbitrary precision.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Scalar = Union["QSqrt2", Fraction, int]


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a Fraction; floats are rejected."""
    text = text.strip()
    if not text or any(c in text for c in ".eE"):
        raise ValueError(f"not an exact rational: {text!r}")
    return Fraction(text)


class QSqrt2:
    """The number ``a + b*sqrt(2)`` with rational ``a`` and ``b``.

    Instances are immutable and hashable; equal values compare and hash
    equal because Fraction is canonical (reduced, positive denominator).
    """

    __slots__ = ("_a", "_b")

    def __init__(self, a: int | Fraction = 0, b: int | Fraction = 0) -> None:
        if isinstance(a, float) or isinstance(b, float):
            raise TypeError("QSqrt2 takes exact rationals, not floats")
        object.__setattr__(self, "_a", Fraction(a))
        object.__setattr__(self, "_b", Fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("QSqrt2 is immutable")

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @classmethod
    def coerce(cls, x: Scalar) -> QSqrt2:
        if isinstance(x, QSqrt2):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {type(x).__name__} to QSqrt2")

    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QSqrt2):
            return self._a == other._a and self._b == other._b
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and self._a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b))

    def __repr__(self) -> str:
        return f"QSqrt2({_frac_str(self._a)}, {_frac_str(self._b)})"

    def __str__(self) -> str:
        return self.pretty()

    def pretty(self) -> str:
        """Render as ``"p/q + r/s√2"`` with zero parts elided."""
        if self._b == 0:
            return _frac_str(self._a)
        if self._b == 1:
            rad = "√2"
        elif self._b == -1:
            rad = "-√2"
        else:
            rad = f"{_frac_str(self._b)}√2"
        if self._a == 0:
            return rad
        if rad.startswith("-"):
            return f"{_frac_str(self._a)} - {rad[1:]}"
        return f"{_frac_str(self._a)} + {rad}"

    def __neg__(self) -> QSqrt2:
        return QSqrt2(-self._a, -self._b)

    def __add__(self, other: Scalar) -> QSqrt2:
        try:
            o = QSqrt2.coerce(other)
        except TypeError:
            return NotImplemented
        return QSqrt2(self._a + o._a, self._b + o._b)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> QSqrt2:
        try:
            o = QSqrt2.coerce(other)
        except TypeError:
            return NotImplemented
        return QSqrt2(self._a - o._a, self._b - o._b)

    def __rsub__(self, other: Scalar) -> QSqrt2:
        return (-self) + other

    def __mul__(self, other: Scalar) -> QSqrt2:
        if isinstance(other, (int, Fraction)):
            return QSqrt2(self._a * other, self._b * other)
        if not isinstance(other, QSqrt2):
            return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, other._a, other._b
        return QSqrt2(a1 * a2 + 2 * b1 * b2, a1 * b2 + a2 * b1)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """Field norm ``a^2 - 2 b^2``; nonzero for every nonzero element."""
        return self._a * self._a - 2 * self._b * self._b

    def conjugate(self) -> QSqrt2:
        return QSqrt2(self._a, -self._b)

    def inv(self) -> QSqrt2:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(sqrt 2)")
        n = self.norm()
        return QSqrt2(self._a / n, -self._b / n)

    def __truediv__(self, other: Scalar) -> QSqrt2:
        try:
            o = QSqrt2.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other: Scalar) -> QSqrt2:
        return QSqrt2.coerce(other) * self.inv()

    def __pow__(self, e: int) -> QSqrt2:
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inv() ** (-e)
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def to_json(self) -> dict[str, str]:
        return {"a": _frac_str(self._a), "b": _frac_str(self._b)}

    @classmethod
    def from_json(cls, obj: dict) -> QSqrt2:
        return cls(parse_rational(str(obj["a"])), parse_rational(str(obj.get("b", "0"))))

    def __float__(self) -> float:
        # display/debug only; never used in computation
        return float(self._a) + float(self._b) * 2 ** 0.5


def add(x: QSqrt2, y: QSqrt2) -> QSqrt2:
    return x + y


def mul(x: QSqrt2, y: QSqrt2) -> QSqrt2:
    return x * y


def inv(x: QSqrt2) -> QSqrt2:
    return x.inv()


ZERO = QSqrt2(0, 0)
ONE = QSqrt2(1, 0)
SQRT2 = QSqrt2(0, 1)
INV_SQRT2 = QSqrt2(0, Fraction(1, 2))
HALF = QSqrt2(Fraction(1, 2), 0)
