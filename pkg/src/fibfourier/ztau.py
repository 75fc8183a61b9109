"""Exact arithmetic for the golden-ratio ring Z[tau] and its rational span.

tau = (1 + sqrt5)/2 satisfies tau**2 = tau + 1.  An element a + b*tau is kept
as its coefficient pair (a, b); conjugation sends tau to 1 - tau and swaps the
two real embeddings (physical and internal).  Every order decision reduces to
integer comparisons, never to floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

TAU: float = (1.0 + math.sqrt(5.0)) / 2.0
TAU_STAR: float = 1.0 - TAU
SQRT5: float = math.sqrt(5.0)
# Pairing rates of the scheme: <(k, k'), (t, 0)> = 2*DELTA*k*t and
# <(k, k'), (0, u)> = 2*DELTA_STAR*k'*u.  Both constants are positive.
DELTA: float = 1.0 / (TAU * TAU + 1.0)
DELTA_STAR: float = 1.0 / (TAU_STAR * TAU_STAR + 1.0)


class ArithmeticCapacityError(ArithmeticError):
    """An exact value grew past what the float range can represent."""


class EmbeddedPair(NamedTuple):
    x: float
    x_star: float


@dataclass(frozen=True)
class SchemeConstants:
    tau: float = TAU
    tau_star: float = TAU_STAR
    sqrt5: float = SQRT5
    delta: float = DELTA
    delta_star: float = DELTA_STAR


CONSTANTS = SchemeConstants()


def _sign_root5(u: int, v: int) -> int:
    # sign of u + v*sqrt5; u*u == 5*v*v only when u == v == 0
    if v == 0:
        return (u > 0) - (u < 0)
    if u == 0:
        return (v > 0) - (v < 0)
    su = 1 if u > 0 else -1
    sv = 1 if v > 0 else -1
    if su == sv:
        return su
    return su if u * u > 5 * v * v else sv


def _embed_floats(a, b) -> EmbeddedPair:
    try:
        fa = float(a)
        fb = float(b)
    except OverflowError as exc:
        raise ArithmeticCapacityError("coefficients exceed float range") from exc
    return EmbeddedPair(fa + fb * TAU, fa + fb * TAU_STAR)


class ZTau:
    """a + b*tau with integer coefficients."""

    __slots__ = ("a", "b")

    def __init__(self, a: int = 0, b: int = 0) -> None:
        self.a = a
        self.b = b

    def __repr__(self) -> str:
        return f"ZTau({self.a}, {self.b})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ZTau):
            return self.a == other.a and self.b == other.b
        if isinstance(other, int):
            return self.a == other and self.b == 0
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __add__(self, other: ZTau | int) -> ZTau:
        if isinstance(other, int):
            return ZTau(self.a + other, self.b)
        return ZTau(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other: ZTau | int) -> ZTau:
        if isinstance(other, int):
            return ZTau(self.a - other, self.b)
        return ZTau(self.a - other.a, self.b - other.b)

    def __rsub__(self, other: int) -> ZTau:
        return ZTau(other - self.a, -self.b)

    def __neg__(self) -> ZTau:
        return ZTau(-self.a, -self.b)

    def __mul__(self, other: ZTau | int) -> ZTau:
        if isinstance(other, int):
            return ZTau(self.a * other, self.b * other)
        # (a + b*tau)(c + d*tau) = ac + bd + (ad + bc + bd)*tau
        a, b, c, d = self.a, self.b, other.a, other.b
        return ZTau(a * c + b * d, a * d + b * c + b * d)

    __rmul__ = __mul__

    def conj(self) -> ZTau:
        return ZTau(self.a + self.b, -self.b)

    def qtau(self) -> QTau:
        return QTau(self.a, self.b)

    def embed(self) -> EmbeddedPair:
        return _embed_floats(self.a, self.b)

    @property
    def value(self) -> float:
        return self.embed().x

    def sign(self) -> int:
        return _sign_root5(2 * self.a + self.b, self.b)

    def __lt__(self, other: ZTau | int) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: ZTau | int) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other: ZTau | int) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other: ZTau | int) -> bool:
        return (self - other).sign() >= 0


RationalLike = Union[int, Fraction]


class QTau:
    """a + b*tau with rational coefficients, the fraction field over ZTau."""

    __slots__ = ("a", "b")

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0) -> None:
        self.a = Fraction(a)
        self.b = Fraction(b)

    def __repr__(self) -> str:
        return f"QTau({self.a!r}, {self.b!r})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QTau):
            return self.a == other.a and self.b == other.b
        if isinstance(other, ZTau):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.a == other and self.b == 0
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    @classmethod
    def from_ztau(cls, x: ZTau) -> QTau:
        return cls(x.a, x.b)

    @staticmethod
    def _coerce(other: QTau | ZTau | RationalLike) -> QTau:
        if isinstance(other, QTau):
            return other
        if isinstance(other, ZTau):
            return QTau(other.a, other.b)
        return QTau(other, 0)

    def __add__(self, other: QTau | ZTau | RationalLike) -> QTau:
        o = self._coerce(other)
        return QTau(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other: QTau | ZTau | RationalLike) -> QTau:
        o = self._coerce(other)
        return QTau(self.a - o.a, self.b - o.b)

    def __rsub__(self, other: QTau | ZTau | RationalLike) -> QTau:
        return self._coerce(other) - self

    def __neg__(self) -> QTau:
        return QTau(-self.a, -self.b)

    def __mul__(self, other: QTau | ZTau | RationalLike) -> QTau:
        o = self._coerce(other)
        a, b, c, d = self.a, self.b, o.a, o.b
        return QTau(a * c + b * d, a * d + b * c + b * d)

    __rmul__ = __mul__

    def conj(self) -> QTau:
        return QTau(self.a + self.b, -self.b)

    def embed(self) -> EmbeddedPair:
        return _embed_floats(self.a, self.b)

    @property
    def value(self) -> float:
        return self.embed().x

    def scaled_pair(self) -> tuple[int, int, int]:
        """Integers (A, B, d) with self = (A + B*tau)/d and d > 0."""
        d = math.lcm(self.a.denominator, self.b.denominator)
        return int(self.a * d), int(self.b * d), d

    def sign(self) -> int:
        A, B, _ = self.scaled_pair()
        return _sign_root5(2 * A + B, B)

    def __lt__(self, other: QTau | ZTau | RationalLike) -> bool:
        return (self - self._coerce(other)).sign() < 0

    def __le__(self, other: QTau | ZTau | RationalLike) -> bool:
        return (self - self._coerce(other)).sign() <= 0

    def __gt__(self, other: QTau | ZTau | RationalLike) -> bool:
        return (self - self._coerce(other)).sign() > 0

    def __ge__(self, other: QTau | ZTau | RationalLike) -> bool:
        return (self - self._coerce(other)).sign() >= 0


def trace_pairing(k: QTau | ZTau, x: QTau | ZTau) -> Fraction:
    """Rational part of 2*k*x, the lattice pairing of (k, k') with (x, x')."""
    p = QTau._coerce(k) * QTau._coerce(x)
    return 2 * p.a


def phase(k: QTau | ZTau, t: float) -> float:
    """Pairing of the dual point (k, k') with (t, 0): 2*DELTA*k*t."""
    return 2.0 * DELTA * k.embed().x * t


def internal_phase(k: QTau | ZTau, u: float) -> float:
    """Pairing of the dual point (k, k') with (0, u): 2*DELTA_STAR*k'*u."""
    return 2.0 * DELTA_STAR * k.embed().x_star * u
