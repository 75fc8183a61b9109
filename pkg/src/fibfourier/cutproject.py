"""Cut-and-project machinery for the Fibonacci scheme.

Z[tau] embeds in the plane as the lattice {(x, x') : x in Z[tau]} where x' is
the conjugate embedding.  A window W in internal space selects the model set
Lambda(W) = {x : x' in W}; the default window [-1, 1/tau) yields the Fibonacci
point set with tile lengths tau (long) and 1 (short).  The dual lattice is
(1/2)Z[tau], so frequencies are half-integer pairs (half_a + half_b*tau)/2,
and the frequency content of an N-fold refinement is indexed by the quotient
classes (half_a mod N, half_b mod N).
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import NamedTuple, Union

from .ztau import (
    DELTA,
    DELTA_STAR,
    SQRT5,
    TAU,
    TAU_STAR,
    QTau,
    ZTau,
    _sign_root5,
)

log = logging.getLogger(__name__)

_TAG_MARGIN = 4.0  # enumeration overshoot so every kept point has a successor


class Window:
    """Acceptance interval in internal space with exact Z[tau]-rational
    endpoints, half-open [lo, hi) by default."""

    __slots__ = ("lo", "hi", "includes_lo", "includes_hi", "_scaled_lo", "_scaled_hi")

    def __init__(
        self,
        lo: QTau,
        hi: QTau,
        includes_lo: bool = True,
        includes_hi: bool = False,
    ) -> None:
        if not isinstance(lo, QTau):
            lo = QTau(lo)
        if not isinstance(hi, QTau):
            hi = QTau(hi)
        if not lo < hi:
            raise ValueError("window endpoints must satisfy lo < hi")
        self.lo = lo
        self.hi = hi
        self.includes_lo = includes_lo
        self.includes_hi = includes_hi
        self._scaled_lo = lo.scaled_pair()
        self._scaled_hi = hi.scaled_pair()

    @classmethod
    def default(cls) -> Window:
        # [-1, 1/tau) with 1/tau = tau - 1
        return cls(QTau(-1), QTau(-1, 1))

    def shifted(self, offset: QTau) -> Window:
        return Window(self.lo + offset, self.hi + offset, self.includes_lo, self.includes_hi)

    @property
    def exact(self) -> bool:
        return True

    def bounds_float(self) -> tuple[float, float]:
        return self.lo.embed().x, self.hi.embed().x

    def length(self) -> QTau:
        return self.hi - self.lo

    def __repr__(self) -> str:
        lb = "[" if self.includes_lo else "("
        rb = "]" if self.includes_hi else ")"
        return f"Window{lb}{self.lo!r}, {self.hi!r}{rb}"

    def spec_string(self) -> str:
        lb = "[" if self.includes_lo else "("
        rb = "]" if self.includes_hi else ")"
        lo, hi = self.bounds_float()
        return f"{lb}{lo:.12g},{hi:.12g}{rb}"

    def contains_star(self, xa: int, xb: int) -> bool:
        """Membership test for the internal point xa + xb*tau, exact."""
        na, nb, d = self._scaled_lo
        ca = xa * d - na
        cb = xb * d - nb
        s = _sign_root5(2 * ca + cb, cb)
        if s < 0 or (s == 0 and not self.includes_lo):
            return False
        na, nb, d = self._scaled_hi
        ca = xa * d - na
        cb = xb * d - nb
        s = _sign_root5(2 * ca + cb, cb)
        if s > 0 or (s == 0 and not self.includes_hi):
            return False
        return True

    def contains(self, x: ZTau) -> bool:
        return self.contains_star(x.a + x.b, -x.b)


class ApproxWindow:
    """Acceptance interval with arbitrary float endpoints.

    Membership is decided in floating point; an internal coordinate within
    `tol` of an endpoint is snapped onto it (and logged), then the inclusion
    flags apply.
    """

    __slots__ = ("lo", "hi", "includes_lo", "includes_hi", "tol")

    def __init__(
        self,
        lo: float,
        hi: float,
        includes_lo: bool = True,
        includes_hi: bool = False,
        tol: float = 1e-12,
    ) -> None:
        if not lo < hi:
            raise ValueError("window endpoints must satisfy lo < hi")
        self.lo = float(lo)
        self.hi = float(hi)
        self.includes_lo = includes_lo
        self.includes_hi = includes_hi
        self.tol = tol

    @property
    def exact(self) -> bool:
        return False

    def bounds_float(self) -> tuple[float, float]:
        return self.lo, self.hi

    def __repr__(self) -> str:
        lb = "[" if self.includes_lo else "("
        rb = "]" if self.includes_hi else ")"
        return f"ApproxWindow{lb}{self.lo}, {self.hi}{rb}"

    spec_string = Window.spec_string

    def contains_star(self, xa: int, xb: int) -> bool:
        # (xa, xb) are (1, tau)-basis coefficients of the internal point,
        # matching Window.contains_star
        xs = xa + xb * TAU
        for endpoint, at_end in ((self.lo, self.includes_lo), (self.hi, self.includes_hi)):
            if abs(xs - endpoint) <= self.tol:
                log.debug("boundary-grazing internal point %s near %s", xs, endpoint)
                return at_end
        return self.lo < xs < self.hi

    def contains(self, x: ZTau) -> bool:
        return self.contains_star(x.a + x.b, -x.b)


AnyWindow = Union[Window, ApproxWindow]


class ModelPoint(NamedTuple):
    value: float
    algebraic: ZTau
    tile: str  # tile starting at this point: "long" (tau) or "short" (1)


@dataclass
class ModelSetSlice:
    window: AnyWindow
    range_lo: float
    range_hi: float
    points: list[ModelPoint]

    @cached_property
    def values(self) -> list[float]:
        return [p.value for p in self.points]

    def __len__(self) -> int:
        return len(self.points)


def _enumerate_raw(window: AnyWindow, lo: float, hi: float) -> list[tuple[float, ZTau]]:
    w_lo, w_hi = window.bounds_float()
    out: list[tuple[float, ZTau]] = []
    b_min = math.floor((lo - w_hi) / SQRT5) - 1
    b_max = math.ceil((hi - w_lo) / SQRT5) + 1
    guard = 1e-6
    for b in range(b_min, b_max + 1):
        bt = b * TAU
        bs = b * TAU_STAR
        a_min = math.floor(w_lo - bs) - 1
        a_max = math.ceil(w_hi - bs) + 1
        for a in range(a_min, a_max + 1):
            v = a + bt
            if v < lo or v > hi:
                continue
            xs = a + bs
            if xs < w_lo - guard or xs > w_hi + guard:
                continue
            if window.contains_star(a + b, -b):
                out.append((v, ZTau(a, b)))
    out.sort(key=lambda item: item[0])
    return out


def _tile_tag(gap: float) -> str:
    if abs(gap - TAU) < 1e-9:
        return "long"
    if abs(gap - 1.0) < 1e-9:
        return "short"
    # windows of length other than tau produce other gap values; classify
    # by the nearest reference length
    return "long" if gap > (1.0 + TAU) / 2.0 else "short"


def enumerate_model_set(window: AnyWindow, lo: float, hi: float) -> ModelSetSlice:
    """All model-set points x with lo <= x <= hi, sorted, tagged by tile."""
    if not lo <= hi:
        raise ValueError("need lo <= hi")
    raw = _enumerate_raw(window, lo, hi + _TAG_MARGIN)
    points: list[ModelPoint] = []
    for i, (v, z) in enumerate(raw):
        if v > hi:
            break
        if i + 1 >= len(raw):
            raise RuntimeError("enumeration margin exhausted")
        points.append(ModelPoint(v, z, _tile_tag(raw[i + 1][0] - v)))
    return ModelSetSlice(window, lo, hi, points)


def torus_coords(t: float) -> tuple[float, float]:
    """Lattice coordinates in [0,1)^2 of the line point (t, 0) modulo the
    scheme lattice."""
    return (DELTA * t) % 1.0, (TAU * DELTA * t) % 1.0


class Frequency(NamedTuple):
    """Dual-lattice point (half_a + half_b*tau)/2."""

    half_a: int
    half_b: int

    @property
    def qtau(self) -> QTau:
        return QTau(Fraction(self.half_a, 2), Fraction(self.half_b, 2))

    @property
    def value(self) -> float:
        return (self.half_a + self.half_b * TAU) / 2.0

    @property
    def value_star(self) -> float:
        return (self.half_a + self.half_b * TAU_STAR) / 2.0

    def __neg__(self) -> Frequency:
        return Frequency(-self.half_a, -self.half_b)

    def phase(self, t: float) -> float:
        return 2.0 * DELTA * self.value * t

    def internal_phase(self, u: float) -> float:
        return 2.0 * DELTA_STAR * self.value_star * u

    @property
    def label(self) -> str:
        if self.half_a == 0 and self.half_b == 0:
            return "0"
        return f"({self.half_a:+d}{self.half_b:+d}tau)/2"


@dataclass
class FrequencySet:
    n: int
    reps: list[Frequency]

    def __iter__(self):
        return iter(self.reps)

    def __len__(self) -> int:
        return len(self.reps)


def _norm4(half_a: int, half_b: int) -> int:
    # 4 * ((k)^2 + (k')^2) for k = (half_a + half_b*tau)/2, an integer
    return 2 * half_a * half_a + 2 * half_a * half_b + 3 * half_b * half_b


def _minimal_rep(p: int, q: int, n: int) -> Frequency:
    best: tuple[int, int, int, int] | None = None
    for i in range(-3, 4):
        ha = p + n * i
        for j in range(-3, 4):
            hb = q + n * j
            key = (_norm4(ha, hb), abs(ha) + abs(hb), ha, hb)
            if best is None or key < best:
                best = key
    assert best is not None
    return Frequency(best[2], best[3])


def frequency_representatives(n: int) -> FrequencySet:
    """Minimal representatives of the N^2 dual quotient classes.

    Each class (half_a mod n, half_b mod n) is represented by the member
    minimizing the Euclidean norm of the embedded pair (k, k'); ties break
    toward the smaller coefficient sum |half_a| + |half_b|, then
    lexicographically.  Classes that are negatives of each other receive
    representatives that are negatives of each other.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    chosen: dict[tuple[int, int], Frequency] = {}
    for p, q in product(range(n), repeat=2):
        neg = ((-p) % n, (-q) % n)
        if (p, q) > neg:
            continue
        rep = _minimal_rep(p, q, n)
        chosen[(p, q)] = rep
        if neg != (p, q):
            chosen[neg] = -rep
    reps = sorted(chosen.values())
    return FrequencySet(n, reps)
