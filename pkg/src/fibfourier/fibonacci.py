"""The Fibonacci point set, reference local functions on it, and their
periodic lifts to the scheme torus.

Two bounded functions determined by the local tile pattern are provided:

* nearest_distance: t -> distance from t to the point set (tent over each
  tile, peak half the tile length);
* interval_sign: t -> +1 on long tiles, -1 on short tiles (value at a point
  is that of the tile starting there).

Each lifts to a function on the torus supported on two rectangles, one per
tile type: the short-tile rectangle [-1, 0) x (-1/tau, 0] and the long-tile
rectangle [0, tau) x (-1/tau, 1/tau^2].  Restricted to the line (t, 0) the
lift reproduces the local function.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from typing import Callable, Sequence

from .cutproject import (
    AnyWindow,
    ModelPoint,
    ModelSetSlice,
    Window,
    enumerate_model_set,
)
from .ztau import SQRT5, TAU, TAU_STAR, ZTau

INV_TAU = 1.0 / TAU
INV_TAU2 = 1.0 / (TAU * TAU)

NEAREST = "nearest_distance"
INTERVAL = "interval_sign"
_DESCRIPTORS = (NEAREST, INTERVAL)


def substitution_word(count: int) -> str:
    word = "a"
    while len(word) < count:
        word = "".join("ab" if c == "a" else "a" for c in word)
    return word[:count]


def substitution_points(count: int) -> list[ZTau]:
    """First `count` left endpoints of the tiling generated by a -> ab,
    b -> a from seed "a", starting at 0."""
    if count < 1:
        raise ValueError("need count >= 1")
    word = substitution_word(count)
    out = [ZTau(0, 0)]
    x = ZTau(0, 0)
    for c in word[: count - 1]:
        x = x + (ZTau(0, 1) if c == "a" else ZTau(1, 0))
        out.append(x)
    return out


class PointContext:
    """Lazily extended materialization of a model-set slice.

    Single-threaded use only; concurrent callers should materialize one
    context per worker.
    """

    def __init__(self, window: AnyWindow | None = None, pad: float = 16.0) -> None:
        self.window = window if window is not None else Window.default()
        self.pad = pad
        self._slice: ModelSetSlice | None = None

    def ensure(self, lo: float, hi: float) -> ModelSetSlice:
        s = self._slice
        if s is None or lo < s.range_lo or hi > s.range_hi:
            new_lo = min(lo, s.range_lo if s else lo) - self.pad
            new_hi = max(hi, s.range_hi if s else hi) + self.pad
            # grow geometrically so repeated small extensions stay cheap
            width = new_hi - new_lo
            new_lo -= 0.25 * width
            new_hi += 0.25 * width
            self._slice = enumerate_model_set(self.window, new_lo, new_hi)
        return self._slice

    def bracket(self, t: float) -> tuple[ModelPoint, ModelPoint]:
        """The tile around t: (start point p <= t, end point q > t)."""
        s = self.ensure(t - self.pad / 2, t + self.pad / 2)
        i = bisect_right(s.values, t)
        if i <= 0 or i >= len(s.points):
            raise RuntimeError("context coverage too small")
        return s.points[i - 1], s.points[i]

    def tiles(self, lo: float, hi: float) -> list[tuple[ModelPoint, ModelPoint]]:
        """Consecutive point pairs whose tiles intersect [lo, hi]."""
        s = self.ensure(lo - self.pad / 2, hi + self.pad / 2)
        i = bisect_right(s.values, lo)
        if i <= 0:
            raise RuntimeError("context coverage too small")
        out = []
        j = i - 1
        while j + 1 < len(s.points) and s.points[j].value < hi:
            out.append((s.points[j], s.points[j + 1]))
            j += 1
        if s.points[j].value < hi:
            raise RuntimeError("context coverage too small")
        return out


LinearPiece = tuple[float, float, float, float]  # (x0, x1, const, slope)


@dataclass
class LocalFunction:
    """A bounded function of the local tile pattern, piecewise linear."""

    descriptor: str
    context: PointContext | None
    evaluate: Callable[[float], float]

    def __call__(self, t: float) -> float:
        return self.evaluate(t)

    def linear_pieces(self, lo: float, hi: float) -> list[LinearPiece]:
        """Cover [lo, hi] by pieces (x0, x1, c, m) with f(x) = c + m*x."""
        if not lo < hi:
            raise ValueError("need lo < hi")
        if self.descriptor == NEAREST:
            assert self.context is not None
            pieces = []
            for p, q in self.context.tiles(lo, hi):
                mid = 0.5 * (p.value + q.value)
                x0, x1 = max(p.value, lo), min(mid, hi)
                if x0 < x1:
                    pieces.append((x0, x1, -p.value, 1.0))
                x0, x1 = max(mid, lo), min(q.value, hi)
                if x0 < x1:
                    pieces.append((x0, x1, q.value, -1.0))
            return pieces
        if self.descriptor == INTERVAL:
            assert self.context is not None
            pieces = []
            for p, q in self.context.tiles(lo, hi):
                x0, x1 = max(p.value, lo), min(q.value, hi)
                if x0 < x1:
                    sign = 1.0 if p.tile == "long" else -1.0
                    pieces.append((x0, x1, sign, 0.0))
            return pieces
        raise ValueError(f"no piecewise form for descriptor {self.descriptor!r}")


def nearest_distance(window: AnyWindow | None = None) -> LocalFunction:
    ctx = PointContext(window)

    def evaluate(t: float) -> float:
        p, q = ctx.bracket(t)
        return min(t - p.value, q.value - t)

    return LocalFunction(NEAREST, ctx, evaluate)


def interval_sign(window: AnyWindow | None = None) -> LocalFunction:
    ctx = PointContext(window)

    def evaluate(t: float) -> float:
        p, _ = ctx.bracket(t)
        return 1.0 if p.tile == "long" else -1.0

    return LocalFunction(INTERVAL, ctx, evaluate)


def constant(c: float) -> LocalFunction:
    fn = LocalFunction("user", None, lambda t: c)

    def pieces(lo: float, hi: float) -> list[LinearPiece]:
        return [(lo, hi, c, 0.0)]

    fn.linear_pieces = pieces  # type: ignore[method-assign]
    return fn


# chart shifts tried when folding a fundamental-cell point into the
# two-rectangle domain
_CHART_SHIFTS = [(m, n) for m in (0, 1, -1, 2) for n in (0, 1, -1, 2)]

# acceptance ring for points that float rounding pushed off every copy
_SEAM_TOL = 1e-9


def _in_short_rect(x: float, y: float) -> bool:
    return -1.0 <= x < 0.0 and -INV_TAU < y <= 0.0

def _in_long_rect(x: float, y: float) -> bool:
    return 0.0 <= x < TAU and -INV_TAU < y <= INV_TAU2


class TorusLift:
    """Periodic lift of a local function, supported on two rectangles."""

    #: (x0, x1, y0, y1) of the supporting rectangles in the chart
    SHORT_RECT = (-1.0, 0.0, -INV_TAU, 0.0)
    LONG_RECT = (0.0, TAU, -INV_TAU, INV_TAU2)

    def __init__(self, descriptor: str, fn: Callable[[float, float], float] | None = None):
        if descriptor not in _DESCRIPTORS and fn is None:
            raise ValueError(f"unknown lift descriptor {descriptor!r}")
        self.descriptor = descriptor
        self._fn = fn
        self._constant: float | None = None

    @classmethod
    def constant(cls, c: float) -> TorusLift:
        lift = cls("user", lambda x, y: c)
        lift._constant = c
        return lift

    @property
    def rectangles(self) -> tuple[tuple[float, float, float, float], ...]:
        return (self.SHORT_RECT, self.LONG_RECT)

    def evaluate_cell(self, x: float, y: float) -> float:
        """Value at chart coordinates; raises outside the two rectangles."""
        if self._fn is not None:
            return self._fn(x, y)
        if _in_short_rect(x, y):
            in_short = True
        elif _in_long_rect(x, y):
            in_short = False
        # closed-boundary fallback so corner samples stay evaluable
        elif -1.0 <= x <= 0.0 and -INV_TAU <= y <= 0.0:
            in_short = True
        elif 0.0 <= x <= TAU and -INV_TAU <= y <= INV_TAU2:
            in_short = False
        else:
            raise ValueError(f"({x}, {y}) outside the support rectangles")
        if self.descriptor == NEAREST:
            if in_short:
                return 0.5 - abs(x + 0.5)
            return TAU / 2.0 - abs(x - TAU / 2.0)
        return -1.0 if in_short else 1.0

    def evaluate_torus(self, x: float, y: float) -> float:
        """Value at any plane point, reduced modulo the scheme lattice."""
        if self._fn is not None:
            return self._fn(x, y)
        v = (x - y) / SQRT5
        u = x - v * TAU
        u -= math.floor(u)
        v -= math.floor(v)
        xc = u + v * TAU
        yc = u + v * TAU_STAR
        for m, n in _CHART_SHIFTS:
            xx = xc - (m + n * TAU)
            yy = yc - (m + n * TAU_STAR)
            if _in_short_rect(xx, yy) or _in_long_rect(xx, yy):
                return self.evaluate_cell(xx, yy)
        # a rounded coordinate can graze an open edge and fall out of every
        # copy; retry with a tolerance ring and clamp onto the matched seam
        for m, n in _CHART_SHIFTS:
            xx = xc - (m + n * TAU)
            yy = yc - (m + n * TAU_STAR)
            if -1.0 - _SEAM_TOL <= xx <= _SEAM_TOL and -INV_TAU - _SEAM_TOL <= yy <= _SEAM_TOL:
                return self.evaluate_cell(min(max(xx, -1.0), 0.0), min(max(yy, -INV_TAU), 0.0))
            if -_SEAM_TOL <= xx <= TAU + _SEAM_TOL and -INV_TAU - _SEAM_TOL <= yy <= INV_TAU2 + _SEAM_TOL:
                return self.evaluate_cell(min(max(xx, 0.0), TAU), min(max(yy, -INV_TAU), INV_TAU2))
        raise RuntimeError(f"chart reduction failed for ({x}, {y})")

    def on_line(self, t: float) -> float:
        return self.evaluate_torus(t, 0.0)

    def cell_integral(self) -> float:
        """Integral over the fundamental cell (unnormalized)."""
        if self.descriptor == NEAREST:
            # tent areas: (1/4)*height(1/tau) on the short rectangle,
            # (tau^2/4)*height(1) on the long one
            return 0.25 * INV_TAU + 0.25 * TAU * TAU
        if self.descriptor == INTERVAL:
            return -1.0 * INV_TAU + TAU
        if self._constant is not None:
            return self._constant * SQRT5  # cell area is sqrt5
        raise ValueError("no closed-form cell integral for user lifts")


def torus_lift(descriptor: str) -> TorusLift:
    return TorusLift(descriptor)


def point_sets_close(
    p: Sequence[float], q: Sequence[float], r: float, eps: float
) -> bool:
    """Whether two point sets agree to within eps on [-r, r].

    Both inputs must cover [-r - eps, r + eps]; every point of either set
    inside [-r, r] must be within eps of a point of the other.
    """
    ps = sorted(p)
    qs = sorted(q)
    for s in (ps, qs):
        if not s or s[0] > -r - eps or s[-1] < r + eps:
            raise ValueError("point list does not cover [-r-eps, r+eps]")

    def one_sided(a: list[float], b: list[float]) -> bool:
        for x in a:
            if x < -r or x > r:
                continue
            i = bisect_right(b, x)
            near = []
            if i > 0:
                near.append(abs(x - b[i - 1]))
            if i < len(b):
                near.append(abs(b[i] - x))
            if min(near) > eps:
                return False
        return True

    return one_sided(ps, qs) and one_sided(qs, ps)
