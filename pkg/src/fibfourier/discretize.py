"""Discretization of the torus along the physical line.

The N-fold refined lattice meets the fundamental cell in the N^2
representatives s = (i + j*tau)/N.  The line (t, 0), t >= 0, wraps through
the cell in segments separated by the crossing times m*sqrt5 (internal
coordinate wrap) and m*tau*sqrt5 (physical coordinate wrap); each segment is
the original line translated back by a lattice point.  Matching every
representative with the segment passing nearest in internal space yields the
data points u = s + t used by the sum estimator, and sampled oscillation
bounds for a lift G control the quadrature error:

    |integral_C G - (sqrt5/N^2) sum G(s_i)|  <=  sqrt5 * eps_n
    |integral_C G - (sqrt5/N^2) sum G(u_j, 0)| <  sqrt5 * (eps_n + eps_n_prime)
"""

from __future__ import annotations

import logging
import math
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple

from .fibonacci import LocalFunction, TorusLift
from .ztau import SQRT5, TAU, TAU_STAR, QTau, ZTau

log = logging.getLogger(__name__)

_U_WRAP = TAU * SQRT5  # physical lattice coordinate wraps at multiples of this
_V_WRAP = SQRT5        # internal lattice coordinate wraps at multiples of this


class RepPoint(NamedTuple):
    s: QTau
    i: int
    j: int

    @property
    def value(self) -> float:
        return self.s.embed().x

    @property
    def value_star(self) -> float:
        return self.s.embed().x_star


@dataclass
class RefinementReps:
    n: int
    reps: list[RepPoint]

    def __len__(self) -> int:
        return len(self.reps)


def refinement_reps(n: int) -> RefinementReps:
    """The n^2 refined-lattice representatives (i + j*tau)/n, 0 <= i, j < n."""
    if n < 1:
        raise ValueError("need n >= 1")
    reps = [
        RepPoint(QTau(Fraction(i, n), Fraction(j, n)), i, j)
        for i in range(n)
        for j in range(n)
    ]
    return RefinementReps(n, reps)


class Segment(NamedTuple):
    t_enter: float
    t_exit: float
    translate: ZTau       # lattice point (t, t') subtracted to re-enter the cell
    cell: tuple[int, int]  # lattice coordinates (wrap counts) of the translate

    @property
    def height(self) -> float:
        # internal coordinate of the segment inside the cell
        return -self.translate.embed().x_star


@dataclass
class PathDecomposition:
    segments: list[Segment]
    r: float
    m: int

    @cached_property
    def heights(self) -> list[float]:
        return [seg.height for seg in self.segments]


def _crossings(limit_count: int | None, limit_r: float | None):
    iu, iv = 1, 1
    out: list[tuple[str, float]] = []
    while True:
        tu = iu * _U_WRAP
        tv = iv * _V_WRAP
        if tv <= tu:
            kind, t = "v", tv
            iv += 1
        else:
            kind, t = "u", tu
            iu += 1
        if limit_r is not None and t > limit_r:
            return out
        out.append((kind, t))
        if limit_count is not None and len(out) == limit_count:
            return out


def path_decomposition(
    passes: int | None = None, range_r: float | None = None
) -> PathDecomposition:
    """Cut the line [0, R] into complete passes through the cell.

    Exactly one of `passes` (number of segments) and `range_r` may be given;
    a raw range is truncated down to the largest crossing time <= range_r so
    that only complete passes remain.
    """
    if (passes is None) == (range_r is None):
        raise ValueError("give exactly one of passes and range_r")
    if passes is not None:
        if passes < 1:
            raise ValueError("need passes >= 1")
        crossings = _crossings(passes, None)
    else:
        if range_r is None or range_r < _V_WRAP:
            raise ValueError(f"range must cover one pass (>= {_V_WRAP:.6f})")
        crossings = _crossings(None, range_r)
    segments: list[Segment] = []
    t0 = 0.0
    cu = cv = 0
    for kind, t in crossings:
        segments.append(Segment(t0, t, ZTau(cu, cv), (cu, cv)))
        if kind == "u":
            cu += 1
        else:
            cv += 1
        t0 = t
    r = segments[-1].t_exit
    return PathDecomposition(segments, r, len(segments))


class DataPoint(NamedTuple):
    u: float
    s: QTau
    s_cell: tuple[int, int]
    translate: ZTau
    residual: float  # |s' + t'|, internal distance from the matched segment


@dataclass
class DataPointSet:
    n: int
    m: int
    r: float
    points: list[DataPoint]

    @cached_property
    def values(self) -> list[float]:
        return [p.u for p in self.points]

    @cached_property
    def residuals(self) -> list[float]:
        return [p.residual for p in self.points]

    def __len__(self) -> int:
        return len(self.points)


def _assemble(n: int, path: PathDecomposition, picks) -> DataPointSet:
    pts = []
    for rep, seg in picks:
        emb = rep.s.embed()
        temb = seg.translate.embed()
        pts.append(
            DataPoint(
                emb.x + temb.x,
                rep.s,
                (rep.i, rep.j),
                seg.translate,
                abs(emb.x_star + temb.x_star),
            )
        )
    pts.sort(key=lambda p: p.u)
    return DataPointSet(n, path.m, path.r, pts)


def data_points(n: int, path: PathDecomposition) -> DataPointSet:
    """One data point u = s + t per representative, choosing the pass
    translate with minimal internal residual |s' + t'| (ties: smaller t)."""
    table = [(seg.height, seg.translate.embed().x, seg) for seg in path.segments]
    picks = []
    for rep in refinement_reps(n).reps:
        ss = rep.value_star
        best = min(table, key=lambda row: (abs(ss - row[0]), row[1]))
        picks.append((rep, best[2]))
    return _assemble(n, path, picks)


def strip_projection_oracle(n: int, path: PathDecomposition) -> DataPointSet:
    """Alternative translate selection via horizontal strips.

    The cell is sliced at the midpoints between consecutive sorted segment
    heights (outer edges tau' and 1); each representative projects onto the
    unique segment running through its strip.  A representative exactly on a
    strip boundary joins the strip below it.
    """
    order = sorted(path.segments, key=lambda seg: seg.height)
    b = [seg.height for seg in order]
    c = [TAU_STAR]
    for i in range(len(b) - 1):
        c.append(0.5 * (b[i] + b[i + 1]))
    c.append(1.0)
    picks = []
    for rep in refinement_reps(n).reps:
        idx = bisect_left(c, rep.value_star)
        if idx < 1 or idx > len(order):
            raise RuntimeError("representative escaped the strip partition")
        picks.append((rep, order[idx - 1]))
    return _assemble(n, path, picks)


def compare_data_points(
    a: DataPointSet, b: DataPointSet, tol: float = 1e-9
) -> list[int]:
    """Indices where two equally sized data-point sets disagree (logged)."""
    if len(a) != len(b):
        raise ValueError("data-point sets differ in size")
    bad = [
        j
        for j, (pa, pb) in enumerate(zip(a.points, b.points))
        if abs(pa.u - pb.u) > tol
    ]
    for j in bad:
        log.info(
            "data point %d differs: %.12g vs %.12g", j, a.points[j].u, b.points[j].u
        )
    return bad


class ErrorEstimate(NamedTuple):
    eps_n: float
    eps_n_prime: float
    bound: float


def _cell_chord(x: float) -> tuple[float, float]:
    # internal extent {y : (x, y) in cell}, from 0 <= (x-y)/sqrt5 < 1 and
    # 0 <= x - tau*(x-y)/sqrt5 < 1
    lo = max(x - SQRT5, x - SQRT5 * (x / TAU))
    hi = min(x, x - SQRT5 * ((x - 1.0) / TAU))
    return lo, hi


def error_estimate(
    lift: TorusLift,
    n: int,
    path: PathDecomposition,
    cell_samples: int = 10,
    strip_x_samples: int = 40,
    strip_y_samples: int = 5,
) -> ErrorEstimate:
    """Sampled oscillation bounds for the two-step quadrature.

    eps_n is the largest oscillation of the lift over any refined sub-cell
    (sampled on a cell_samples^2 grid); eps_n_prime is the largest vertical
    oscillation within any strip of the path decomposition.  Sampling makes
    both lower bounds of the true suprema; they are reported as computed.
    """
    # sub-cell oscillation, sampled in lattice coordinates
    eps_n = 0.0
    step = 1.0 / n
    offs = [k / (cell_samples - 1.0) * step for k in range(cell_samples)]
    for i in range(n):
        for j in range(n):
            u0 = i * step
            v0 = j * step
            mn = math.inf
            mx = -math.inf
            for du in offs:
                for dv in offs:
                    u = u0 + du
                    v = v0 + dv
                    g = lift.evaluate_torus(u + v * TAU, u + v * TAU_STAR)
                    mn = min(mn, g)
                    mx = max(mx, g)
            eps_n = max(eps_n, mx - mn)

    # per-strip vertical oscillation
    order = sorted(path.segments, key=lambda seg: seg.height)
    b = [seg.height for seg in order]
    c = [TAU_STAR]
    for i in range(len(b) - 1):
        c.append(0.5 * (b[i] + b[i + 1]))
    c.append(1.0)
    eps_p = 0.0
    shrink = 1e-9
    for k in range(len(order)):
        y0 = c[k]
        y1 = c[k + 1]
        for ix in range(strip_x_samples):
            x = (ix + 0.5) / strip_x_samples * (1.0 + TAU)
            ch_lo, ch_hi = _cell_chord(x)
            lo = max(y0, ch_lo) + shrink
            hi = min(y1, ch_hi) - shrink
            if lo >= hi:
                continue
            vals = [
                lift.evaluate_torus(x, lo + (hi - lo) * iy / (strip_y_samples - 1.0))
                for iy in range(strip_y_samples)
            ]
            eps_p = max(eps_p, max(vals) - min(vals))

    return ErrorEstimate(eps_n, eps_p, SQRT5 * (eps_n + eps_p))


def cell_quadrature(lift: TorusLift, n: int) -> float:
    """(sqrt5/n^2) * sum of the lift over the refined representatives."""
    total = 0.0
    for rep in refinement_reps(n).reps:
        emb = rep.s.embed()
        total += lift.evaluate_torus(emb.x, emb.x_star)
    return SQRT5 * total / (n * n)


def data_quadrature(f: LocalFunction, data: DataPointSet) -> float:
    """(sqrt5/n^2) * sum of the local function over the data points."""
    total = sum(f(p.u) for p in data.points)
    return SQRT5 * total / (data.n * data.n)
