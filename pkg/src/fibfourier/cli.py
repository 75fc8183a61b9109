"""Deterministic CSV reports over the library, one subcommand per report.

Exit codes: 0 success, 1 usage error, 2 numeric capacity exceeded.
Identical invocations produce byte-identical files: headers carry the
serialized configuration and the artifact version, never timestamps.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from contextlib import contextmanager
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Iterable, Sequence, TextIO

from . import __version__
from .cutproject import (
    AnyWindow,
    ApproxWindow,
    Frequency,
    Window,
    enumerate_model_set,
    frequency_representatives,
)
from .discretize import (
    PathDecomposition,
    cell_quadrature,
    data_points,
    data_quadrature,
    error_estimate,
    path_decomposition,
)
from .fibonacci import (
    INTERVAL,
    NEAREST,
    LocalFunction,
    TorusLift,
    interval_sign,
    nearest_distance,
    torus_lift,
)
from .fourier import (
    Approximant,
    build_approximant,
    coeff_exact,
    coeff_integral,
    coeff_sum,
    cos_baseline,
    sup_error,
)
from .ztau import SQRT5, TAU, ArithmeticCapacityError, QTau

#: reference positions for the side-by-side value tables
REFERENCE_XS: list[float] = [
    -100.0,
    -50.0,
    -15.0,
    -3.0 - 5.0 * TAU,
    0.0,
    TAU,
    0.25 + TAU,
    0.5 + TAU,
    1.0 + TAU,
    1.0 + 1.25 * TAU,
    1.0 + 2.5 * TAU,
    1.0 + 2.75 * TAU,
    50.0,
    100.0,
    500.0,
]

_SUMMARY_WINDOWS = ((0.0, 15.0), (200.0, 215.0), (-115.0, -100.0))

_FUNCTIONS = ("nearest", "interval")


@dataclass
class RunConfig:
    """Validated, serializable invocation parameters."""

    command: str
    n: int | None = None
    passes: int | None = None
    range_r: float | None = None
    function: str | None = None
    window: str | None = None
    cosine_n: int | None = None
    cosine_dc_halved: bool | None = None
    grid: str | None = None
    lo: float | None = None
    hi: float | None = None
    estimator: str | None = None
    samples: int | None = None

    def validate(self) -> None:
        if self.n is not None and self.n < 1:
            raise ValueError("--n must be >= 1")
        if self.passes is not None and self.passes < 1:
            raise ValueError("--passes must be >= 1")
        if self.passes is not None and self.range_r is not None:
            raise ValueError("give only one of --passes and --range")
        if self.function is not None and self.function not in _FUNCTIONS:
            raise ValueError(f"--function must be one of {_FUNCTIONS}")
        if self.cosine_n is not None and self.cosine_n < 0:
            raise ValueError("--cosine-n must be >= 0")
        if self.samples is not None and self.samples < 2:
            raise ValueError("--samples must be >= 2")

    def header_json(self) -> str:
        data = {k: v for k, v in asdict(self).items() if v is not None}
        return json.dumps(data, sort_keys=True)


def _fmt(v: float) -> str:
    return format(float(v), ".12g")


@contextmanager
def _open_out(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as handle:
            yield handle


def _write_report(
    out: TextIO,
    cfg: RunConfig,
    extra: dict[str, object],
    columns: Sequence[str],
    rows: Iterable[Sequence[object]],
) -> None:
    out.write(f"# fibfourier {__version__}\n")
    out.write(f"# config: {cfg.header_json()}\n")
    for key in sorted(extra):
        out.write(f"# {key}: {extra[key]}\n")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(list(columns))
    for row in rows:
        writer.writerow(list(row))


def parse_window(spec: str) -> AnyWindow:
    if spec == "default":
        return Window.default()
    if spec == "shifted":
        return Window.default().shifted(QTau(Fraction(1, 2)))
    parts = spec.split(":")
    if len(parts) != 2:
        raise ValueError("window must be 'default', 'shifted', or LO:HI")
    try:
        lo, hi = float(parts[0]), float(parts[1])
    except ValueError as exc:
        raise ValueError(f"bad window endpoints in {spec!r}") from exc
    return ApproxWindow(lo, hi)


def parse_grid(spec: str) -> tuple[float, float, int]:
    parts = spec.split(":")
    if len(parts) != 3:
        raise ValueError("grid must be LO:HI:COUNT")
    try:
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise ValueError(f"bad grid {spec!r}") from exc
    if count < 2 or not lo < hi:
        raise ValueError("grid needs lo < hi and count >= 2")
    return lo, hi, count


def _resolve_path(cfg: RunConfig, default_passes: int | None = None) -> PathDecomposition:
    if cfg.passes is not None:
        return path_decomposition(passes=cfg.passes)
    if cfg.range_r is not None:
        return path_decomposition(range_r=cfg.range_r)
    if default_passes is None:
        raise ValueError("give one of --passes and --range")
    return path_decomposition(passes=default_passes)


def _function(name: str, window: AnyWindow | None = None) -> LocalFunction:
    return nearest_distance(window) if name == "nearest" else interval_sign(window)


def _lift(name: str) -> TorusLift:
    return torus_lift(NEAREST if name == "nearest" else INTERVAL)


def cmd_points(args: argparse.Namespace) -> None:
    cfg = RunConfig("points", lo=args.lo, hi=args.hi, window=args.window)
    cfg.validate()
    window = parse_window(args.window)
    if args.hi < args.lo:
        raise ValueError("need --lo <= --hi")
    sl = enumerate_model_set(window, args.lo, args.hi)
    rows = [
        (p.algebraic.a, p.algebraic.b, _fmt(p.value), _fmt(p.algebraic.conj().embed().x), p.tile)
        for p in sl.points
    ]
    with _open_out(args.out) as out:
        _write_report(out, cfg, {"count": len(rows)}, ("a", "b", "x", "x_star", "tile"), rows)


def cmd_data_points(args: argparse.Namespace) -> None:
    cfg = RunConfig("data-points", n=args.n, passes=args.passes, range_r=args.range_r)
    cfg.validate()
    path = _resolve_path(cfg)
    data = data_points(args.n, path)
    rows = [
        (
            j,
            _fmt(p.u),
            str(p.s.a),
            str(p.s.b),
            p.translate.a,
            p.translate.b,
            _fmt(p.residual),
        )
        for j, p in enumerate(data.points)
    ]
    extra = {"effective_range": _fmt(path.r), "segments": path.m}
    with _open_out(args.out) as out:
        _write_report(
            out,
            cfg,
            extra,
            ("j", "u", "s_a", "s_b", "t_a", "t_b", "internal_residual"),
            rows,
        )


def cmd_frequencies(args: argparse.Namespace) -> None:
    cfg = RunConfig("frequencies", n=args.n)
    cfg.validate()
    freqs = frequency_representatives(args.n)
    rows = [
        (k.half_a, k.half_b, _fmt(k.value), _fmt(k.value_star)) for k in freqs
    ]
    with _open_out(args.out) as out:
        _write_report(
            out, cfg, {"count": len(rows)}, ("half_a", "half_b", "k_value", "k_star"), rows
        )


def _coefficient_rows(
    estimators: Sequence[str],
    freqs,
    function: str,
    window: AnyWindow,
    window_is_default: bool,
    path: PathDecomposition | None,
):
    rows = []
    f = _function(function, window)
    for estimator in estimators:
        if estimator == "exact":
            if not window_is_default:
                raise ValueError("the exact estimator supports the default window only")
            lift = _lift(function)
            values = [(k, coeff_exact(k, lift)) for k in freqs]
        elif estimator == "integral":
            assert path is not None
            values = [(k, coeff_integral(k, f, path.r)) for k in freqs]
        else:
            assert path is not None
            data = data_points(freqs.n, path)
            values = [(k, coeff_sum(k, f, data)) for k in freqs]
        for k, v in values:
            rows.append(
                (k.half_a, k.half_b, _fmt(k.value), _fmt(v.real), _fmt(v.imag), estimator)
            )
    return rows


def cmd_coeffs(args: argparse.Namespace) -> None:
    cfg = RunConfig(
        "coeffs",
        n=args.n,
        passes=args.passes,
        range_r=args.range_r,
        function=args.function,
        window=args.window,
        estimator=args.estimator,
    )
    cfg.validate()
    estimators = [args.estimator] if args.estimator != "all" else ["exact", "integral", "sum"]
    needs_path = any(e in ("integral", "sum") for e in estimators)
    path = _resolve_path(cfg) if needs_path else None
    window = parse_window(args.window)
    freqs = frequency_representatives(args.n)
    rows = _coefficient_rows(
        estimators, freqs, args.function, window, args.window == "default", path
    )
    extra: dict[str, object] = {"count": len(rows)}
    if path is not None:
        extra["effective_range"] = _fmt(path.r)
        extra["segments"] = path.m
    with _open_out(args.out) as out:
        _write_report(
            out,
            cfg,
            extra,
            ("half_a", "half_b", "k_value", "re", "im", "estimator"),
            rows,
        )


def _coeff_table(args: argparse.Namespace, command: str, function: str) -> None:
    cfg = RunConfig(
        command, n=args.n, passes=args.passes, range_r=args.range_r, function=function
    )
    cfg.validate()
    path = _resolve_path(cfg)
    freqs = frequency_representatives(args.n)
    lift = _lift(function)
    f = _function(function)
    data = data_points(args.n, path)
    rows = []
    for k in freqs:
        ce = coeff_exact(k, lift)
        ci = coeff_integral(k, f, path.r)
        cs = coeff_sum(k, f, data)
        rows.append(
            (
                k.label,
                _fmt(ce.real),
                _fmt(ce.imag),
                _fmt(ci.real),
                _fmt(ci.imag),
                _fmt(cs.real),
                _fmt(cs.imag),
            )
        )
    extra = {"effective_range": _fmt(path.r), "segments": path.m}
    with _open_out(args.out) as out:
        _write_report(
            out,
            cfg,
            extra,
            ("k", "exact_re", "exact_im", "int_re", "int_im", "sum_re", "sum_im"),
            rows,
        )


def cmd_table1(args: argparse.Namespace) -> None:
    _coeff_table(args, "table1", "nearest")


def cmd_table3(args: argparse.Namespace) -> None:
    _coeff_table(args, "table3", "interval")


def _estimator_bundle(
    function: str, n: int, path: PathDecomposition, cosine_n: int, conventional: bool
) -> tuple[LocalFunction, Approximant, Approximant, Approximant, Approximant]:
    f = _function(function)
    freqs = frequency_representatives(n)
    ap_exact = build_approximant("exact", freqs, lift=_lift(function))
    ap_int = build_approximant("integral", freqs, f=f, r=path.r)
    ap_sum = build_approximant("sum", freqs, f=f, data=data_points(n, path))
    ap_cos = cos_baseline(f, cosine_n, conventional)
    return f, ap_exact, ap_int, ap_sum, ap_cos


def _value_rows(
    xs: Iterable[float],
    f: LocalFunction,
    aps: Sequence[Approximant],
) -> list[tuple[str, ...]]:
    rows = []
    for x in xs:
        rows.append(
            (_fmt(x), _fmt(f(x)), *(_fmt(ap.evaluate(x)) for ap in aps))
        )
    return rows


def _value_table(args: argparse.Namespace, command: str, function: str) -> None:
    cfg = RunConfig(
        command,
        n=args.n,
        passes=args.passes,
        range_r=args.range_r,
        function=function,
        cosine_n=args.cosine_n,
        cosine_dc_halved=args.cosine_dc_halved or None,
    )
    cfg.validate()
    path = _resolve_path(cfg)
    f, *aps = _estimator_bundle(function, args.n, path, args.cosine_n, args.cosine_dc_halved)
    rows = _value_rows(REFERENCE_XS, f, aps)
    extra = {"effective_range": _fmt(path.r), "segments": path.m}
    with _open_out(args.out) as out:
        _write_report(
            out, cfg, extra, ("x", "f", "f_exact", "f_int", "f_sum", "f_cos"), rows
        )


def cmd_table2(args: argparse.Namespace) -> None:
    _value_table(args, "table2", "nearest")


def cmd_table4(args: argparse.Namespace) -> None:
    _value_table(args, "table4", "interval")


def cmd_compare(args: argparse.Namespace) -> None:
    cfg = RunConfig(
        "compare",
        n=args.n,
        passes=args.passes,
        range_r=args.range_r,
        function=args.function,
        cosine_n=args.cosine_n,
        cosine_dc_halved=args.cosine_dc_halved or None,
        grid=args.grid,
    )
    cfg.validate()
    lo, hi, count = parse_grid(args.grid)
    path = _resolve_path(cfg)
    f, *aps = _estimator_bundle(
        args.function, args.n, path, args.cosine_n, args.cosine_dc_halved
    )
    step = (hi - lo) / (count - 1)
    rows = _value_rows((lo + i * step for i in range(count)), f, aps)
    extra: dict[str, object] = {"effective_range": _fmt(path.r), "segments": path.m}
    names = ("exact", "integral", "sum", "cosine")
    for (w_lo, w_hi) in _SUMMARY_WINDOWS:
        for name, ap in zip(names, aps):
            key = f"sup_error_{name}_[{_fmt(w_lo)},{_fmt(w_hi)}]"
            extra[key] = _fmt(sup_error(ap, f, w_lo, w_hi, samples=1000))
    with _open_out(args.out) as out:
        _write_report(
            out, cfg, extra, ("x", "f", "f_exact", "f_int", "f_sum", "f_cos"), rows
        )


def cmd_singularity(args: argparse.Namespace) -> None:
    cfg = RunConfig(
        "singularity",
        n=args.n,
        passes=args.passes,
        range_r=args.range_r,
        samples=args.samples,
    )
    cfg.validate()
    path = _resolve_path(cfg, default_passes=27)
    freqs = frequency_representatives(args.n)
    data = data_points(args.n, path)
    lo, hi = -TAU * TAU, 0.0
    rows = []
    errors = {}
    for name, window in (
        ("default", Window.default()),
        ("shifted", Window.default().shifted(QTau(Fraction(1, 2)))),
    ):
        f = nearest_distance(window)
        ap = build_approximant("sum", freqs, f=f, data=data)
        err = sup_error(ap, f, lo, hi, samples=args.samples)
        errors[name] = err
        rows.append((name, _fmt(err)))
    extra = {
        "effective_range": _fmt(path.r),
        "segments": path.m,
        "interval": f"[{_fmt(lo)},{_fmt(hi)}]",
        "improvement": _fmt(errors["default"] / errors["shifted"]),
    }
    with _open_out(args.out) as out:
        _write_report(out, cfg, extra, ("window", "sup_error"), rows)


def cmd_error_bound(args: argparse.Namespace) -> None:
    cfg = RunConfig(
        "error-bound",
        n=args.n,
        passes=args.passes,
        range_r=args.range_r,
        function=args.function,
    )
    cfg.validate()
    path = _resolve_path(cfg, default_passes=17)
    lift = _lift(args.function)
    f = _function(args.function)
    est = error_estimate(lift, args.n, path)
    exact = lift.cell_integral()
    cell_err = abs(exact - cell_quadrature(lift, args.n))
    pipe_err = abs(exact - data_quadrature(f, data_points(args.n, path)))

    rows = [
        (
            _fmt(est.eps_n),
            _fmt(est.eps_n_prime),
            _fmt(est.bound),
            _fmt(cell_err),
            _fmt(pipe_err),
            cell_err <= SQRT5 * est.eps_n,
            pipe_err < est.bound,
        )
    ]
    extra = {"effective_range": _fmt(path.r), "segments": path.m, "cell_integral": _fmt(exact)}
    with _open_out(args.out) as out:
        _write_report(
            out,
            cfg,
            extra,
            (
                "eps_n",
                "eps_n_prime",
                "bound",
                "cell_error",
                "pipeline_error",
                "cell_within_bound",
                "pipeline_within_bound",
            ),
            rows,
        )


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _add_path_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--passes", type=int, default=None, help="number of complete passes")
    p.add_argument(
        "--range",
        dest="range_r",
        type=float,
        default=None,
        help="path length; truncated down to the last complete pass",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fibfourier", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("points", help="model-set slice as CSV")
    p.add_argument("--lo", type=float, required=True)
    p.add_argument("--hi", type=float, required=True)
    p.add_argument("--window", default="default", help="default | shifted | LO:HI")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_points)

    p = sub.add_parser("data-points", help="discretization data points as CSV")
    p.add_argument("--n", type=int, required=True)
    _add_path_flags(p)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_data_points)

    p = sub.add_parser("frequencies", help="minimal frequency representatives")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_frequencies)

    p = sub.add_parser("coeffs", help="coefficient estimates")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--function", choices=_FUNCTIONS, default="nearest")
    p.add_argument(
        "--estimator", choices=("exact", "integral", "sum", "all"), default="exact"
    )
    p.add_argument("--window", default="default")
    _add_path_flags(p)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_coeffs)

    for name, func, dn, dr in (
        ("table1", cmd_table1, 3, 21.64),
        ("table3", cmd_table3, 7, 23.30),
    ):
        p = sub.add_parser(name, help="coefficient comparison table")
        p.add_argument("--n", type=int, default=dn)
        _add_path_flags(p)
        p.set_defaults(func=func, default_range=dr)
        p.add_argument("--out", default="-")

    for name, func, dn, dr in (
        ("table2", cmd_table2, 3, 21.64),
        ("table4", cmd_table4, 7, 23.30),
    ):
        p = sub.add_parser(name, help="function value comparison table")
        p.add_argument("--n", type=int, default=dn)
        _add_path_flags(p)
        p.add_argument("--cosine-n", type=int, default=50)
        p.add_argument(
            "--cosine-dc-halved",
            action="store_true",
            help="conventional cosine-series weights (harmonics doubled)",
        )
        p.set_defaults(func=func, default_range=dr)
        p.add_argument("--out", default="-")

    p = sub.add_parser("compare", help="grid comparison of all estimators")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--function", choices=_FUNCTIONS, default="nearest")
    _add_path_flags(p)
    p.add_argument("--cosine-n", type=int, default=50)
    p.add_argument(
        "--cosine-dc-halved",
        action="store_true",
        help="conventional cosine-series weights (harmonics doubled)",
    )
    p.add_argument("--grid", default="0:15:600", help="LO:HI:COUNT")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_compare, default_range=21.64)

    p = sub.add_parser("singularity", help="sum estimator on both windows")
    p.add_argument("--n", type=int, default=9)
    _add_path_flags(p)
    p.add_argument("--samples", type=int, default=800)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_singularity)

    p = sub.add_parser("error-bound", help="sampled oscillation bounds")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--function", choices=_FUNCTIONS, default="nearest")
    _add_path_flags(p)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_error_bound)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "default_range", None) is not None:
        if args.passes is None and args.range_r is None:
            args.range_r = args.default_range
    try:
        args.func(args)
    except ArithmeticCapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
