"""Command-line front end and SVG figure emitter.

Subcommands expose each capability of the library::

    ortho-traj verify     --suite <name|all> [--json-out r.json]
    ortho-traj trace      --x0 X --y0 Y [--p0 P] [--tol T]
    ortho-traj intersect  -m M -C C [--t-min A --t-max B]
    ortho-traj classify   -C C
    ortho-traj plot       --preset fig1a|fig1b | --spec spec.json  -o out.svg

All subcommands accept ``--config file.json`` (defaults for the same
parameter names; unknown keys are rejected) and ``--json-out file.json``
(machine-readable report {command, inputs, results, pass}).  Exit codes:
0 success, 1 verification failure, 2 usage or configuration error.

The plot presets reconstruct the qualitative two-panel figure of the
curve family: four members per panel (C = 0 dashed) plus the three
reference lines m = 1, 2, -3.  The exact constants of the non-parabolic
members are a rendering choice, fig1a = {0, 1, 2, 3} and
fig1b = {0, -1, -2, -4} (C = -4 being the innermost, cusped member).
"""

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from .core_model import Point, TrajectoryCurve, curve_point, cusp_parameters
from .errors import ConfigError, NoBranchError, OrthoTrajError
from .geometry_analysis import classify_conic, fit_conic, intersections
from .tracer import TraceConfig, trace_orthogonal
from . import verification

__all__ = [
    "CurveSpec",
    "PlotSpec",
    "preset_spec",
    "render_figure",
    "run",
    "main",
]

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd",
            "#8c564b", "#e377c2", "#17becf", "#bcbd22")
_LINE_COLOR = "#888888"


@dataclass(frozen=True)
class CurveSpec:
    C: float
    t_range: tuple = (-3.5, 3.5)
    dashed: bool = False


@dataclass(frozen=True)
class PlotSpec:
    """Everything needed to render one figure."""

    curves: tuple = ()
    lines: tuple = ()
    x_window: tuple = (-6.0, 10.0)
    y_window: tuple = (-9.0, 9.0)
    samples_per_curve: int = 400
    width_px: int = 640
    height_px: int = 720


def _validate_spec(spec: PlotSpec) -> None:
    if not spec.x_window[0] < spec.x_window[1]:
        raise ConfigError(f"x_window must be increasing, got {spec.x_window!r}")
    if not spec.y_window[0] < spec.y_window[1]:
        raise ConfigError(f"y_window must be increasing, got {spec.y_window!r}")
    if spec.samples_per_curve < 2:
        raise ConfigError(f"samples_per_curve must be >= 2, got {spec.samples_per_curve!r}")
    if spec.width_px <= 0 or spec.height_px <= 0:
        raise ConfigError(
            f"width_px/height_px must be positive, got {spec.width_px!r}x{spec.height_px!r}"
        )
    for cs in spec.curves:
        if not math.isfinite(cs.C):
            raise ConfigError(f"curves: C must be finite, got {cs.C!r}")
        if not cs.t_range[0] < cs.t_range[1]:
            raise ConfigError(f"curves: t_range must be increasing, got {cs.t_range!r}")
    for m in spec.lines:
        if not math.isfinite(m):
            raise ConfigError(f"lines: m must be finite, got {m!r}")


def preset_spec(name: str) -> PlotSpec:
    """The two built-in figure reconstructions."""
    members = {"fig1a": (0.0, 1.0, 2.0, 3.0), "fig1b": (0.0, -1.0, -2.0, -4.0)}
    if name not in members:
        raise ConfigError(f"preset must be one of {sorted(members)}, got {name!r}")
    curves = tuple(CurveSpec(C=C, dashed=(C == 0.0)) for C in members[name])
    return PlotSpec(curves=curves, lines=(1.0, 2.0, -3.0))


def _spec_from_document(doc: dict) -> PlotSpec:
    if not isinstance(doc, dict):
        raise ConfigError("plot spec document must be a JSON object")
    allowed = {
        "curves", "lines", "x_window", "y_window",
        "samples_per_curve", "width_px", "height_px",
    }
    unknown = set(doc) - allowed
    if unknown:
        raise ConfigError(f"unknown plot spec keys: {sorted(unknown)}")
    curves = []
    for entry in doc.get("curves", ()):
        if not isinstance(entry, dict):
            raise ConfigError(f"curves entries must be objects, got {entry!r}")
        extra = set(entry) - {"C", "t_range", "dashed"}
        if extra:
            raise ConfigError(f"unknown curve keys: {sorted(extra)}")
        if "C" not in entry:
            raise ConfigError("curve entry missing required key 'C'")
        curves.append(
            CurveSpec(
                C=float(entry["C"]),
                t_range=tuple(float(v) for v in entry.get("t_range", (-3.5, 3.5))),
                dashed=bool(entry.get("dashed", False)),
            )
        )
    kwargs = {}
    for key in ("x_window", "y_window"):
        if key in doc:
            win = doc[key]
            if not (isinstance(win, (list, tuple)) and len(win) == 2):
                raise ConfigError(f"{key} must be a [lo, hi] pair, got {win!r}")
            kwargs[key] = (float(win[0]), float(win[1]))
    for key in ("samples_per_curve", "width_px", "height_px"):
        if key in doc:
            kwargs[key] = int(doc[key])
    spec = PlotSpec(
        curves=tuple(curves),
        lines=tuple(float(m) for m in doc.get("lines", ())),
        **kwargs,
    )
    _validate_spec(spec)
    return spec


def _clip_line_to_window(m: float, b: float, xw, yw):
    """Endpoints of y = m x + b inside the window, or None."""
    x0, x1 = xw
    y0, y1 = yw
    if m == 0.0:
        return ((x0, b), (x1, b)) if y0 <= b <= y1 else None
    xa = (y0 - b) / m
    xb = (y1 - b) / m
    lo = max(x0, min(xa, xb))
    hi = min(x1, max(xa, xb))
    if lo > hi:
        return None
    return ((lo, m * lo + b), (hi, m * hi + b))


def render_figure(spec: PlotSpec) -> str:
    """Emit the figure as a deterministic SVG 1.1 document.

    One ``<path class="curve">`` per curve (dashed members get a
    stroke-dasharray), one ``<path class="family-line">`` per line
    clipped to the window, plus axes, ticks, and a legend of C values.
    """
    _validate_spec(spec)
    w, h = spec.width_px, spec.height_px
    x0, x1 = spec.x_window
    y0, y1 = spec.y_window
    sx = w / (x1 - x0)
    sy = h / (y1 - y0)

    def px(x: float) -> float:
        return (x - x0) * sx

    def py(y: float) -> float:
        return (y1 - y) * sy

    def fmt(v: float) -> str:
        return f"{v:.2f}"

    out = []
    out.append('<?xml version="1.0" encoding="UTF-8"?>')
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{w}" height="{h}" viewBox="0 0 {w} {h}">'
    )
    out.append(f'<defs><clipPath id="plot"><rect x="0" y="0" width="{w}" height="{h}"/></clipPath></defs>')
    out.append(f'<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>')

    # Axes and ticks (every 2 world units).
    axis = []
    if y0 <= 0.0 <= y1:
        axis.append(
            f'<line class="axis" x1="0" y1="{fmt(py(0.0))}" x2="{w}" y2="{fmt(py(0.0))}" '
            f'stroke="#333333" stroke-width="1"/>'
        )
    if x0 <= 0.0 <= x1:
        axis.append(
            f'<line class="axis" x1="{fmt(px(0.0))}" y1="0" x2="{fmt(px(0.0))}" y2="{h}" '
            f'stroke="#333333" stroke-width="1"/>'
        )
    for xv in range(math.ceil(x0 / 2) * 2, math.floor(x1 / 2) * 2 + 1, 2):
        if xv == 0 or not (y0 <= 0.0 <= y1):
            continue
        axis.append(
            f'<line class="tick" x1="{fmt(px(xv))}" y1="{fmt(py(0.0) - 3)}" '
            f'x2="{fmt(px(xv))}" y2="{fmt(py(0.0) + 3)}" stroke="#333333" stroke-width="1"/>'
        )
        axis.append(
            f'<text x="{fmt(px(xv))}" y="{fmt(py(0.0) + 14)}" font-size="10" '
            f'text-anchor="middle" fill="#333333">{xv:g}</text>'
        )
    for yv in range(math.ceil(y0 / 2) * 2, math.floor(y1 / 2) * 2 + 1, 2):
        if yv == 0 or not (x0 <= 0.0 <= x1):
            continue
        axis.append(
            f'<line class="tick" x1="{fmt(px(0.0) - 3)}" y1="{fmt(py(yv))}" '
            f'x2="{fmt(px(0.0) + 3)}" y2="{fmt(py(yv))}" stroke="#333333" stroke-width="1"/>'
        )
        axis.append(
            f'<text x="{fmt(px(0.0) + 6)}" y="{fmt(py(yv) + 3)}" font-size="10" '
            f'fill="#333333">{yv:g}</text>'
        )
    out.extend(axis)

    out.append('<g clip-path="url(#plot)">')
    for m in spec.lines:
        seg = _clip_line_to_window(m, -2.0 * m - m**3, spec.x_window, spec.y_window)
        if seg is None:
            d = ""
        else:
            (ax, ay), (bx, by) = seg
            d = f"M {fmt(px(ax))},{fmt(py(ay))} L {fmt(px(bx))},{fmt(py(by))}"
        out.append(
            f'<path class="family-line" fill="none" stroke="{_LINE_COLOR}" '
            f'stroke-width="1" d="{d}"/>'
        )
    for i, cs in enumerate(spec.curves):
        curve = TrajectoryCurve(cs.C)
        ts = np.linspace(cs.t_range[0], cs.t_range[1], spec.samples_per_curve)
        pieces = []
        for j, t in enumerate(ts):
            pt = curve_point(curve, float(t))
            cmd = "M" if j == 0 else "L"
            pieces.append(f"{cmd} {fmt(px(pt.x))},{fmt(py(pt.y))}")
        dash = ' stroke-dasharray="6 4"' if cs.dashed else ""
        color = _PALETTE[i % len(_PALETTE)]
        out.append(
            f'<path class="curve" fill="none" stroke="{color}" '
            f'stroke-width="1.5"{dash} d="{" ".join(pieces)}"/>'
        )
    out.append("</g>")

    # Legend: one entry per curve, then the line slopes.
    ly = 18
    for i, cs in enumerate(spec.curves):
        color = _PALETTE[i % len(_PALETTE)]
        label = f"C = {cs.C:g}" + (" (dashed)" if cs.dashed else "")
        out.append(
            f'<text class="legend" x="10" y="{ly}" font-size="12" fill="{color}">{label}</text>'
        )
        ly += 16
    if spec.lines:
        slopes = ", ".join(f"{m:g}" for m in spec.lines)
        out.append(
            f'<text class="legend" x="10" y="{ly}" font-size="12" '
            f'fill="{_LINE_COLOR}">lines m = {slopes}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


# ----------------------------------------------------------------------
# Command dispatch

_COMMAND_KEYS = {
    "verify": {"suite"},
    "trace": {"x0", "y0", "p0", "tol"},
    "intersect": {"m", "C", "t_min", "t_max"},
    "classify": {"C"},
    "plot": {"preset", "spec", "out"},
}

_NUMERIC_KEYS = {"x0", "y0", "p0", "tol", "m", "C", "t_min", "t_max"}


def _reject_inf(_):
    raise ConfigError("non-finite numbers are not allowed in config files")


def _load_config(path: str, command: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh, parse_constant=_reject_inf)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON in {path!r}: {exc}") from exc
    if not isinstance(doc, dict):
        raise ConfigError("config document must be a JSON object")
    allowed = _COMMAND_KEYS[command]
    unknown = set(doc) - allowed
    if unknown:
        raise ConfigError(f"unknown config keys for {command!r}: {sorted(unknown)}")
    for key, value in doc.items():
        if key in _NUMERIC_KEYS:
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise ConfigError(f"config key {key!r} must be a number, got {value!r}")
            if not math.isfinite(value):
                raise ConfigError(f"config key {key!r} must be finite")
    return doc


def _merge_params(args, command: str) -> dict:
    """Defaults < config file < explicit flags, with unknown keys rejected."""
    params = {}
    if getattr(args, "config", None):
        params.update(_load_config(args.config, command))
    for key in _COMMAND_KEYS[command]:
        value = getattr(args, key, None)
        if value is not None:
            params[key] = value
    for key, value in params.items():
        if key in _NUMERIC_KEYS:
            params[key] = float(value)
            if not math.isfinite(params[key]):
                raise ConfigError(f"parameter {key!r} must be finite")
    return params


def _require(params: dict, key: str, command: str):
    if key not in params:
        raise ConfigError(f"{command}: missing required parameter {key!r}")
    return params[key]


def _json_safe(value):
    if isinstance(value, float) and not math.isfinite(value):
        return repr(value)  # 'inf', '-inf', 'nan'
    return value


def _write_report(path, command, inputs, results, passed):
    report = {
        "command": command,
        "inputs": {k: _json_safe(v) for k, v in inputs.items()},
        "results": results,
        "pass": bool(passed),
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(report, fh, indent=2, allow_nan=False)
        fh.write("\n")


def _cmd_verify(args) -> int:
    params = _merge_params(args, "verify")
    suite = params.get("suite", "all")
    names = verification.suite_names() if suite == "all" else [suite]
    if any(n not in verification.SUITES for n in names):
        raise ConfigError(
            f"unknown suite {suite!r}; choose from {verification.suite_names()} or 'all'"
        )
    report, all_passed = verification.run_suites(names)
    rows = []
    for suite_name, results in report:
        for res in results:
            status = "PASS" if res.passed else "FAIL"
            print(f"[{status}] {suite_name}: {res.name}  ({res.detail})")
            rows.append(
                {
                    "suite": suite_name,
                    "check": res.name,
                    "passed": res.passed,
                    "detail": res.detail,
                }
            )
    n_checks = len(rows)
    n_passed = sum(r["passed"] for r in rows)
    print(f"{n_passed}/{n_checks} checks passed")
    if args.json_out:
        _write_report(args.json_out, "verify", {"suite": suite}, rows, all_passed)
    return 0 if all_passed else 1


def _cmd_trace(args) -> int:
    params = _merge_params(args, "trace")
    x0 = _require(params, "x0", "trace")
    y0 = _require(params, "y0", "trace")
    cfg = TraceConfig(
        start=Point(x0, y0),
        initial_slope_hint=params.get("p0"),
        tol=params.get("tol", 1e-8),
    )
    try:
        result = trace_orthogonal(cfg)
    except NoBranchError as exc:
        print(f"trace failed: {exc}", file=sys.stderr)
        if args.json_out:
            _write_report(args.json_out, "trace", params, {"error": str(exc)}, False)
        return 1
    first = result.samples[0][0]
    last = result.samples[-1][0]
    print(f"traced {len(result.samples)} samples from ({x0:g}, {y0:g})")
    print(f"  span: ({first.x:.6f}, {first.y:.6f}) .. ({last.x:.6f}, {last.y:.6f})")
    print(f"  end reasons: backward={result.end_reasons[0]}, forward={result.end_reasons[1]}")
    print(f"  terminated_by: {result.terminated_by}")
    print(f"  potential drift: {result.potential_drift:.3e}")
    if args.json_out:
        results = {
            "n_samples": len(result.samples),
            "terminated_by": result.terminated_by,
            "end_reasons": list(result.end_reasons),
            "potential_drift": result.potential_drift,
            "samples": [
                {"x": pt.x, "y": pt.y, "p": _json_safe(p)} for pt, p in result.samples
            ],
        }
        _write_report(args.json_out, "trace", params, results, True)
    return 0


def _cmd_intersect(args) -> int:
    params = _merge_params(args, "intersect")
    m = _require(params, "m", "intersect")
    C = _require(params, "C", "intersect")
    t_min = params.get("t_min", -10.0)
    t_max = params.get("t_max", 10.0)
    records = intersections(m, TrajectoryCurve(C), t_min, t_max)
    print(f"{len(records)} intersection(s) of line m={m:g} with curve C={C:g} "
          f"for t in [{t_min:g}, {t_max:g}]")
    for rec in records:
        tag = "orthogonal" if rec.orthogonal else "non-orthogonal"
        sp = "inf" if math.isinf(rec.slope_product) else f"{rec.slope_product:.9g}"
        print(
            f"  t = {rec.t: .9f}  point = ({rec.point.x: .9f}, {rec.point.y: .9f})  "
            f"slope product = {sp}  [{tag}]"
        )
    if args.json_out:
        results = [
            {
                "t": rec.t,
                "x": rec.point.x,
                "y": rec.point.y,
                "slope_product": _json_safe(rec.slope_product),
                "orthogonal": rec.orthogonal,
            }
            for rec in records
        ]
        _write_report(
            args.json_out,
            "intersect",
            {"m": m, "C": C, "t_min": t_min, "t_max": t_max},
            results,
            True,
        )
    return 0


def _cmd_classify(args) -> int:
    params = _merge_params(args, "classify")
    C = _require(params, "C", "classify")
    curve = TrajectoryCurve(C)
    verdict = classify_conic(curve)
    fit = fit_conic([curve_point(curve, t) for t in np.linspace(-3.0, 3.0, 200)])
    cusps = cusp_parameters(curve)
    print(f"curve C={C:g}: {verdict}")
    print(f"  conic residual (scaled coords): {fit.residual_rms:.3e}")
    print(f"  best-fit coefficients (x^2, xy, y^2, x, y, 1): "
          + ", ".join(f"{v:.6g}" for v in fit.coeffs))
    print(f"  cusp count: {len(cusps)}"
          + (f" at t = {', '.join(f'{t:.6f}' for t in cusps)}" if cusps else ""))
    if args.json_out:
        results = {
            "classification": verdict,
            "conic_residual_rms": fit.residual_rms,
            "conic_coeffs": list(fit.coeffs),
            "cusp_parameters": cusps,
        }
        _write_report(args.json_out, "classify", {"C": C}, results, True)
    return 0


def _cmd_plot(args) -> int:
    params = _merge_params(args, "plot")
    preset = params.get("preset")
    spec_path = params.get("spec")
    if (preset is None) == (spec_path is None):
        raise ConfigError("plot: exactly one of --preset or --spec is required")
    if preset is not None:
        spec = preset_spec(preset)
    else:
        try:
            with open(spec_path, "r", encoding="utf-8") as fh:
                doc = json.load(fh, parse_constant=_reject_inf)
        except OSError as exc:
            raise ConfigError(f"cannot read spec {spec_path!r}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"invalid JSON in {spec_path!r}: {exc}") from exc
        spec = _spec_from_document(doc)
    out = _require(params, "out", "plot")
    svg = render_figure(spec)
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    print(f"wrote {out} ({len(spec.curves)} curves, {len(spec.lines)} lines)")
    if args.json_out:
        results = {
            "out": out,
            "n_curves": len(spec.curves),
            "n_lines": len(spec.lines),
            "bytes": len(svg.encode("utf-8")),
        }
        inputs = {"preset": preset, "spec": spec_path, "out": out}
        _write_report(args.json_out, "plot", inputs, results, True)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ortho-traj",
        description="Curves orthogonal to the line family y = m x - 2m - m^3: "
        "verification suites, implicit-ODE tracing, intersection reports, "
        "conic classification, and figure rendering.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_shared(sp):
        sp.add_argument("--config", help="JSON file with parameter defaults")
        sp.add_argument("--json-out", help="write a JSON report to this path")

    sp = sub.add_parser("verify", help="run verification suites")
    sp.add_argument("--suite", help="suite name or 'all' (default all)")
    add_shared(sp)

    sp = sub.add_parser("trace", help="trace the trajectory through a point")
    sp.add_argument("--x0", type=float, help="start x")
    sp.add_argument("--y0", type=float, help="start y")
    sp.add_argument("--p0", type=float, help="initial slope hint")
    sp.add_argument("--tol", type=float, help="local error tolerance (default 1e-8)")
    add_shared(sp)

    sp = sub.add_parser("intersect", help="line-curve intersection report")
    sp.add_argument("-m", type=float, dest="m", help="line slope")
    sp.add_argument("-C", type=float, dest="C", help="curve constant")
    sp.add_argument("--t-min", type=float, dest="t_min", help="window start (default -10)")
    sp.add_argument("--t-max", type=float, dest="t_max", help="window end (default 10)")
    add_shared(sp)

    sp = sub.add_parser("classify", help="conic classification of one curve")
    sp.add_argument("-C", type=float, dest="C", help="curve constant")
    add_shared(sp)

    sp = sub.add_parser("plot", help="render a figure to SVG")
    sp.add_argument("--preset", help="fig1a or fig1b")
    sp.add_argument("--spec", help="JSON plot spec file")
    sp.add_argument("-o", "--out", dest="out", help="output SVG path")
    add_shared(sp)

    return parser


_DISPATCH = {
    "verify": _cmd_verify,
    "trace": _cmd_trace,
    "intersect": _cmd_intersect,
    "classify": _cmd_classify,
    "plot": _cmd_plot,
}


def run(argv) -> int:
    """Parse argv and execute; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return _DISPATCH[args.command](args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OrthoTrajError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
