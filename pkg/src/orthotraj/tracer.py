"""Numerical tracing of orthogonal trajectories from the implicit ODE.

The slope field is never solved symbolically here: at every evaluation
point the admissible slopes are the real roots of the cubic
y p^3 + (x - 2) p^2 - 1 = 0, and the integrator follows one root branch
by nearest-root continuity.  Integration runs in arc length,

    (dx/ds, dy/ds) = sigma * (1, p) / sqrt(1 + p^2),

so vertical tangents (p -> inf where a curve crosses the x-axis) slow
the branch tracking down but never divide by zero.  Steps are taken with
the Cash-Karp embedded 4(5) Runge-Kutta pair under adaptive control; a
trace extends in both directions from its start point.

Termination reasons:

    arc-limit    the arc-length budget was spent
    branch-loss  the tracked cubic root could not be followed (e.g. the
                 vertical-tangent crossing, where the root runs away)
    singularity  the tracked root collided with a neighbouring root -
                 a cusp of the traced curve
    domain-exit  the trace left the configured bounding box

``trace_classic`` integrates three textbook orthogonal-trajectory fields
(hyperbolas/hyperbolas, radial lines/circles, shifted radial
lines/circles) with the same stepper and reports the drift of the exact
conserved quantity.
"""

import math
from dataclasses import dataclass, field
from typing import Optional

from .core_model import Point
from .errors import DomainError, NoBranchError
from .exact_ode import potential
from .roots import slopes_at

__all__ = ["TraceConfig", "TraceResult", "trace_orthogonal", "trace_classic"]

# Cash-Karp 4(5) tableau.
_A = (
    (),
    (1 / 5,),
    (3 / 40, 9 / 40),
    (3 / 10, -9 / 10, 6 / 5),
    (-11 / 54, 5 / 2, -70 / 27, 35 / 27),
    (1631 / 55296, 175 / 512, 575 / 13824, 44275 / 110592, 253 / 4096),
)
_B5 = (37 / 378, 0.0, 250 / 621, 125 / 594, 0.0, 512 / 1771)
_B4 = (2825 / 27648, 0.0, 18575 / 48384, 13525 / 55296, 277 / 14336, 1 / 4)

_H_MIN = 1e-6           # arc-length floor for step halving
_MAX_JUMP = 0.5         # root-continuity threshold in |delta p|
_CUSP_GAP = 0.05        # relative root gap treated as a root collision
_MAX_STEPS = 300_000
_SEVERITY = {"arc-limit": 0, "domain-exit": 1, "branch-loss": 2, "singularity": 3}


@dataclass(frozen=True)
class TraceConfig:
    """Integration parameters for one trace.

    ``step`` is the initial arc-length step and half the sample-spacing
    cap; ``max_arc`` is the arc budget per direction; ``tol`` bounds the
    local error per step.  ``domain`` is an optional (xmin, xmax, ymin,
    ymax) box; leaving it None uses a very large default box.
    """

    start: Optional[Point] = None
    initial_slope_hint: Optional[float] = None
    step: float = 1e-2
    max_arc: float = 50.0
    tol: float = 1e-8
    domain: Optional[tuple] = None

    def __post_init__(self):
        if not self.step > 0.0:
            raise DomainError(f"step must be positive, got {self.step!r}")
        if not self.max_arc > 0.0:
            raise DomainError(f"max_arc must be positive, got {self.max_arc!r}")
        if not self.tol > 0.0:
            raise DomainError(f"tol must be positive, got {self.tol!r}")

    def bounds(self) -> tuple:
        return self.domain if self.domain is not None else (-1e6, 1e6, -1e6, 1e6)


@dataclass
class TraceResult:
    """Ordered samples of one traced trajectory.

    ``samples`` holds (Point, p) pairs in geometric order along the
    curve; the start point sits between the two traced directions.
    ``end_reasons`` gives the termination reason of the (backward,
    forward) ends and ``terminated_by`` the more severe of the two.
    ``potential_drift`` is max |F - F0| of the conserved quantity over
    all samples (the exact-form potential for the main family, the
    respective first integral for classic traces).
    """

    samples: list = field(default_factory=list)
    terminated_by: str = "arc-limit"
    potential_drift: float = 0.0
    end_reasons: tuple = ("arc-limit", "arc-limit")


class _BranchJump(Exception):
    """Raised inside a step when no root continues the tracked branch."""


def _pick_root(x: float, y: float, p_ref: float):
    """Nearest real slope root to p_ref, with the full root set."""
    rs = slopes_at(x, y)
    if len(rs) == 0:
        raise _BranchJump
    best = min(rs.roots, key=lambda r: abs(r - p_ref))
    if abs(best - p_ref) > _MAX_JUMP * max(1.0, abs(p_ref)):
        raise _BranchJump
    return best, rs


def _rk_step(rhs, x: float, y: float, h: float):
    """One Cash-Karp step; returns (x5, y5, err)."""
    kx = [0.0] * 6
    ky = [0.0] * 6
    kx[0], ky[0] = rhs(x, y)
    for i in range(1, 6):
        ai = _A[i]
        xs = x
        ys = y
        for j, a in enumerate(ai):
            xs += h * a * kx[j]
            ys += h * a * ky[j]
        kx[i], ky[i] = rhs(xs, ys)
    x5 = x
    y5 = y
    ex = 0.0
    ey = 0.0
    for i in range(6):
        x5 += h * _B5[i] * kx[i]
        y5 += h * _B5[i] * ky[i]
        d = _B5[i] - _B4[i]
        ex += h * d * kx[i]
        ey += h * d * ky[i]
    return x5, y5, max(abs(ex), abs(ey))


def _stall_reason(x: float, y: float, p_ref: float) -> str:
    """Classify a refinement stall: root collision (cusp) vs plain loss."""
    try:
        rs = slopes_at(x, y)
    except DomainError:
        return "branch-loss"
    if len(rs) == 0:
        return "branch-loss"
    gap_tol = _CUSP_GAP * max(1.0, abs(p_ref))
    best = min(rs.roots, key=lambda r: abs(r - p_ref))
    for r, mult in zip(rs.roots, rs.multiplicities):
        if r == best and mult > 1:
            return "singularity"
        if r != best and abs(r - best) <= gap_tol:
            return "singularity"
    return "branch-loss"


def _march_branch(x0, y0, p0, sigma, cfg: TraceConfig, stall_fn):
    """Integrate one direction; returns (samples, reason).

    ``stall_fn(x, y, p)`` names the reason when step halving bottoms out.
    """
    xmin, xmax, ymin, ymax = cfg.bounds()
    h_cap = 2.0 * cfg.step
    h = cfg.step
    arc = 0.0
    x, y, p_ref = x0, y0, p0
    samples = []

    def rhs(xs, ys):
        # p_ref rebinds at each accepted step: stages anchor to the
        # step-start branch.
        p, _ = _pick_root(xs, ys, p_ref)
        inv = sigma / math.sqrt(1.0 + p * p)
        return inv, p * inv

    for _ in range(_MAX_STEPS):
        remaining = cfg.max_arc - arc
        if remaining <= 1e-12:
            return samples, "arc-limit"
        h_step = min(h, h_cap, remaining)
        try:
            xn, yn, err = _rk_step(rhs, x, y, h_step)
            if err > cfg.tol:
                raise _BranchJump
            p_new, _ = _pick_root(xn, yn, p_ref)
        except _BranchJump:
            h *= 0.5
            if h < _H_MIN:
                return samples, stall_fn(x, y, p_ref)
            continue
        if not (xmin <= xn <= xmax and ymin <= yn <= ymax):
            return samples, "domain-exit"
        x, y, p_ref = xn, yn, p_new
        arc += h_step
        samples.append((Point(x, y), p_ref))
        if err > 0.0:
            h = h_step * min(5.0, max(0.2, 0.9 * (cfg.tol / err) ** 0.2))
        else:
            h = h_step * 5.0
    return samples, "branch-loss"


def _merge(back, start_sample, fwd, reasons, drift_fn) -> TraceResult:
    samples = list(reversed(back)) + [start_sample] + list(fwd)
    f0 = drift_fn(*start_sample)
    drift = 0.0
    for pt, p in samples:
        drift = max(drift, abs(drift_fn(pt, p) - f0))
    terminated = max(reasons, key=lambda r: _SEVERITY[r])
    return TraceResult(
        samples=samples,
        terminated_by=terminated,
        potential_drift=drift,
        end_reasons=reasons,
    )


def trace_orthogonal(cfg: TraceConfig) -> TraceResult:
    """Trace the orthogonal trajectory through ``cfg.start``.

    The starting slope is the cubic root nearest ``initial_slope_hint``
    (which must lie within 0.1 of a root), or the root of smallest
    magnitude when no hint is given.  The trace then extends in both
    directions until each hits a termination condition.
    """
    if cfg.start is None:
        raise DomainError("TraceConfig.start is required")
    x0, y0 = float(cfg.start[0]), float(cfg.start[1])
    if not (math.isfinite(x0) and math.isfinite(y0)):
        raise DomainError(f"start must be finite, got ({x0!r}, {y0!r})")

    rs = slopes_at(x0, y0)
    if len(rs) == 0:
        raise NoBranchError(f"no real slope at start ({x0!r}, {y0!r})")
    if cfg.initial_slope_hint is not None:
        hint = float(cfg.initial_slope_hint)
        p0 = min(rs.roots, key=lambda r: abs(r - hint))
        if abs(p0 - hint) > 0.1:
            raise NoBranchError(
                f"no slope root within 0.1 of hint {hint!r} at ({x0!r}, {y0!r})"
            )
    else:
        p0 = min(rs.roots, key=abs)

    def drift_fn(pt, p):
        return potential(pt.y, p)

    back, r_back = _march_branch(x0, y0, p0, -1.0, cfg, _stall_reason)
    fwd, r_fwd = _march_branch(x0, y0, p0, +1.0, cfg, _stall_reason)
    return _merge(back, (Point(x0, y0), p0), fwd, (r_back, r_fwd), drift_fn)


# Classic textbook pairs: direction field (unnormalized) and conserved
# first integral of the orthogonal trajectories.
_CLASSIC = {
    "hyperbola-pair": (
        lambda x, y: (x, -y),
        lambda x, y: x * y,
        (0.0, 0.0),
    ),
    "monopole": (
        lambda x, y: (y, -x),
        lambda x, y: x * x + y * y,
        (0.0, 0.0),
    ),
    "shifted-monopole": (
        lambda x, y: (y, -(x + 1.0)),
        lambda x, y: (x + 1.0) * (x + 1.0) + y * y,
        (-1.0, 0.0),
    ),
}


def trace_classic(kind: str, start: Point, cfg: TraceConfig) -> TraceResult:
    """Trace a classic orthogonal-trajectory fixture through ``start``.

    kind 'hyperbola-pair' integrates y' = -y/x (orthogonal to the
    hyperbolas x^2 - y^2 = const, conserving x*y); 'monopole' integrates
    y' = -x/y (orthogonal to the lines y = m x, conserving x^2 + y^2);
    'shifted-monopole' integrates y' = -(x+1)/y (conserving
    (x+1)^2 + y^2).  The start must avoid the field's singular point.
    """
    if kind not in _CLASSIC:
        raise DomainError(f"unknown classic kind {kind!r}")
    raw_field, conserved, singular = _CLASSIC[kind]
    x0, y0 = float(start[0]), float(start[1])
    if (x0, y0) == singular:
        raise DomainError(f"start {start!r} is the singular point of {kind!r}")

    def march(sigma):
        xmin, xmax, ymin, ymax = cfg.bounds()
        h_cap = 2.0 * cfg.step
        h = cfg.step
        arc = 0.0
        x, y = x0, y0
        samples = []

        def rhs(xs, ys):
            vx, vy = raw_field(xs, ys)
            n = math.hypot(vx, vy)
            if n < 1e-12:
                raise _BranchJump
            return sigma * vx / n, sigma * vy / n

        for _ in range(_MAX_STEPS):
            remaining = cfg.max_arc - arc
            if remaining <= 1e-12:
                return samples, "arc-limit"
            h_step = min(h, h_cap, remaining)
            try:
                xn, yn, err = _rk_step(rhs, x, y, h_step)
                if err > cfg.tol:
                    raise _BranchJump
            except _BranchJump:
                h *= 0.5
                if h < _H_MIN:
                    return samples, "singularity"
                continue
            if not (xmin <= xn <= xmax and ymin <= yn <= ymax):
                return samples, "domain-exit"
            x, y = xn, yn
            arc += h_step
            vx, vy = raw_field(x, y)
            p = vy / vx if vx != 0.0 else math.copysign(math.inf, vy)
            samples.append((Point(x, y), p))
            if err > 0.0:
                h = h_step * min(5.0, max(0.2, 0.9 * (cfg.tol / err) ** 0.2))
            else:
                h = h_step * 5.0
        return samples, "branch-loss"

    vx0, vy0 = raw_field(x0, y0)
    if math.hypot(vx0, vy0) < 1e-12:
        raise DomainError(f"start {start!r} is singular for {kind!r}")
    p_start = vy0 / vx0 if vx0 != 0.0 else math.copysign(math.inf, vy0)

    def drift_fn(pt, _p):
        return conserved(pt.x, pt.y)

    back, r_back = march(-1.0)
    fwd, r_fwd = march(+1.0)
    return _merge(back, (Point(x0, y0), p_start), fwd, (r_back, r_fwd), drift_fn)
