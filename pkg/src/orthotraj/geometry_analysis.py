"""Geometric validation: line-curve crossings and the conic dichotomy.

Two families of checks live here.  ``intersections`` locates every
crossing of a family line with a trajectory curve in a parameter window
and flags which crossing is orthogonal (exactly one per line and curve,
at t = -m).  ``fit_conic``/``is_parabola`` quantify the degeneration
claim: the C = 0 member is the parabola y^2 = 4x and fits a quadratic
form to machine precision, while every C != 0 member leaves a conic
residual orders of magnitude above it.
"""

import math
from dataclasses import dataclass

import numpy as np

from .core_model import (
    PARABOLA_NORMALS,
    Point,
    TrajectoryCurve,
    curve_point,
    curve_slope,
    line_at,
)
from .errors import DegenerateInputError, DegeneratePointError, DomainError
from .roots import bracketed_root

__all__ = [
    "IntersectionRecord",
    "ConicFit",
    "intersections",
    "fit_conic",
    "classify_conic",
    "is_parabola",
]

_SCAN_POINTS = 10_000       # sign-scan resolution over the t-window
_DEDUPE_TOL = 1e-8          # crossings closer than this merge into one
_ORTHO_TOL = 1e-6           # |slope product + 1| tolerance
_CONIC_ACCEPT = 1e-8        # residual at or below: the samples lie on a conic
_CONIC_REJECT = 1e-3        # residual at or above: definitely not a conic
_PARABOLA_DISC_TOL = 1e-6   # |b^2 - 4ac| tolerance relative to |(a,b,c)|^2


@dataclass(frozen=True)
class IntersectionRecord:
    """One line-curve crossing.

    ``slope_product`` is m * (curve slope); ``math.inf`` tags a vertical
    curve tangent.  ``orthogonal`` is True when the product is -1 within
    tolerance, or for the vertical-tangent / horizontal-line pairing.
    """

    t: float
    point: Point
    slope_product: float
    orthogonal: bool


def intersections(m: float, curve: TrajectoryCurve, t_min: float, t_max: float):
    """All crossings of the slope-m family line with ``curve`` for
    t in [t_min, t_max], sorted by t.

    The crossing function g(t) = y(t) - (m x(t) - 2m - m^3) is sign-
    scanned on a uniform grid of 10^4 points; each sign change is
    refined by bracketed bisection/secant and nearby roots are merged.
    Grid nodes where g evaluates to exactly zero count as roots too
    (the orthogonal foot often lands on one).
    """
    m = float(m)
    if not math.isfinite(m):
        raise DomainError(f"m must be finite, got {m!r}")
    if not t_min < t_max:
        raise DomainError(f"need t_min < t_max, got [{t_min!r}, {t_max!r}]")
    line = line_at(PARABOLA_NORMALS, m)
    C = curve.C

    ts = np.linspace(t_min, t_max, _SCAN_POINTS)
    s = np.sqrt(1.0 + ts * ts)
    xs = ts * ts - C / s
    ys = 2.0 * ts + C * ts / s
    vals = ys - (m * xs + line.intercept)

    def g(t: float) -> float:
        pt = curve_point(curve, t)
        return pt.y - line.y_at(pt.x)

    roots = [float(t) for t in ts[vals == 0.0]]
    sign = np.sign(vals)
    change = (sign[:-1] * sign[1:]) < 0.0
    for i in np.flatnonzero(change):
        roots.append(bracketed_root(g, float(ts[i]), float(ts[i + 1]), tol=1e-12))

    roots.sort()
    merged = []
    for r in roots:
        if merged and abs(r - merged[-1]) <= _DEDUPE_TOL:
            continue
        merged.append(r)

    records = []
    for t in merged:
        pt = curve_point(curve, t)
        if abs(t) <= _DEDUPE_TOL:
            # Vertical tangent: orthogonal exactly to the horizontal line.
            records.append(
                IntersectionRecord(
                    t=t, point=pt, slope_product=math.inf, orthogonal=(m == 0.0)
                )
            )
            continue
        try:
            product = m * curve_slope(curve, t)
            orthogonal = abs(product + 1.0) <= _ORTHO_TOL
        except DegeneratePointError:
            product = math.nan
            orthogonal = False
        records.append(
            IntersectionRecord(t=t, point=pt, slope_product=product, orthogonal=orthogonal)
        )
    return records


@dataclass(frozen=True)
class ConicFit:
    """Least-squares quadratic form a x^2 + b xy + c y^2 + d x + e y + f.

    ``coeffs`` is the unit-norm coefficient vector in the original
    coordinates; ``residual_rms`` is the fit residual in the internally
    scaled coordinates (zero mean, unit RMS radius), which is what the
    accept/reject thresholds refer to.
    """

    coeffs: tuple
    residual_rms: float

    def discriminant(self) -> float:
        a, b, c, _, _, _ = self.coeffs
        return b * b - 4.0 * a * c


def fit_conic(points) -> ConicFit:
    """Best-fit conic through >= 12 points in general position.

    The coefficient vector is the smallest right singular vector of the
    [x^2, xy, y^2, x, y, 1] design matrix built from pre-scaled
    coordinates; collinear input has no unique conic and is rejected.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise DomainError(f"points must be an (n, 2) array, got shape {pts.shape}")
    if not np.all(np.isfinite(pts)):
        raise DomainError("points must be finite")
    n = pts.shape[0]
    if n < 12:
        raise DegenerateInputError(f"need at least 12 points, got {n}")

    mean = pts.mean(axis=0)
    centered = pts - mean
    spread = np.linalg.svd(centered, compute_uv=False)
    if spread[1] <= 1e-10 * max(spread[0], 1e-300):
        raise DegenerateInputError("points are collinear")

    r = math.sqrt(float((centered**2).sum(axis=1).mean()))
    q = centered / r
    x = q[:, 0]
    y = q[:, 1]
    design = np.column_stack([x * x, x * y, y * y, x, y, np.ones(n)])
    _, sv, vt = np.linalg.svd(design, full_matrices=False)
    a, b, c, d, e, f = vt[-1]
    residual_rms = float(sv[-1]) / math.sqrt(n)

    # Map coefficients back to the original coordinates
    # (x' = (X - mx)/r, y' = (Y - my)/r) and renormalize.
    mx, my = float(mean[0]), float(mean[1])
    r2 = r * r
    coeffs = np.array(
        [
            a / r2,
            b / r2,
            c / r2,
            d / r - (2.0 * a * mx + b * my) / r2,
            e / r - (2.0 * c * my + b * mx) / r2,
            f - (d * mx + e * my) / r + (a * mx * mx + b * mx * my + c * my * my) / r2,
        ]
    )
    coeffs /= np.linalg.norm(coeffs)
    if coeffs[int(np.argmax(np.abs(coeffs)))] < 0.0:
        coeffs = -coeffs
    return ConicFit(coeffs=tuple(float(v) for v in coeffs), residual_rms=residual_rms)


def _default_samples(curve: TrajectoryCurve, n: int = 200, t_range=(-3.0, 3.0)):
    return [curve_point(curve, t) for t in np.linspace(t_range[0], t_range[1], n)]


def classify_conic(curve: TrajectoryCurve, n: int = 200, t_range=(-3.0, 3.0)) -> str:
    """Classify curve samples as 'parabola', 'other-conic', 'non-conic',
    or 'inconclusive'.

    The residual thresholds are two-sided (accept <= 1e-8, reject >=
    1e-3); residuals in between are reported as inconclusive rather than
    coerced to either side.
    """
    fit = fit_conic(_default_samples(curve, n, t_range))
    if fit.residual_rms <= _CONIC_ACCEPT:
        a, b, c = fit.coeffs[:3]
        scale = max(a * a + b * b + c * c, 1e-300)
        if abs(fit.discriminant()) <= _PARABOLA_DISC_TOL * scale:
            return "parabola"
        return "other-conic"
    if fit.residual_rms >= _CONIC_REJECT:
        return "non-conic"
    return "inconclusive"


def is_parabola(curve: TrajectoryCurve) -> bool:
    """True iff 200 default samples of the curve fit a parabola."""
    return classify_conic(curve) == "parabola"
