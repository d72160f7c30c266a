"""Real-root extraction for cubics plus a generic bracketed root finder.

The slope cubic solved pointwise throughout the package is

    y p^3 + (x - 2) p^2 - 1 = 0,

whose real roots are the admissible orthogonal-trajectory slopes through
(x, y).  Near the x-axis the leading coefficient collapses and the cubic
degenerates to a quadratic; the solver degree-reduces explicitly instead
of dividing by a tiny coefficient.
"""

import math
from dataclasses import dataclass

from .errors import (
    DomainError,
    IndeterminatePolynomialError,
    NoBracketError,
)

__all__ = ["CubicCoeffs", "RootSet", "real_roots_cubic", "slopes_at", "bracketed_root"]

# Relative threshold deciding cubic -> quadratic -> linear collapse.
_DEGREE_EPS = 1e-12
# Relative discriminant proximity treated as a multiple root.
_MULTIPLE_EPS = 1e-10
# Roots closer than this (scaled by max(1, |r|)) are merged into one.
_CLUSTER_EPS = 1e-8


@dataclass(frozen=True)
class CubicCoeffs:
    """Coefficients of a3*p^3 + a2*p^2 + a1*p + a0."""

    a3: float
    a2: float
    a1: float
    a0: float

    def __post_init__(self):
        for name in ("a3", "a2", "a1", "a0"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise DomainError(f"coefficient {name} must be finite, got {v!r}")

    def __call__(self, p: float) -> float:
        return ((self.a3 * p + self.a2) * p + self.a1) * p + self.a0

    def derivative(self, p: float) -> float:
        return (3.0 * self.a3 * p + 2.0 * self.a2) * p + self.a1


@dataclass(frozen=True)
class RootSet:
    """Real roots in ascending order with matching multiplicities."""

    roots: tuple
    multiplicities: tuple

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)


def _cbrt(v: float) -> float:
    return math.copysign(abs(v) ** (1.0 / 3.0), v)


def _polish(c: CubicCoeffs, r: float) -> float:
    # One or two guarded Newton steps on the full cubic; bail out near a
    # stationary point where Newton would shoot off.
    for _ in range(2):
        f = c(r)
        df = c.derivative(r)
        if df == 0.0:
            break
        step = f / df
        if not math.isfinite(step) or abs(step) > 1.0 + abs(r):
            break
        r -= step
    return r


def _quadratic_roots(a: float, b: float, c: float):
    """Real roots of a*p^2 + b*p + c with multiplicities (a != 0)."""
    disc = b * b - 4.0 * a * c
    scale = max(b * b, abs(4.0 * a * c))
    if abs(disc) <= _MULTIPLE_EPS * scale:
        return [(-b / (2.0 * a), 2)]
    if disc < 0.0:
        return []
    sq = math.sqrt(disc)
    q = -0.5 * (b + math.copysign(sq, b if b != 0.0 else 1.0))
    return [(q / a, 1), (c / q, 1)]


def _cubic_roots_closed_form(a3: float, a2: float, a1: float, a0: float):
    """Real roots of a monic-normalizable cubic via trig/Cardano branches."""
    b = a2 / a3
    c = a1 / a3
    d = a0 / a3
    shift = b / 3.0
    # Depressed cubic u^3 + P u + Q with p = u - shift.
    P = c - b * b / 3.0
    Q = (2.0 * b * b * b - 9.0 * b * c) / 27.0 + d

    tol_p = _MULTIPLE_EPS * max(1.0, b * b, abs(c))
    tol_q = _MULTIPLE_EPS * max(1.0, abs(b) ** 3, abs(b * c), abs(d))
    if abs(P) <= tol_p and abs(Q) <= tol_q:
        return [(-shift, 3)]

    half_q = 0.5 * Q
    third_p = P / 3.0
    D = half_q * half_q + third_p * third_p * third_p
    d_scale = max(half_q * half_q, abs(third_p) ** 3)

    if abs(D) <= _MULTIPLE_EPS * d_scale:
        # Boundary of the casus irreducibilis: one simple + one double root.
        simple = 3.0 * Q / P
        double = -1.5 * Q / P
        return [(simple - shift, 1), (double - shift, 2)]
    if D < 0.0:
        # Three distinct real roots (trigonometric form).
        m = 2.0 * math.sqrt(-third_p)
        arg = 3.0 * Q / (P * m)
        arg = min(1.0, max(-1.0, arg))
        theta = math.acos(arg)
        return [
            (m * math.cos((theta - 2.0 * math.pi * k) / 3.0) - shift, 1)
            for k in range(3)
        ]
    # One real root (Cardano).
    sq = math.sqrt(D)
    u = _cbrt(-half_q + sq) + _cbrt(-half_q - sq)
    return [(u - shift, 1)]


def real_roots_cubic(c: CubicCoeffs) -> RootSet:
    """All real roots of the cubic, closed form plus Newton polish.

    Degenerate leading coefficients (relative to the largest coefficient)
    trigger explicit degree reduction.  Roots closer than the cluster
    tolerance are merged and their multiplicities summed.
    """
    scale = max(abs(c.a3), abs(c.a2), abs(c.a1), abs(c.a0))
    if scale == 0.0:
        raise IndeterminatePolynomialError("all four coefficients are zero")
    eps = _DEGREE_EPS * scale

    if abs(c.a3) <= eps:
        if abs(c.a2) <= eps:
            if abs(c.a1) <= eps:
                return RootSet(roots=(), multiplicities=())  # nonzero constant
            pairs = [(-c.a0 / c.a1, 1)]
        else:
            pairs = _quadratic_roots(c.a2, c.a1, c.a0)
    else:
        pairs = _cubic_roots_closed_form(c.a3, c.a2, c.a1, c.a0)

    polished = [(_polish(c, r) if mult == 1 else r, mult) for r, mult in pairs]
    polished.sort(key=lambda rm: rm[0])

    merged = []
    for r, mult in polished:
        if merged and abs(r - merged[-1][0]) <= _CLUSTER_EPS * max(1.0, abs(r)):
            prev_r, prev_m = merged[-1]
            merged[-1] = (prev_r, prev_m + mult)
        else:
            merged.append((r, mult))

    return RootSet(
        roots=tuple(r + 0.0 for r, _ in merged),  # normalizes -0.0
        multiplicities=tuple(m for _, m in merged),
    )


def slopes_at(x: float, y: float) -> RootSet:
    """Admissible orthogonal-trajectory slopes through (x, y).

    These are the real roots of y p^3 + (x - 2) p^2 - 1 = 0.  p = 0 is
    never a root (the constant term is -1), so any returned slope defines
    a genuine direction.
    """
    if not (math.isfinite(x) and math.isfinite(y)):
        raise DomainError(f"point must be finite, got ({x!r}, {y!r})")
    return real_roots_cubic(CubicCoeffs(a3=y, a2=x - 2.0, a1=0.0, a0=-1.0))


def bracketed_root(f, lo: float, hi: float, tol: float = 1e-12) -> float:
    """Root of f in [lo, hi] by bisection accelerated with secant steps.

    Requires lo < hi and f(lo) * f(hi) <= 0.  Stops when the bracket
    width drops below ``tol`` and returns the endpoint with the smaller
    |f|.
    """
    if not lo < hi:
        raise DomainError(f"need lo < hi, got [{lo!r}, {hi!r}]")
    fa = f(lo)
    fb = f(hi)
    if fa == 0.0:
        return lo
    if fb == 0.0:
        return hi
    if (fa > 0.0) == (fb > 0.0):
        raise NoBracketError(f"no sign change on [{lo!r}, {hi!r}]")

    a, b = lo, hi
    for _ in range(200):
        if b - a <= tol:
            break
        # Secant candidate; fall back to bisection when it leaves the
        # bracket interior or the denominator degenerates.
        denom = fb - fa
        mid = 0.5 * (a + b)
        if denom != 0.0:
            cand = b - fb * (b - a) / denom
            if not (a < cand < b):
                cand = mid
        else:
            cand = mid
        # Guard against stagnation at an endpoint.
        if cand in (a, b):
            cand = mid
        fc = f(cand)
        if fc == 0.0:
            return cand
        if (fc > 0.0) == (fa > 0.0):
            a, fa = cand, fc
        else:
            b, fb = cand, fc
    return a if abs(fa) <= abs(fb) else b
