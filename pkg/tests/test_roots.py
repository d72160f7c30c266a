"""Cubic solver and bracketed root finder tests.

Covers:
  - closed-form roots against factored polynomials
  - degree reduction (quadratic, linear, constant) and multiplicities
  - the slope cubic at hand-checked points
  - completeness against the numpy companion-matrix solver (10^4 points)
  - completeness against a literal brute-force sign scan of the slope
    equation over p in [-1000, 1000] at resolution 1e-3 (subset)
  - residual bound |poly(r)| <= 1e-9 * max|a_i| * max(1, |r|)^3
  - odd root count off the x-axis
  - bisection/secant bracketing: convergence, errors, cross-check with
    the closed-form cusp parameters
"""

import math

import numpy as np
import pytest

from orthotraj import (
    CubicCoeffs,
    DomainError,
    IndeterminatePolynomialError,
    NoBracketError,
    bracketed_root,
    cusp_parameters,
    real_roots_cubic,
    slopes_at,
    TrajectoryCurve,
)


def poly_scale(c: CubicCoeffs, r: float) -> float:
    return max(abs(c.a3), abs(c.a2), abs(c.a1), abs(c.a0)) * max(1.0, abs(r)) ** 3


class TestRealRootsCubic:
    def test_single_real_root(self):
        # 2p^3 - p^2 - 1 = (p - 1)(2p^2 + p + 1); the quadratic has no
        # real roots.
        rs = real_roots_cubic(CubicCoeffs(2.0, -1.0, 0.0, -1.0))
        assert rs.roots == (1.0,)
        assert rs.multiplicities == (1,)

    def test_quadratic_reduction(self):
        rs = real_roots_cubic(CubicCoeffs(0.0, 1.0, 0.0, -1.0))
        assert rs.roots == (-1.0, 1.0)
        assert rs.multiplicities == (1, 1)

    def test_triple_root(self):
        rs = real_roots_cubic(CubicCoeffs(1.0, 0.0, 0.0, 0.0))
        assert rs.roots == (0.0,)
        assert rs.multiplicities == (3,)
        rs = real_roots_cubic(CubicCoeffs(1.0, -3.0, 3.0, -1.0))  # (p-1)^3
        assert rs.multiplicities == (3,)
        assert rs.roots[0] == pytest.approx(1.0, abs=1e-8)

    def test_three_distinct_roots(self):
        # (p - 1)(p - 2)(p + 3) = p^3 - 7p + 6
        rs = real_roots_cubic(CubicCoeffs(1.0, 0.0, -7.0, 6.0))
        assert rs.multiplicities == (1, 1, 1)
        assert np.allclose(rs.roots, (-3.0, 1.0, 2.0), atol=1e-12)

    def test_double_root(self):
        # (p - 1)^2 (p + 2) = p^3 - 3p + 2
        rs = real_roots_cubic(CubicCoeffs(1.0, 0.0, -3.0, 2.0))
        assert list(rs.multiplicities) == [1, 2]
        assert rs.roots[0] == pytest.approx(-2.0, abs=1e-8)
        assert rs.roots[1] == pytest.approx(1.0, abs=1e-8)

    def test_quadratic_double_root(self):
        rs = real_roots_cubic(CubicCoeffs(0.0, 1.0, -2.0, 1.0))  # (p-1)^2
        assert rs.multiplicities == (2,)
        assert rs.roots[0] == pytest.approx(1.0, abs=1e-10)

    def test_linear_and_constant(self):
        rs = real_roots_cubic(CubicCoeffs(0.0, 0.0, 2.0, -4.0))
        assert rs.roots == (2.0,)
        assert real_roots_cubic(CubicCoeffs(0.0, 0.0, 0.0, 5.0)).roots == ()

    def test_all_zero_is_indeterminate(self):
        with pytest.raises(IndeterminatePolynomialError):
            real_roots_cubic(CubicCoeffs(0.0, 0.0, 0.0, 0.0))

    def test_non_finite_rejected(self):
        with pytest.raises(DomainError):
            CubicCoeffs(1.0, math.inf, 0.0, 0.0)

    def test_residual_bound_random(self):
        rng = np.random.default_rng(3)
        for _ in range(2000):
            coeffs = CubicCoeffs(*(float(v) for v in rng.uniform(-10, 10, 4)))
            for r in real_roots_cubic(coeffs):
                assert abs(coeffs(r)) <= 1e-9 * poly_scale(coeffs, r)

    def test_matches_companion_matrix_oracle(self):
        # Independent oracle: numpy's eigenvalue-based solver.
        rng = np.random.default_rng(5)
        for _ in range(10_000):
            x = float(rng.uniform(-10, 10))
            y = float(rng.uniform(-10, 10))
            mine = []
            rs = slopes_at(x, y)
            for r, mult in zip(rs.roots, rs.multiplicities):
                mine.extend([r] * mult)
            ref = np.roots([y, x - 2.0, 0.0, -1.0])
            ref = sorted(float(z.real) for z in ref if abs(z.imag) <= 1e-8 * max(1.0, abs(z)))
            assert len(mine) == len(ref), (x, y, mine, ref)
            for a, b in zip(mine, ref):
                assert a == pytest.approx(b, rel=1e-6, abs=1e-6)


class TestSlopesAt:
    def test_parabola_point(self):
        rs = slopes_at(1.0, 2.0)
        assert rs.roots == (1.0,)

    def test_x_axis_degeneration(self):
        assert slopes_at(3.0, 0.0).roots == (-1.0, 1.0)
        assert slopes_at(1.0, 0.0).roots == ()

    def test_zero_never_a_root(self):
        rng = np.random.default_rng(9)
        for _ in range(200):
            rs = slopes_at(float(rng.uniform(-10, 10)), float(rng.uniform(-10, 10)))
            assert all(r != 0.0 for r in rs.roots)

    def test_odd_count_off_axis(self):
        rng = np.random.default_rng(13)
        for _ in range(3000):
            x = float(rng.uniform(-10, 10))
            y = float(rng.uniform(-10, 10))
            if abs(y) < 1e-6:
                continue
            n = sum(slopes_at(x, y).multiplicities)
            assert n in (1, 3)

    def test_brute_force_sign_scan_subset(self):
        # Literal scan of the slope equation over p in [-1000, 1000] at
        # resolution 1e-3 for a seeded subset of points; scan roots and
        # solver roots must match within 1e-6, with no extras either way.
        ps = np.arange(-1000.0, 1000.0 + 1e-3, 1e-3)
        p2 = ps * ps
        p3 = p2 * ps
        rng = np.random.default_rng(17)
        for _ in range(120):
            x = float(rng.uniform(-10, 10))
            y = float(rng.uniform(-10, 10))
            vals = y * p3 + (x - 2.0) * p2 - 1.0
            sgn = np.sign(vals)
            idx = np.flatnonzero(sgn[:-1] * sgn[1:] < 0)

            def f(p, x=x, y=y):
                return ((y * p + (x - 2.0)) * p) * p - 1.0

            scan_roots = [
                bracketed_root(f, float(ps[i]), float(ps[i + 1]), tol=1e-12)
                for i in idx
            ]
            scan_roots.extend(float(p) for p in ps[vals == 0.0])
            scan_roots.sort()

            solver_roots = [r for r in slopes_at(x, y) if abs(r) <= 1000.0]
            assert len(scan_roots) == len(solver_roots), (x, y)
            for a, b in zip(scan_roots, solver_roots):
                assert a == pytest.approx(b, abs=1e-6)


class TestBracketedRoot:
    def test_polynomial_root(self):
        r = bracketed_root(lambda t: t * t - 2.0 * t - 3.0, 2.0, 4.0, tol=1e-12)
        assert r == pytest.approx(3.0, abs=1e-10)

    def test_no_bracket(self):
        with pytest.raises(NoBracketError):
            bracketed_root(lambda t: t - 5.0, 0.0, 1.0)

    def test_invalid_interval(self):
        with pytest.raises(DomainError):
            bracketed_root(lambda t: t, 1.0, 0.0)

    def test_endpoint_root(self):
        assert bracketed_root(lambda t: t, 0.0, 1.0) == 0.0

    def test_cusp_equation(self):
        # Same zero that cusp_parameters(C=-4) reports in closed form.
        r = bracketed_root(lambda t: 2.0 - 4.0 * (1.0 + t * t) ** -1.5, 0.5, 1.0, 1e-12)
        assert r == pytest.approx(0.7664209365408798, abs=1e-10)
        assert r == pytest.approx(cusp_parameters(TrajectoryCurve(-4.0))[1], abs=1e-10)

    def test_steep_function(self):
        r = bracketed_root(lambda t: math.tanh(50.0 * (t - 0.3)), -1.0, 1.0, tol=1e-13)
        assert r == pytest.approx(0.3, abs=1e-10)
