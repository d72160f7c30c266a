"""Closed-form geometry tests.

Covers:
  - line family evaluation (Horner) against hand values
  - curve parametrization and the parabola identity at C = 0
  - velocity formulas validated against central finite differences
  - slope = 1/t universality (also via a finite-difference quotient)
  - both ODE residual forms, on lines and on curves
  - orthogonal feet: incidence, slope product, vertical-tangent case,
    degenerate (cusp) feet, unsupported families
  - cusp census and sign-change consistency of the velocity
  - exact mirror symmetry about the x-axis
"""

import math

import numpy as np
import pytest

from orthotraj import (
    PARABOLA_NORMALS,
    DegenerateFootError,
    DegeneratePointError,
    DomainError,
    LineFamily,
    TrajectoryCurve,
    UnsupportedFamilyError,
    curve_point,
    curve_slope,
    curve_velocity,
    cusp_parameters,
    line_at,
    ode_c_residual,
    ode_o_residual,
    orthogonal_foot,
)

C_GRID = (-4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0)


def fd_velocity(curve, t, h=1e-6):
    xp, yp = curve_point(curve, t + h)
    xm, ym = curve_point(curve, t - h)
    return ((xp - xm) / (2 * h), (yp - ym) / (2 * h))


class TestLineFamily:
    def test_reference_intercepts(self):
        zero = line_at(PARABOLA_NORMALS, 0.0)
        assert zero.slope == 0.0 and zero.intercept == 0.0
        line = line_at(PARABOLA_NORMALS, 1.0)
        assert line.slope == 1.0 and line.intercept == -3.0
        assert line_at(PARABOLA_NORMALS, -2.0).intercept == 12.0

    def test_horner_matches_direct(self):
        for m in np.linspace(-3, 3, 61):
            assert PARABOLA_NORMALS.f(float(m)) == pytest.approx(
                -2.0 * m - m**3, rel=1e-14, abs=1e-14
            )

    def test_trailing_zeros_trimmed(self):
        fam = LineFamily((1.0, 2.0, 0.0, 0.0))
        assert fam.f_coeffs == (1.0, 2.0)

    def test_invalid_inputs(self):
        with pytest.raises(DomainError):
            LineFamily(())
        with pytest.raises(DomainError):
            LineFamily((1.0, math.nan))
        with pytest.raises(DomainError):
            line_at(PARABOLA_NORMALS, math.inf)

    def test_line_residual_is_zero_on_the_line(self):
        # A line point always satisfies its own family equation.
        for m in np.linspace(-3.0, 3.0, 121):
            line = line_at(PARABOLA_NORMALS, float(m))
            for x in np.linspace(-10.0, 10.0, 21):
                y = line.y_at(float(x))
                resid = ode_c_residual(float(x), y, float(m))
                scale = max(1.0, abs(y), abs(m * x), abs(m) ** 3)
                assert abs(resid) <= 1e-12 * scale


class TestCurvePoint:
    def test_parabola_member(self):
        pt = curve_point(TrajectoryCurve(0.0), 1.0)
        assert pt == (1.0, 2.0)
        assert pt.y**2 == pytest.approx(4.0 * pt.x, abs=1e-15)

    def test_direct_substitution(self):
        assert curve_point(TrajectoryCurve(3.0), 0.0) == (-3.0, 0.0)
        assert curve_point(TrajectoryCurve(-4.0), 0.0) == (4.0, 0.0)

    def test_c0_is_parabola_everywhere(self):
        curve = TrajectoryCurve(0.0)
        for t in np.linspace(-4, 4, 101):
            x, y = curve_point(curve, float(t))
            assert y * y == pytest.approx(4.0 * x, abs=1e-12)

    def test_mirror_symmetry_exact(self):
        rng = np.random.default_rng(7)
        for _ in range(500):
            C = float(rng.uniform(-6, 6))
            t = float(rng.uniform(-5, 5))
            curve = TrajectoryCurve(C)
            x1, y1 = curve_point(curve, t)
            x2, y2 = curve_point(curve, -t)
            assert x2 == x1
            assert y2 == -y1

    def test_rejects_non_finite(self):
        with pytest.raises(DomainError):
            curve_point(TrajectoryCurve(0.0), math.nan)
        with pytest.raises(DomainError):
            TrajectoryCurve(math.inf)


class TestCurveVelocity:
    def test_known_values(self):
        assert curve_velocity(TrajectoryCurve(0.0), 1.0) == (2.0, 2.0)
        assert curve_velocity(TrajectoryCurve(0.0), 0.0) == (0.0, 2.0)
        assert curve_velocity(TrajectoryCurve(-2.0), 0.0) == (0.0, 0.0)

    def test_matches_finite_differences(self):
        # The closed-form derivative must agree with a central-difference
        # oracle (step 1e-6) to 1e-6 everywhere it is used.
        rng = np.random.default_rng(11)
        for _ in range(400):
            C = float(rng.uniform(-5, 5))
            t = float(rng.uniform(-4, 4))
            curve = TrajectoryCurve(C)
            vx, vy = curve_velocity(curve, t)
            fx, fy = fd_velocity(curve, t)
            assert vx == pytest.approx(fx, abs=1e-6)
            assert vy == pytest.approx(fy, abs=1e-6)

    def test_common_factor_structure(self):
        # dx/dt = t * dy/dt for every C and t.
        for C in C_GRID:
            for t in np.linspace(-3, 3, 41):
                vx, vy = curve_velocity(TrajectoryCurve(C), float(t))
                assert vx == pytest.approx(t * vy, rel=1e-12, abs=1e-12)


class TestCurveSlope:
    def test_parabola_slope(self):
        assert curve_slope(TrajectoryCurve(0.0), 2.0) == 0.5

    def test_slope_is_c_independent(self):
        assert curve_slope(TrajectoryCurve(7.0), 2.0) == pytest.approx(0.5, abs=1e-12)
        # Finite-difference quotient oracle.
        curve = TrajectoryCurve(7.0)
        h = 1e-6
        xp, yp = curve_point(curve, 2.0 + h)
        xm, ym = curve_point(curve, 2.0 - h)
        assert (yp - ym) / (xp - xm) == pytest.approx(0.5, abs=1e-6)

    def test_slope_universality(self):
        for C in C_GRID:
            curve = TrajectoryCurve(C)
            for t in np.linspace(-4, 4, 81):
                t = float(t)
                if t == 0.0:
                    continue
                vx, vy = curve_velocity(curve, t)
                if max(abs(vx), abs(vy)) == 0.0:
                    continue
                assert abs(curve_slope(curve, t) - 1.0 / t) <= 1e-9
                h = 1e-6
                xp, yp = curve_point(curve, t + h)
                xm, ym = curve_point(curve, t - h)
                assert (yp - ym) / (xp - xm) == pytest.approx(1.0 / t, abs=1e-6)

    def test_vertical_tangent_signal(self):
        assert curve_slope(TrajectoryCurve(5.0), 0.0) == math.inf

    def test_cusp_is_degenerate(self):
        with pytest.raises(DegeneratePointError):
            curve_slope(TrajectoryCurve(-2.0), 0.0)


class TestOdeResiduals:
    def test_line_equation_examples(self):
        assert ode_c_residual(5.0, 2.0, 1.0) == 0.0
        assert ode_c_residual(0.0, 0.0, 0.0) == 0.0
        assert ode_c_residual(1.0, 2.0, 1.0) == 4.0

    def test_orthogonal_equation_examples(self):
        assert ode_o_residual(1.0, 2.0, 1.0) == 0.0
        assert ode_o_residual(3.0, 0.0, 1.0) == 0.0

    def test_on_curve_identity(self):
        # Substituting the parametrization with p = 1/t satisfies the
        # orthogonal ODE identically, for every C.
        for C in C_GRID + (2.0,):
            curve = TrajectoryCurve(C)
            for t in np.linspace(-6, 6, 601):
                t = float(t)
                if abs(t) < 1e-3:
                    continue
                x, y = curve_point(curve, t)
                p = 1.0 / t
                resid = ode_o_residual(x, y, p)
                scale = max(1.0, abs(y * p**3), abs(p * p * (2.0 - x)))
                assert abs(resid) <= 1e-9 * scale

    def test_specific_on_curve_point(self):
        x, y = curve_point(TrajectoryCurve(2.0), 1.5)
        assert ode_o_residual(x, y, 1.0 / 1.5) == pytest.approx(0.0, abs=1e-12)


class TestOrthogonalFoot:
    def test_parabola_feet(self):
        foot = orthogonal_foot(PARABOLA_NORMALS, 1.0, TrajectoryCurve(0.0))
        assert foot.t == -1.0
        assert foot.point == (1.0, -2.0)
        line = line_at(PARABOLA_NORMALS, 1.0)
        assert line.y_at(foot.point.x) == pytest.approx(foot.point.y, abs=1e-12)
        assert 1.0 * curve_slope(TrajectoryCurve(0.0), foot.t) == pytest.approx(-1.0)

        foot = orthogonal_foot(PARABOLA_NORMALS, -2.0, TrajectoryCurve(0.0))
        assert foot.t == 2.0
        assert foot.point == (4.0, 4.0)
        assert line_at(PARABOLA_NORMALS, -2.0).y_at(4.0) == pytest.approx(4.0)

    def test_horizontal_line_meets_vertical_tangent(self):
        foot = orthogonal_foot(PARABOLA_NORMALS, 0.0, TrajectoryCurve(5.0))
        assert foot.t == 0.0
        assert foot.point == (-5.0, 0.0)
        assert foot.velocity[0] == 0.0 and foot.velocity[1] > 0.0

    def test_incidence_and_product_random(self):
        rng = np.random.default_rng(20260810)
        n = 0
        while n < 1000:
            m = float(rng.uniform(0.1, 3.0)) * (1.0 if rng.random() < 0.5 else -1.0)
            C = float(rng.uniform(-5.0, 5.0))
            if abs(2.0 + C * (1.0 + m * m) ** -1.5) < 1e-3:
                continue
            n += 1
            foot = orthogonal_foot(PARABOLA_NORMALS, m, TrajectoryCurve(C))
            line = line_at(PARABOLA_NORMALS, m)
            assert abs(foot.point.y - line.y_at(foot.point.x)) <= 1e-9
            assert abs(m * (1.0 / foot.t) + 1.0) <= 1e-9

    def test_cusp_foot_is_degenerate(self):
        # t = -m lands exactly on a cusp when m^2 = (C^2/4)^(1/3) - 1.
        m = math.sqrt((16.0 / 4.0) ** (1.0 / 3.0) - 1.0)
        with pytest.raises(DegenerateFootError):
            orthogonal_foot(PARABOLA_NORMALS, m, TrajectoryCurve(-4.0))

    def test_unsupported_family(self):
        with pytest.raises(UnsupportedFamilyError):
            orthogonal_foot(LineFamily((0.0, 1.0)), 1.0, TrajectoryCurve(0.0))


class TestCusps:
    def test_census(self):
        assert cusp_parameters(TrajectoryCurve(0.0)) == []
        assert cusp_parameters(TrajectoryCurve(1.0)) == []
        assert cusp_parameters(TrajectoryCurve(-1.0)) == []
        assert cusp_parameters(TrajectoryCurve(-2.0)) == [0.0]
        got = cusp_parameters(TrajectoryCurve(-4.0))
        assert len(got) == 2
        assert got[0] == pytest.approx(-0.7664209365408798, abs=1e-12)
        assert got[1] == pytest.approx(+0.7664209365408798, abs=1e-12)

    def test_velocity_vanishes_at_cusps(self):
        for C in (-2.0, -3.0, -4.0, -10.0):
            curve = TrajectoryCurve(C)
            for t in cusp_parameters(curve):
                vx, vy = curve_velocity(curve, t)
                assert abs(vx) <= 1e-12 and abs(vy) <= 1e-12

    def test_velocity_changes_sign_across_cusps(self):
        for C in (-3.0, -4.0, -8.0):
            curve = TrajectoryCurve(C)
            for tc in cusp_parameters(curve):
                if tc == 0.0:
                    continue
                eps = 1e-4
                before = curve_velocity(curve, tc - eps)
                after = curve_velocity(curve, tc + eps)
                assert before[0] * after[0] < 0.0
                assert before[1] * after[1] < 0.0

    def test_dy_dt_positive_without_cusps(self):
        for C in (-1.9, -1.0, 0.0, 2.0, 5.0):
            curve = TrajectoryCurve(C)
            for t in np.linspace(-6, 6, 241):
                assert curve_velocity(curve, float(t))[1] > 0.0
