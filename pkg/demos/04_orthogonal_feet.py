"""Feet and crossings
======================

Because the slope of every family member is 1/t, a line of slope m can
only be orthogonal to a curve where t = -m, and that point lies on the
line for every C.  So each line touches each curve orthogonally exactly
once; any further crossings are oblique.
"""

from orthotraj import (
    PARABOLA_NORMALS,
    TrajectoryCurve,
    intersections,
    line_at,
    orthogonal_foot,
)

print("orthogonal feet of the m = 1 line on several members:")
for C in (-1.0, 0.0, 2.0, 4.0):
    foot = orthogonal_foot(PARABOLA_NORMALS, 1.0, TrajectoryCurve(C))
    line = line_at(PARABOLA_NORMALS, 1.0)
    incidence = foot.point.y - line.y_at(foot.point.x)
    print(
        f"  C = {C:+g}: foot at t = {foot.t:g}, point "
        f"({foot.point.x:+.6f}, {foot.point.y:+.6f}), line residual {incidence:+.1e}"
    )

print("\nall crossings of the m = 1 line with the parabola (C = 0):")
for rec in intersections(1.0, TrajectoryCurve(0.0), -10.0, 10.0):
    tag = "orthogonal" if rec.orthogonal else "oblique"
    print(
        f"  t = {rec.t:+.6f}: point ({rec.point.x:+.6f}, {rec.point.y:+.6f}), "
        f"slope product {rec.slope_product:+.6f}  [{tag}]"
    )

print("\nthe horizontal line (m = 0) meets each curve's vertical tangent:")
for C in (0.0, 5.0):
    recs = intersections(0.0, TrajectoryCurve(C), -5.0, 5.0)
    for rec in recs:
        print(
            f"  C = {C:g}: t = {rec.t:+.1e}, point ({rec.point.x:+.4f}, {rec.point.y:+.4f}), "
            f"orthogonal = {rec.orthogonal}"
        )

print("\ncrossing census over a grid (uniqueness of the orthogonal one):")
for m in (-3.0, -1.0, 2.0):
    for C in (-4.0, 0.0, 4.0):
        recs = intersections(m, TrajectoryCurve(C), -10.0, 10.0)
        n_orth = sum(r.orthogonal for r in recs)
        print(
            f"  m = {m:+g}, C = {C:+g}: {len(recs)} crossing(s), {n_orth} orthogonal "
            f"(foot at t = {-m:+g})"
        )
