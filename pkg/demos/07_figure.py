"""Rendering the two-panel family figure
=========================================

Writes the two preset SVG panels: four members each (the dashed one is
the parabola C = 0) with the three reference lines m = 1, 2, -3.  Panel
b contains the cusped C = -4 member, the innermost curve.  Output is
deterministic: rendering the same spec twice gives identical bytes.
"""

from pathlib import Path

from orthotraj.cli_plot import CurveSpec, PlotSpec, preset_spec, render_figure

out_dir = Path(__file__).resolve().parent / "out"
out_dir.mkdir(exist_ok=True)

for name in ("fig1a", "fig1b"):
    spec = preset_spec(name)
    svg = render_figure(spec)
    path = out_dir / f"{name}.svg"
    path.write_text(svg)
    members = ", ".join(f"{c.C:g}" for c in spec.curves)
    print(f"wrote {path}  (C in {{{members}}}, lines m = 1, 2, -3)")
    assert render_figure(spec) == svg, "rendering must be deterministic"

# A custom spec: zoom in on the cusps of C = -4.
zoom = PlotSpec(
    curves=(CurveSpec(C=-4.0, t_range=(-2.0, 2.0)), CurveSpec(C=0.0, dashed=True)),
    lines=(1.0,),
    x_window=(-1.0, 7.0),
    y_window=(-5.0, 5.0),
    samples_per_curve=600,
)
path = out_dir / "cusp_zoom.svg"
path.write_text(render_figure(zoom))
print(f"wrote {path}  (cusp close-up of the C = -4 member)")
