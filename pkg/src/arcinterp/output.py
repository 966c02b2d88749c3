"""Serialisation of solutions and error curves (JSON, CSV, SVG).

Every emitter is deterministic: floats are written with ``repr`` (JSON,
CSV) or fixed decimals (SVG), so identical inputs give identical bytes.
"""

import csv
import io

import numpy as np

from .geometry import radial_from_psi
from .polynomials import isolate_roots

SVG_WIDTH, SVG_HEIGHT = 800, 400
SVG_MARGIN = 40


def solution_to_dict(sol):
    return {
        "degree": sol.degree,
        "phi": float(sol.arc.phi),
        "params": {k: float(v) for k, v in sol.params.items()},
        "control_points": [[float(p.x), float(p.y)] for p in sol.polygon.points],
        "simplified_error": sol.simplified_error,
        "radial_error": sol.radial_error,
        "amplitude_mu": sol.amplitude_mu,
        "psi_coefficients": [float(a) for a in sol.psi.coeffs],
    }


def solution_text(sol):
    lines = [f"degree {sol.degree} interpolant, phi = {float(sol.arc.phi)!r}"]
    for k, v in sol.params.items():
        lines.append(f"  {k:<6} = {float(v):.15g}")
    lines.append("  control points:")
    for p in sol.polygon.points:
        lines.append(f"    ({float(p.x):.15g}, {float(p.y):.15g})")
    lines.append(f"  simplified radial error = {sol.simplified_error:.6e}")
    lines.append(f"  radial error            = {sol.radial_error:.6e}")
    lines.append(f"  amplitude mu            = {sol.amplitude_mu:.6e}")
    return "\n".join(lines)


def error_curve(sol, samples):
    """Rows (t, psi(t), ||p(t)|| - 1) on a uniform grid over [-1, 1]."""
    if samples < 64:
        raise ValueError("error curve needs at least 64 samples")
    rows = []
    for t in np.linspace(-1.0, 1.0, samples + 1):
        psi = sol.psi(float(t))
        rows.append((float(t), float(psi), float(radial_from_psi(psi))))
    return rows


def curve_csv(rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["t", "psi", "radial_signed"])
    for t, psi, rad in rows:
        writer.writerow([repr(t), repr(psi), repr(rad)])
    return buf.getvalue()


def _svg_xy(t, v, scale):
    x = SVG_MARGIN + (t + 1) / 2 * (SVG_WIDTH - 2 * SVG_MARGIN)
    half = (SVG_HEIGHT - 2 * SVG_MARGIN) / 2
    y = SVG_HEIGHT / 2 - v / scale * half / 1.1
    return x, y


def curve_svg(sol, rows):
    """psi normalised by its amplitude, with axes and the interior extrema marked."""
    scale = max(abs(r[1]) for r in rows) or 1.0
    pts = " ".join("%.3f,%.3f" % _svg_xy(t, psi, scale) for t, psi, _ in rows)
    extrema = [float(r.root) for r in isolate_roots(sol.psi.deriv(), -1, 1) if -1 < r.root < 1]
    x0, y0 = _svg_xy(-1, 0, scale)
    x1, _ = _svg_xy(1, 0, scale)
    xm, _ = _svg_xy(0, 0, scale)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SVG_WIDTH} {SVG_HEIGHT}" '
        f'width="{SVG_WIDTH}" height="{SVG_HEIGHT}">',
        f'<rect x="0" y="0" width="{SVG_WIDTH}" height="{SVG_HEIGHT}" fill="white"/>',
        f'<line x1="{x0:.3f}" y1="{y0:.3f}" x2="{x1:.3f}" y2="{y0:.3f}" stroke="black" stroke-width="1"/>',
        f'<line x1="{xm:.3f}" y1="{SVG_MARGIN}" x2="{xm:.3f}" y2="{SVG_HEIGHT - SVG_MARGIN}" '
        'stroke="black" stroke-width="1"/>',
        f'<polyline fill="none" stroke="#1f4e9c" stroke-width="1.5" points="{pts}"/>',
    ]
    for t in extrema:
        cx, cy = _svg_xy(t, float(sol.psi(t)), scale)
        out.append(f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="3" fill="#c0392b"/>')
    out.append(
        f'<text x="{SVG_MARGIN}" y="{SVG_MARGIN - 12}" font-family="monospace" font-size="13">'
        f"degree {sol.degree}, phi = {float(sol.arc.phi):.6f}, max |psi| = {scale:.5e}</text>"
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"
