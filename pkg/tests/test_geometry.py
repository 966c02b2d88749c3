import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arcinterp.geometry import (
    ArcSpec,
    ControlPolygon,
    Point2,
    bezier_point,
    build_polygon,
    coordinate_polys,
    radial_error,
    signed_radial_curve,
    simplified_error_poly,
)
from arcinterp.numeric import MP
from arcinterp.polynomials import Poly
from arcinterp.solvers import solve

phis = st.floats(min_value=math.pi / 12, max_value=math.pi / 2)
params_by_degree = {
    2: st.fixed_dictionaries({"d": st.floats(0.5, 3.0)}),
    3: st.fixed_dictionaries({"xi": st.floats(0.5, 2.0), "eta": st.floats(0.0, 1.5)}),
    4: st.fixed_dictionaries(
        {"alpha": st.floats(0.5, 1.5), "beta": st.floats(0.0, 1.5), "gamma": st.floats(0.5, 2.0)}
    ),
}
any_params = st.one_of(*params_by_degree.values())


def test_arc_spec_fields():
    arc = ArcSpec(MP.pi / 3)
    assert abs(arc.c**2 + arc.s**2 - 1) < 1e-15
    assert arc.c == pytest.approx(0.5)


@pytest.mark.parametrize("phi", [0.0, -0.1, 5e-4, 1.6, float("nan")])
def test_arc_spec_rejects_out_of_range(phi):
    with pytest.raises(ValueError):
        ArcSpec(phi)


def test_arc_spec_accepts_float_right_angle():
    assert float(ArcSpec(math.pi / 2).phi) == math.pi / 2


def test_build_polygon_layouts():
    arc = ArcSpec(MP.pi / 2)
    poly = build_polygon(arc, {"d": 2.19737})
    assert poly.points[1] == Point2(2.19737, 0)
    arc4 = ArcSpec(MP.pi / 4)
    poly = build_polygon(arc4, {"xi": 1.09754, "eta": 0.31523})
    assert (poly.points[1].x, poly.points[1].y) == (1.09754, -0.31523)
    poly = build_polygon(arc, {"alpha": 0.87518, "beta": 0.99857, "gamma": 1.49995})
    assert (poly.points[2].x, poly.points[2].y) == (1.49995, 0)
    assert (poly.points[1].x, poly.points[1].y) == (0.87518, -0.99857)
    with pytest.raises(ValueError):
        build_polygon(arc, {"q": 1})


@settings(max_examples=40, deadline=None)
@given(phis, any_params)
def test_polygon_endpoints_and_mirror_symmetry(phi, params):
    arc = ArcSpec(phi)
    poly = build_polygon(arc, params)
    assert poly.points[0] == Point2(arc.c, -arc.s)
    assert poly.points[-1] == Point2(arc.c, arc.s)
    n = poly.degree
    for j in range(n + 1):
        a, b = poly.points[j], poly.points[n - j]
        assert abs(a.x - b.x) < 1e-15 and abs(a.y + b.y) < 1e-15


def test_control_polygon_point_count():
    with pytest.raises(ValueError):
        ControlPolygon(3, (Point2(0, 0), Point2(1, 1)))


def test_bezier_endpoints_and_domain():
    poly = build_polygon(ArcSpec(0.9), {"xi": 1.2, "eta": 0.4})
    assert bezier_point(poly, -1) == poly.points[0]
    assert bezier_point(poly, 1) == poly.points[-1]
    with pytest.raises(ValueError):
        bezier_point(poly, 1.5)


def test_bezier_midpoint_of_optimal_quartic():
    sol = solve(ArcSpec(MP.pi / 3), 4)
    mid = bezier_point(sol.polygon, 0)
    assert abs(mid.y) < 1e-30
    assert abs(mid.x - MP.sqrt(sol.psi(0) + 1)) < 1e-30


@settings(max_examples=40, deadline=None)
@given(phis, any_params)
def test_expansion_matches_direct_evaluation(phi, params):
    poly = build_polygon(ArcSpec(phi), params)
    psi = simplified_error_poly(poly)
    for t in np.random.default_rng(3).uniform(-1, 1, 256):
        p = bezier_point(poly, MP.mpf(t))
        assert abs(p.x**2 + p.y**2 - 1 - psi(t)) < 1e-12


@settings(max_examples=40, deadline=None)
@given(phis, any_params)
def test_psi_even_and_vanishing_at_ends(phi, params):
    psi = simplified_error_poly(build_polygon(ArcSpec(phi), params))
    assert abs(psi(1)) < 1e-12 and abs(psi(-1)) < 1e-12
    assert all(abs(a) < 1e-13 for a in psi.coeffs[1::2])
    for t in np.random.default_rng(4).uniform(-1, 1, 256):
        assert abs(psi(t) - psi(-t)) < 1e-12


@settings(max_examples=30, deadline=None)
@given(phis, st.floats(0.5, 3.0))
def test_parabolic_factored_form(phi, d):
    arc = ArcSpec(phi)
    c = arc.c
    psi = simplified_error_poly(build_polygon(arc, {"d": d}))
    expected = Poly([-1, 0, 1]) * Poly([4 - (d + c) ** 2, 0, (d - c) ** 2]) / 4
    assert len(psi.coeffs) <= 5
    for k in range(5):
        assert abs(psi[k] - expected[k]) < 1e-12


@settings(max_examples=30, deadline=None)
@given(phis, params_by_degree[3])
def test_cubic_displayed_error_function(phi, params):
    arc = ArcSpec(phi)
    c, s, xi, eta = arc.c, arc.s, params["xi"], params["eta"]
    psi = simplified_error_poly(build_polygon(arc, params))
    inner = Poly([16 - (3 * xi + c) ** 2, 0, 16 * s**2 - 9 * (eta + s) ** 2 + 9 * (xi - c) ** 2, 0, (3 * eta - s) ** 2])
    expected = Poly([-1, 0, 1]) * inner / 16
    for k in range(7):
        assert abs(psi[k] - expected[k]) < 1e-12


@settings(max_examples=30, deadline=None)
@given(phis, params_by_degree[4])
def test_quartic_displayed_error_function(phi, params):
    # the displayed formula fixes b1 = (alpha, -beta), b3 = (alpha, beta)
    arc = ArcSpec(phi)
    c, s = arc.c, arc.s
    a, b, g = params["alpha"], params["beta"], params["gamma"]
    psi = simplified_error_poly(build_polygon(arc, params))
    for t in np.linspace(-1, 1, 41):
        t = MP.mpf(t)
        ref = (
            -1
            + (4 * (1 - t**4) * a + 3 * (1 - t**2) ** 2 * g + (1 + 6 * t**2 + t**4) * c) ** 2 / 64
            + t**2 * (2 * (1 - t**2) * b + (1 + t**2) * s) ** 2 / 4
        )
        assert abs(psi(t) - ref) < 1e-25


def test_degenerate_cubic_is_a_line_segment():
    arc = ArcSpec(MP.pi / 4)
    poly = build_polygon(arc, {"xi": arc.c, "eta": arc.s / 3})
    x, y = coordinate_polys(poly)
    assert abs(x[0] - arc.c) < 1e-30 and all(abs(a) < 1e-30 for a in x.coeffs[1:])
    assert abs(y[1] - arc.s) < 1e-30
    assert all(abs(y[k]) < 1e-30 for k in (0, 2, 3))


def test_quartic_table_point_value():
    poly = build_polygon(ArcSpec(MP.pi / 2), {"alpha": 0.87518, "beta": 0.99857, "gamma": 1.49995})
    # five-decimal parameters only pin the amplitude to a couple of digits
    assert float(simplified_error_poly(poly)(0)) == pytest.approx(1.42325e-4, rel=2e-2)


def test_radial_error_nonnegative_and_dense_sampling_oracle():
    for params in ({"d": 1.7}, {"xi": 1.1, "eta": 0.3}, {"alpha": 0.99, "beta": 0.42, "gamma": 1.11}):
        poly = build_polygon(ArcSpec(MP.pi / 4), params)
        r = radial_error(poly)
        dense = np.max(np.abs(signed_radial_curve(poly, np.linspace(-1, 1, 400001))))
        assert r >= 0
        assert r == pytest.approx(dense, rel=1e-9)
        assert r >= dense - 1e-15


def test_radial_error_of_optimal_quartic_pi_over_6():
    sol = solve(ArcSpec(MP.pi / 6), 4)
    # about half the simplified error for a tiny ripple
    assert sol.radial_error == pytest.approx(2.34778e-8 / 2, rel=1e-4)
    dense = np.max(np.abs(signed_radial_curve(sol.polygon, np.linspace(-1, 1, 200001))))
    assert sol.radial_error == pytest.approx(dense, rel=1e-6)


def test_radial_identity_parabolic_right_angle():
    sol = solve(ArcSpec(MP.pi / 2), 2)
    simp = sol.simplified_error
    # ||p|| - 1 = psi / (||p|| + 1); the worst case is the negative extremum psi = -simp
    assert sol.radial_error == pytest.approx(1 - math.sqrt(1 - simp), rel=1e-10)
    assert abs(2 * sol.radial_error - simp) <= simp**2


def test_radial_error_sample_floor():
    poly = build_polygon(ArcSpec(0.5), {"d": 1.1})
    with pytest.raises(ValueError):
        radial_error(poly, samples=10)
