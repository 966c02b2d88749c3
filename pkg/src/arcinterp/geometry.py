"""Arcs, control polygons and the two error measures.

The target is the unit arc from angle -phi to phi.  An interpolant is a
Bezier curve over t in [-1, 1] whose control polygon is mirror-symmetric
about the x-axis and whose end points sit on the arc.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

import numpy as np
from scipy.optimize import minimize_scalar

from .numeric import MP, is_mp
from .polynomials import Poly

MIN_PHI = 1e-3
RADIAL_SAMPLES = 4096

PARAM_NAMES = {
    2: ("d",),
    3: ("xi", "eta"),
    4: ("alpha", "beta", "gamma"),
}


@dataclass(frozen=True)
class ArcSpec:
    """Unit arc with half-angle ``phi``; ``c``/``s`` are its cosine and sine."""

    phi: object
    c: object = field(init=False)
    s: object = field(init=False)

    def __post_init__(self):
        phi = MP.mpf(self.phi)
        if not MP.isfinite(phi) or phi < MIN_PHI or phi > MP.pi / 2 + 1e-12:
            raise ValueError(f"half-angle must lie in [{MIN_PHI}, pi/2], got {float(phi)!r}")
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "c", MP.cos(phi))
        object.__setattr__(self, "s", MP.sin(phi))


@dataclass(frozen=True)
class Point2:
    x: object
    y: object

    def __iter__(self):
        yield self.x
        yield self.y

    def reflect(self):
        return Point2(self.x, -self.y)


@dataclass(frozen=True)
class ControlPolygon:
    degree: int
    points: tuple

    def __post_init__(self):
        if len(self.points) != self.degree + 1:
            raise ValueError(f"degree {self.degree} needs {self.degree + 1} points, got {len(self.points)}")

    def as_float_array(self):
        return np.array([[float(p.x), float(p.y)] for p in self.points])


@dataclass
class InterpolantSolution:
    degree: int
    arc: ArcSpec
    params: dict
    polygon: ControlPolygon
    psi: Poly
    simplified_error: float
    radial_error: float
    amplitude_mu: float
    intermediates: object = None


def degree_of(params):
    for n, names in PARAM_NAMES.items():
        if all(k in params for k in names):
            return n
    raise ValueError(f"cannot infer a degree from parameters {sorted(params)}")


def build_polygon(arc, params):
    n = degree_of(params)
    b0, bn = Point2(arc.c, -arc.s), Point2(arc.c, arc.s)
    if n == 2:
        inner = [Point2(params["d"], 0 * arc.c)]
    elif n == 3:
        b1 = Point2(params["xi"], -params["eta"])
        inner = [b1, b1.reflect()]
    else:
        b1 = Point2(params["alpha"], -params["beta"])
        inner = [b1, Point2(params["gamma"], 0 * arc.c), b1.reflect()]
    return ControlPolygon(n, tuple([b0, *inner, bn]))


def _de_casteljau(coords, u):
    pts = list(coords)
    while len(pts) > 1:
        pts = [(1 - u) * a + u * b for a, b in zip(pts, pts[1:])]
    return pts[0]


def bezier_point(poly, t):
    """Curve point at parameter t in [-1, 1] (arrays of t are accepted)."""
    if np.any(np.asarray(t, dtype=float) < -1) or np.any(np.asarray(t, dtype=float) > 1):
        raise ValueError("parameter must lie in [-1, 1]")
    u = (1 + t) / 2
    x = _de_casteljau([p.x for p in poly.points], u)
    y = _de_casteljau([p.y for p in poly.points], u)
    return Point2(x, y)


@lru_cache(maxsize=None)
def bernstein_basis(n):
    """B_j^n over [-1, 1] as monomial-basis polynomials (exact dyadic coefficients)."""
    up, down = Poly([0.5, 0.5]), Poly([0.5, -0.5])
    return tuple(comb(n, j) * up**j * down ** (n - j) for j in range(n + 1))


def coordinate_polys(poly):
    basis = bernstein_basis(poly.degree)
    # lift to working precision before touching the float basis coefficients
    x = sum((b * MP.mpf(p.x) for b, p in zip(basis, poly.points)), Poly())
    y = sum((b * MP.mpf(p.y) for b, p in zip(basis, poly.points)), Poly())
    return x, y


def simplified_error_poly(poly):
    """psi(t) = x(t)^2 + y(t)^2 - 1 expanded in the monomial basis."""
    x, y = coordinate_polys(poly)
    return x * x + y * y - 1


def _signed_radial(xs, ys, t):
    u = (1 + t) / 2
    return np.hypot(_de_casteljau(xs, u), _de_casteljau(ys, u)) - 1


def signed_radial_curve(poly, ts):
    """||p(t)|| - 1 straight from de Casteljau points, in float64."""
    pts = poly.as_float_array()
    return _signed_radial(pts[:, 0], pts[:, 1], np.asarray(ts, dtype=float))


def radial_from_psi(v):
    """||p|| - 1 = psi / (||p|| + 1); no cancellation when psi is tiny."""
    if is_mp(v):
        return v / (MP.sqrt(1 + v) + 1)
    return v / (np.sqrt(1 + v) + 1)


def radial_error(poly, samples=RADIAL_SAMPLES):
    """max_t | ||p(t)|| - 1 |.

    Every local peak of the sampled deviation is refined by a bounded scalar
    search, then re-evaluated in working precision.  Peaks differ only at
    second order in the ripple, so refining just the sampled argmax could
    settle on the wrong one.
    """
    if samples < 64:
        raise ValueError("radial_error needs at least 64 samples")
    psi = simplified_error_poly(poly)
    fpsi = psi.to_float()
    ts = np.linspace(-1.0, 1.0, samples + 1)
    dev = np.abs(radial_from_psi(fpsi(ts)))
    padded = np.concatenate([[-np.inf], dev, [-np.inf]])
    peaks = np.flatnonzero((padded[1:-1] >= padded[:-2]) & (padded[1:-1] >= padded[2:]))
    best = 0
    for k in peaks:
        lo, hi = ts[max(k - 1, 0)], ts[min(k + 1, samples)]
        res = minimize_scalar(
            lambda t: -abs(radial_from_psi(fpsi(t))),
            bounds=(lo, hi),
            method="bounded",
            options={"xatol": 1e-12},
        )
        for t in (ts[k], res.x):
            best = max(best, abs(radial_from_psi(psi(MP.mpf(t)))))
    return float(best)
