"""Optimal G0 interpolants of degree 2, 3 and 4.

Each solver pins the simplified error to zero at the scaled Chebyshev
zeros, which leaves a single scalar equation:

* degree 2 has a closed form for the middle control point,
* degree 3 reduces to a cubic in ``xi`` with a known bracket,
* degree 4 reduces to a degree-8 polynomial ``f`` in the auxiliary
  unknown ``x = 4 alpha - 3 gamma - c``; the optimum comes from the unique
  zero of ``f`` in ``[-(1 - c)^2, 0]`` and the other unknowns follow
  linearly.

All arithmetic runs in the package's extended-precision context.
"""

from dataclasses import dataclass

from .chebyshev import alternation_data
from .geometry import InterpolantSolution, build_polygon, degree_of, radial_error, simplified_error_poly
from .numeric import MP
from .polynomials import MAX_BISECT, Poly, isolate_roots, max_abs_on_interval

CENSUS_GRID = 65536


class BracketError(RuntimeError):
    """The bracketing sign pattern failed; points at a coefficient bug."""


class SingularRecoveryError(ArithmeticError):
    pass


@dataclass(frozen=True)
class QuarticIntermediates:
    x: object
    y: object
    f_residual: object
    bracket: tuple


@dataclass(frozen=True)
class QuarticRoot:
    x: float
    amplitude: float
    optimal: bool = False


def _increasing_root(func, lo, hi, what):
    """Bisect to full working precision keeping func(a) <= 0 < func(b)."""
    f_lo, f_hi = func(lo), func(hi)
    if not (f_lo <= 0 < f_hi):
        raise BracketError(f"{what}: expected f(lo) <= 0 < f(hi), got {float(f_lo):.3e}, {float(f_hi):.3e}")
    a, b = lo, hi
    for _ in range(MAX_BISECT):
        mid = (a + b) / 2
        if mid == a or mid == b:
            break
        if func(mid) <= 0:
            a = mid
        else:
            b = mid
    return (a + b) / 2


def assemble_solution(arc, params, intermediates=None):
    """Polygon, error polynomial and both error measures for given parameters."""
    n = degree_of(params)
    polygon = build_polygon(arc, params)
    psi = simplified_error_poly(polygon)
    _, simplified = max_abs_on_interval(psi, -1, 1)
    return InterpolantSolution(
        degree=n,
        arc=arc,
        params=dict(params),
        polygon=polygon,
        psi=psi,
        simplified_error=float(simplified),
        radial_error=radial_error(polygon),
        # T_2n(0) = (-1)^n
        amplitude_mu=float(psi(0) * (-1) ** n),
        intermediates=intermediates,
    )


# --- degree 2 -------------------------------------------------------------


def parabolic_d(c):
    r2 = MP.sqrt(2)
    return (1 + r2) * (MP.sqrt(2 * (r2 - 1) + (3 - 2 * r2) * c * c) - (2 - r2) * c)


def solve_parabolic(arc):
    return assemble_solution(arc, {"d": parabolic_d(arc.c)})


# --- degree 3 -------------------------------------------------------------


def cubic_objective(xi, c):
    r3 = MP.sqrt(3)
    return (
        243 * xi**3
        - 27 * c * (11 - 16 * r3) * xi**2
        - 3 * (32 * (1 + 2 * r3) - 3 * (81 - 32 * r3) * c**2) * xi
        - 32 * (13 + 2 * r3) * c
        - (163 - 112 * r3) * c**3
    )


def cubic_eta(xi, c, s):
    r3 = MP.sqrt(3)
    return ((2 + r3) / 8 * (3 * xi + c) ** 2 - xi * c - 3 - 2 * r3) / s


def solve_cubic(arc):
    c, s = arc.c, arc.s
    # xi = c is also a zero; it collapses the curve to a line segment
    xi = _increasing_root(lambda v: cubic_objective(v, c), c, (4 + c) / 3, "cubic")
    return assemble_solution(arc, {"xi": xi, "eta": cubic_eta(xi, c, s)})


# --- degree 4 -------------------------------------------------------------


def _quartic_constants():
    data = alternation_data(4)
    return data.sigma, data.zeros_sq_product


def _quartic_parts(x, c):
    (s1, s2, s3), _ = _quartic_constants()
    s_sq = 1 - c * c
    inner = (s3 * x * x / 64 + c * x / 4 - s_sq) ** 2
    numer = inner - (1 - s2 + 2 * s3) * c * c * x * x / 16 + (2 - s1) * x * x / 16 - c * (x - 8 * c)
    denom = x / 32 - c / 8 - c**3 / 8 + s3 * c * x * x / 512
    return numer, denom


def quartic_objective(x, c):
    _, prod = _quartic_constants()
    numer, denom = _quartic_parts(x, c)
    return numer**2 / 16 - (64 + prod * x * x) * denom**2


def quartic_objective_poly(c):
    """The quartic objective as a degree-8 polynomial in x."""
    return quartic_objective(Poly([0, 1]), c)


def recover_y(x, c, s):
    (_, _, s3), _ = _quartic_constants()
    numer, _ = _quartic_parts(x, c)
    a = -x / 32 + c / 8 + c**3 / 8 - s3 * c * x * x / 512
    if abs(a) < 1e-14:
        raise SingularRecoveryError(f"y-recovery coefficient vanishes at x={float(x)!r}")
    return numer / 4 / a


def recover_beta(x, y, c, s):
    if s <= 0:
        raise ValueError("beta recovery needs sin(phi) > 0")
    (_, _, s3), _ = _quartic_constants()
    return (1 - s3 * x * x / 128 - c * (x + y) / 8) / s


def quartic_params_from_root(arc, x):
    """(alpha, beta, gamma) induced by a real zero of the quartic objective."""
    c, s = arc.c, arc.s
    y = recover_y(x, c, s)
    return {
        "alpha": (x + y) / 8,
        "beta": recover_beta(x, y, c, s),
        "gamma": (y - x - 2 * c) / 6,
        "x": x,
        "y": y,
    }


def quartic_bracket(c):
    return -((1 - c) ** 2), 0 * c


def solve_quartic(arc):
    c = arc.c
    lo, hi = quartic_bracket(c)
    x = _increasing_root(lambda v: quartic_objective(v, c), lo, hi, "quartic")
    params = quartic_params_from_root(arc, x)
    inter = QuarticIntermediates(x=x, y=params["y"], f_residual=quartic_objective(x, c), bracket=(lo, hi))
    return assemble_solution(arc, params, inter)


def quartic_amplitude(x):
    _, prod = _quartic_constants()
    return prod * x * x / 64


def root_bound(p):
    """Fujiwara bound on the modulus of every complex root of p."""
    a = [float(v) for v in p.coeffs]
    n = len(a) - 1
    terms = [abs(a[n - k] / a[n]) ** (1.0 / k) for k in range(1, n)]
    terms.append(abs(a[0] / (2 * a[n])) ** (1.0 / n))
    return 2 * max(terms)


def quartic_all_real_roots(arc, grid=CENSUS_GRID):
    """Every real zero of the quartic objective with the amplitude it induces.

    Larger |x| means a larger ripple; the zero flagged ``optimal`` is the
    one inside the bracket ``[-(1 - c)^2, 0]``.
    """
    f = quartic_objective_poly(arc.c)
    bound = root_bound(f) * 1.0001
    lo, hi = quartic_bracket(arc.c)
    out = []
    for r in isolate_roots(f, MP.mpf(-bound), MP.mpf(bound), grid):
        out.append(QuarticRoot(x=float(r.root), amplitude=float(quartic_amplitude(r.root)), optimal=bool(lo <= r.root <= hi)))
    return out


SOLVERS = {2: solve_parabolic, 3: solve_cubic, 4: solve_quartic}


def solve(arc, degree):
    try:
        return SOLVERS[degree](arc)
    except KeyError:
        raise ValueError(f"degree must be one of {sorted(SOLVERS)}, got {degree}") from None
