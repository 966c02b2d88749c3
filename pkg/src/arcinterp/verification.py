"""Independent checks on solver output.

``check_equioscillation`` inspects the error polynomial a solver produced.
``brute_force_minimax`` does not trust it at all: it rebuilds the error
function from raw control-point coordinates in float64 with numpy and runs
multi-start Nelder-Mead on the free parameters, looking for anything that
beats the solver.
"""

from dataclasses import dataclass, field
from math import comb

import numpy as np
from numpy.polynomial import polynomial as npoly
from scipy.optimize import minimize

from .chebyshev import alternation_data
from .geometry import PARAM_NAMES, ArcSpec
from .numeric import MP
from .polynomials import isolate_roots
from .solvers import quartic_all_real_roots, solve

# (label, numerator, denominator) of phi = m*pi/k, in the printed row order
TABLE_ANGLES = (
    ("pi/2", 1, 2),
    ("pi/3", 1, 3),
    ("pi/4", 1, 4),
    ("pi/6", 1, 6),
    ("pi/8", 1, 8),
    ("pi/12", 1, 12),
)


def table_arc(m, k):
    return ArcSpec(m * MP.pi / k)


@dataclass
class EquioscillationReport:
    extrema: list
    count: int
    expected_count: int
    alternates: bool
    magnitude_spread: float
    zero_residuals: list
    amplitude: float
    passed: bool


def check_equioscillation(solution, tol=1e-7, zero_tol=None):
    """Interior extrema of psi: 2n-1 of them, alternating, of equal height.

    ``tol`` bounds the relative spread of the extremal magnitudes and
    ``zero_tol`` (default ``tol``) the residual |psi| at the scaled Chebyshev
    zeros, relative to the amplitude.
    """
    zero_tol = tol if zero_tol is None else zero_tol
    psi = solution.psi
    n = solution.degree
    crit = [r.root for r in isolate_roots(psi.deriv(), -1, 1) if -1 < r.root < 1]
    values = [psi(t) for t in crit]
    extrema = [(float(t), float(v)) for t, v in zip(crit, values)]
    alternates = len(values) > 0 and all((a > 0) != (b > 0) for a, b in zip(values, values[1:]))
    mags = [abs(v) for v in values]
    if mags:
        mean = sum(mags) / len(mags)
        amplitude = float(mean)
        spread = float(max(abs(m - mean) for m in mags) / mean) if mean else float("inf")
    else:
        amplitude, spread = 0.0, float("inf")
    zeros = alternation_data(n).zeros_pos
    residuals = []
    for z in zeros:
        r = max(abs(psi(z)), abs(psi(-z)))
        residuals.append(float(r / amplitude) if amplitude else float("inf"))
    expected = 2 * n - 1
    passed = (
        len(crit) == expected
        and alternates
        and spread <= tol
        and all(r <= zero_tol for r in residuals)
    )
    return EquioscillationReport(
        extrema=extrema,
        count=len(crit),
        expected_count=expected,
        alternates=alternates,
        magnitude_spread=spread,
        zero_residuals=residuals,
        amplitude=amplitude,
        passed=passed,
    )


# --- brute-force oracle ---------------------------------------------------


def _bernstein_matrix(n):
    # column j holds the monomial coefficients of B_j^n over [-1, 1]
    m = np.zeros((n + 1, n + 1))
    for j in range(n + 1):
        b = comb(n, j) * npoly.polymul(npoly.polypow([0.5, 0.5], j), npoly.polypow([0.5, -0.5], n - j))
        m[: len(b), j] = b
    return m


def _oracle_points(degree, c, s, free):
    if degree == 2:
        (d,) = free
        return [c, d, c], [-s, 0.0, s]
    if degree == 3:
        xi, eta = free
        return [c, xi, xi, c], [-s, -eta, eta, s]
    alpha, beta, gamma = free
    return [c, alpha, gamma, alpha, c], [-s, -beta, 0.0, beta, s]


class MaxErrorOracle:
    """max_t |x(t)^2 + y(t)^2 - 1| from raw parameters, in float64.

    Uniform samples locate every local maximum of |psi|; each is then
    polished by Newton steps on psi' so the result is not biased low by
    the sampling.
    """

    newton_steps = 3

    def __init__(self, arc, degree, samples=2048):
        self.degree = degree
        self.c, self.s = float(arc.c), float(arc.s)
        self.basis = _bernstein_matrix(degree)
        self.ts = np.linspace(-1.0, 1.0, samples + 1)
        self.vander = np.vander(self.ts, 2 * degree + 1, increasing=True)

    def psi_coeffs(self, free):
        xs, ys = _oracle_points(self.degree, self.c, self.s, free)
        x = self.basis @ np.asarray(xs, dtype=float)
        y = self.basis @ np.asarray(ys, dtype=float)
        psi = np.convolve(x, x) + np.convolve(y, y)
        psi[0] -= 1.0
        return psi

    def __call__(self, free):
        coeffs = self.psi_coeffs(free)
        mags = np.abs(self.vander @ coeffs)
        peak = np.flatnonzero((mags[1:-1] >= mags[:-2]) & (mags[1:-1] >= mags[2:])) + 1
        if peak.size == 0:
            return float(mags.max())
        lo, hi = self.ts[peak - 1], self.ts[peak + 1]
        t = self.ts[peak]
        powers = np.arange(coeffs.size)
        d1 = coeffs[1:] * powers[1:]
        d2 = d1[1:] * powers[1:-1]
        for _ in range(self.newton_steps):
            tp = t[:, None] ** powers
            slope, curv = tp[:, :-1] @ d1, tp[:, :-2] @ d2
            t = np.clip(t - slope / np.where(curv == 0, np.inf, curv), lo, hi)
        return float(max(mags.max(), np.abs((t[:, None] ** powers) @ coeffs).max()))


@dataclass(frozen=True)
class ProbeConfig:
    trials: int = 100
    step: float = 1e-3
    seed: int = 0
    samples: int = 2048
    maxfev_per_dim: int = 200
    xatol: float = 1e-10
    fatol: float = 1e-15
    slack: float = 1e-12


@dataclass
class OptimalityProbe:
    trials: int
    step: float
    best_found: float
    reference: float
    verdict: bool
    seed: int
    best_params: list = field(default_factory=list)


def free_params(degree, params):
    return [float(params[k]) for k in PARAM_NAMES[degree]]


def brute_force_minimax(arc, degree, seed_params, config=ProbeConfig(), reference=None):
    """Multi-start local search for parameters beating ``reference``.

    ``reference`` defaults to the oracle's error at ``seed_params``.  The
    search is local: it witnesses optimality near the seed, nothing more.
    """
    oracle = MaxErrorOracle(arc, degree, config.samples)
    x0 = np.array(free_params(degree, seed_params))
    if reference is None:
        reference = oracle(x0)
    rng = np.random.default_rng(config.seed)
    starts = [x0] + [x0 * (1 + rng.uniform(-config.step, config.step, x0.size)) for _ in range(config.trials)]
    best, best_x = oracle(x0), x0
    opts = {"xatol": config.xatol, "fatol": config.fatol, "maxfev": config.maxfev_per_dim * x0.size}
    for start in starts:
        res = minimize(oracle, start, method="Nelder-Mead", options=opts)
        if res.fun < best:
            best, best_x = float(res.fun), res.x
    return OptimalityProbe(
        trials=config.trials,
        step=config.step,
        best_found=float(best),
        reference=float(reference),
        verdict=bool(best >= reference - config.slack),
        seed=config.seed,
        best_params=[float(v) for v in best_x],
    )


# --- tables and root census -----------------------------------------------


@dataclass(frozen=True)
class TableRow:
    label: str
    phi: float
    params: tuple
    error: float


def reproduce_table(degree):
    rows = []
    for label, m, k in TABLE_ANGLES:
        sol = solve(table_arc(m, k), degree)
        values = tuple(float(sol.params[name]) for name in PARAM_NAMES[degree])
        rows.append(TableRow(label, float(sol.arc.phi), values, sol.simplified_error))
    return rows


def format_table(degree, rows):
    header = ["phi", *PARAM_NAMES[degree], "simplified error"]
    lines = ["  ".join(f"{h:>10}" for h in header)]
    for row in rows:
        cells = [row.label, *(f"{v:.5f}" for v in row.params), f"{row.error:.5e}"]
        lines.append("  ".join(f"{cell:>10}" for cell in cells))
    return "\n".join(lines)


def count_real_roots(phi):
    return len(quartic_all_real_roots(ArcSpec(phi)))


def root_census(phi_lo, phi_hi, grid):
    lo_bound, hi_bound = float(MP.pi / 12), float(MP.pi / 2)
    if not (lo_bound - 1e-12 <= phi_lo < phi_hi <= hi_bound + 1e-12):
        raise ValueError("census range must satisfy pi/12 <= phi_lo < phi_hi <= pi/2")
    if grid < 2:
        raise ValueError("census grid needs at least two angles")
    return [(float(phi), count_real_roots(phi)) for phi in np.linspace(phi_lo, phi_hi, grid)]


def locate_root_threshold(phi_lo=0.5, phi_hi=1.5, tol=1e-6):
    """Angle where the real-root count of the quartic objective drops from 6 to 4."""
    if count_real_roots(phi_lo) < 6 or count_real_roots(phi_hi) >= 6:
        raise ValueError("threshold is not bracketed by the given angles")
    a, b = phi_lo, phi_hi
    while b - a > tol:
        mid = (a + b) / 2
        if count_real_roots(mid) >= 6:
            a = mid
        else:
            b = mid
    return (a + b) / 2
