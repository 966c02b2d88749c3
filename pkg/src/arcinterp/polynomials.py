"""Dense univariate polynomials in the monomial basis.

Coefficients may be floats or extended-precision ``mpf`` values; every
operation is written against plain ``+``/``*`` so both work.  Root
isolation scans a grid in float64 (vectorised) and then refines each
bracket by bisection in the arithmetic of the interval end points.
"""

from dataclasses import dataclass

import numpy as np

ROOT_TOL = 1e-14
MAX_BISECT = 200
CRITICAL_GRID = 4096


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, value):
        return cls([value])

    @classmethod
    def monomial(cls, power, scale=1):
        return cls([0] * power + [scale])

    @property
    def degree(self):
        # zero polynomial gets -1
        return len(self.coeffs) - 1

    def __call__(self, t):
        # Horner; t may be a scalar of any numeric type or a numpy array
        if not self.coeffs:
            return t * 0
        acc = self.coeffs[-1]
        for a in reversed(self.coeffs[:-1]):
            acc = acc * t + a
        return acc

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def _coerce(self, other):
        return other if isinstance(other, Poly) else Poly([other])

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self), len(other))
        return Poly([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly([a * other for a in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return Poly([a / scalar for a in self.coeffs])

    def __pow__(self, k):
        out = Poly([1])
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def deriv(self):
        return Poly([k * a for k, a in enumerate(self.coeffs)][1:])

    def to_float(self):
        return Poly([float(a) for a in self.coeffs])

    def compose_linear(self, scale, shift=0):
        """p(scale * t + shift)."""
        lin = Poly([shift, scale])
        out = Poly()
        for a in reversed(self.coeffs):
            out = out * lin + a
        return out


def poly_arith(a, b, op):
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_derivative(p):
    return p.deriv()


@dataclass(frozen=True)
class BracketedRoot:
    lo: object
    hi: object
    root: object
    residual: object


def bisect(func, lo, hi, tol=ROOT_TOL, max_iter=MAX_BISECT):
    """Plain bisection on a sign-changing bracket.

    ``func(lo)`` and ``func(hi)`` must not share a strict sign.  Stops when the
    bracket is narrower than ``tol``, after ``max_iter`` halvings, or when the
    midpoint no longer separates the endpoints (working precision exhausted);
    ``tol=0`` therefore means "refine to full precision".
    """
    f_lo, f_hi = func(lo), func(hi)
    if f_lo == 0:
        return BracketedRoot(lo, lo, lo, f_lo)
    if f_hi == 0:
        return BracketedRoot(hi, hi, hi, f_hi)
    if (f_lo > 0) == (f_hi > 0):
        raise ValueError(f"no sign change on [{lo}, {hi}]")
    a, b = lo, hi
    neg_at_a = f_lo < 0
    for _ in range(max_iter):
        if b - a <= tol:
            break
        mid = (a + b) / 2
        if mid == a or mid == b:
            break
        f_mid = func(mid)
        if f_mid == 0:
            a = b = mid
            break
        if (f_mid < 0) == neg_at_a:
            a = mid
        else:
            b = mid
    root = (a + b) / 2
    return BracketedRoot(lo, hi, root, func(root))


def isolate_roots(p, lo, hi, grid=CRITICAL_GRID, tol=ROOT_TOL, max_iter=MAX_BISECT):
    """Real roots of ``p`` in [lo, hi] that produce a sign change on the grid.

    Even-multiplicity roots, and pairs of roots closer than one grid cell,
    are invisible to the scan and are not reported.  Bisection runs in the
    arithmetic of ``lo``/``hi``; pass ``mpf`` endpoints for extended precision.
    """
    if not lo < hi:
        raise ValueError("isolate_roots needs lo < hi")
    if grid < 2:
        raise ValueError("grid must be at least 2")
    if p.degree < 1:
        return []
    step = (hi - lo) / grid

    def node(k):
        return hi if k == grid else lo + k * step

    ts = np.linspace(float(lo), float(hi), grid + 1)
    positive = p.to_float()(ts) >= 0
    changes = np.flatnonzero(positive[:-1] != positive[1:])
    roots = []
    for k in changes:
        bracket = _native_bracket(p, node, int(k), grid)
        if bracket is None:
            continue
        r = bisect(p, node(bracket[0]), node(bracket[1]), tol, max_iter)
        # widened brackets may overlap and re-find the previous root
        if roots and r.lo < roots[-1].hi and abs(r.root - roots[-1].root) <= max(tol, abs(step) * 1e-9):
            continue
        roots.append(r)
    return roots


def _native_bracket(p, node, k, grid):
    """Confirm a float-detected sign change in the coefficients' precision.

    Float rounding can misplace a sign change by one cell when the root sits
    next to a grid node, so the bracket is widened by a cell on either side
    before giving up.
    """
    for a, b in ((k, k + 1), (max(k - 1, 0), k + 1), (k, min(k + 2, grid))):
        fa, fb = p(node(a)), p(node(b))
        if fa == 0 or fb == 0 or (fa > 0) != (fb > 0):
            return a, b
    return None


def max_abs_on_interval(p, lo, hi, grid=CRITICAL_GRID):
    """(t_star, |p(t_star)|) maximising |p| over [lo, hi]."""
    if not lo < hi:
        raise ValueError("max_abs_on_interval needs lo < hi")
    candidates = [lo, hi]
    candidates += [r.root for r in isolate_roots(p.deriv(), lo, hi, grid)]
    best_t = max(candidates, key=lambda t: abs(p(t)))
    return best_t, abs(p(best_t))
