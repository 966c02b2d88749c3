"""Optimal G0 polynomial interpolants of circular arcs (degrees 2 to 4)."""

from .chebyshev import AlternationData, alternation_data, chebyshev_eval
from .geometry import ArcSpec, ControlPolygon, InterpolantSolution, Point2, bezier_point, build_polygon, radial_error, simplified_error_poly
from .polynomials import BracketedRoot, Poly, isolate_roots, max_abs_on_interval
from .solvers import (
    QuarticIntermediates,
    QuarticRoot,
    quartic_all_real_roots,
    solve,
    solve_cubic,
    solve_parabolic,
    solve_quartic,
)
from .verification import brute_force_minimax, check_equioscillation, reproduce_table, root_census

__all__ = [
    "AlternationData",
    "ArcSpec",
    "BracketedRoot",
    "ControlPolygon",
    "InterpolantSolution",
    "Point2",
    "Poly",
    "QuarticIntermediates",
    "QuarticRoot",
    "alternation_data",
    "bezier_point",
    "brute_force_minimax",
    "build_polygon",
    "check_equioscillation",
    "chebyshev_eval",
    "isolate_roots",
    "max_abs_on_interval",
    "quartic_all_real_roots",
    "radial_error",
    "reproduce_table",
    "root_census",
    "simplified_error_poly",
    "solve",
    "solve_cubic",
    "solve_parabolic",
    "solve_quartic",
]
