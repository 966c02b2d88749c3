"""Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 bad input, 3 I/O error.
"""

import argparse
import json
import os
import re
import sys

from .geometry import ArcSpec
from .numeric import MP
from .output import curve_csv, curve_svg, error_curve, solution_text, solution_to_dict
from .solvers import assemble_solution, quartic_all_real_roots, solve
from .verification import ProbeConfig, brute_force_minimax, check_equioscillation, format_table, reproduce_table

EXIT_OK, EXIT_VERIFY_FAILED, EXIT_BAD_INPUT, EXIT_IO = 0, 1, 2, 3

_PI_FRACTION = re.compile(r"^(?:(\d+)\s*\*\s*)?pi\s*/\s*(\d+)$")


def parse_phi(text):
    """Half-angle from ``pi/k``, ``m*pi/k`` or a decimal radian literal."""
    text = text.strip().lower()
    m = _PI_FRACTION.match(text)
    if m:
        num, den = int(m.group(1) or 1), int(m.group(2))
        if den == 0:
            raise ValueError("zero denominator")
        return num * MP.pi / den
    try:
        value = float(text)
    except ValueError:
        raise ValueError(f"cannot parse angle {text!r}; use pi/k, m*pi/k or radians") from None
    return MP.mpf(value)


def _arc_arg(text):
    try:
        return ArcSpec(parse_phi(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _samples_arg(text):
    n = int(text)
    if n < 64:
        raise argparse.ArgumentTypeError("samples must be at least 64")
    return n


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # one-line diagnostic, no usage dump
        self.exit(EXIT_BAD_INPUT, f"{self.prog}: error: {message}\n")


def build_parser():
    parser = _Parser(prog="arcinterp", description="Optimal G0 polynomial interpolants of circular arcs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def degree(p):
        p.add_argument("--degree", type=int, choices=(2, 3, 4), required=True)

    def phi(p):
        p.add_argument("--phi", type=_arc_arg, required=True, help="half-angle: pi/k, m*pi/k or radians")

    p = sub.add_parser("interpolate", help="solve for the optimal interpolant")
    degree(p)
    phi(p)
    p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("table", help="print the six-row table for a degree")
    degree(p)

    p = sub.add_parser("error-curve", help="write the error curve as CSV or SVG")
    degree(p)
    phi(p)
    p.add_argument("--samples", type=_samples_arg, default=512)
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("csv", "svg"), default="csv")

    p = sub.add_parser("verify", help="equioscillation and brute-force optimality checks")
    degree(p)
    phi(p)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--step", type=float, default=1e-3)
    p.add_argument("--seed", type=int, default=None, help="RNG seed (default: $SEED or 0)")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--force-degenerate", action="store_true", help=argparse.SUPPRESS)

    p = sub.add_parser("roots", help="all real zeros of the quartic objective")
    phi(p)
    p.add_argument("--format", choices=("json", "text"), default="text")
    return parser


def cmd_interpolate(args):
    sol = solve(args.phi, args.degree)
    if args.format == "json":
        print(json.dumps(solution_to_dict(sol), indent=2))
    else:
        print(solution_text(sol))
    return EXIT_OK


def cmd_table(args):
    print(format_table(args.degree, reproduce_table(args.degree)))
    return EXIT_OK


def cmd_error_curve(args):
    sol = solve(args.phi, args.degree)
    rows = error_curve(sol, args.samples)
    payload = curve_csv(rows) if args.format == "csv" else curve_svg(sol, rows)
    try:
        with open(args.out, "w", newline="") as fh:
            fh.write(payload)
    except OSError as exc:
        print(f"arcinterp: error: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _resolve_seed(seed):
    if seed is not None:
        return seed
    env = os.environ.get("SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise ValueError(f"SEED must be an integer, got {env!r}") from None


def cmd_verify(args):
    arc, n = args.phi, args.degree
    try:
        seed = _resolve_seed(args.seed)
    except ValueError as exc:
        print(f"arcinterp: error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    diagnostics = []
    if args.force_degenerate:
        if n != 3:
            print("arcinterp: error: --force-degenerate applies to degree 3 only", file=sys.stderr)
            return EXIT_BAD_INPUT
        sol = assemble_solution(arc, {"xi": arc.c, "eta": arc.s / 3})
        diagnostics.append("xi = cos(phi): x(t) is constant, the interpolant is a line segment")
    else:
        sol = solve(arc, n)
    eq = check_equioscillation(sol, tol=1e-7, zero_tol=1e-9)
    probe = brute_force_minimax(
        arc, n, sol.params, ProbeConfig(trials=args.trials, step=args.step, seed=seed), reference=sol.simplified_error
    )
    if not eq.passed:
        diagnostics.append(
            f"equioscillation failed: {eq.count} extrema (expected {eq.expected_count}), "
            f"alternating={eq.alternates}, spread={eq.magnitude_spread:.3e}"
        )
    if not probe.verdict:
        diagnostics.append(f"local search beat the solver: {probe.best_found:.6e} < {probe.reference:.6e}")
    ok = eq.passed and probe.verdict
    if args.format == "json":
        report = {
            "solution": solution_to_dict(sol),
            "equioscillation": {
                "count": eq.count,
                "expected_count": eq.expected_count,
                "alternates": eq.alternates,
                "magnitude_spread": eq.magnitude_spread,
                "zero_residuals": eq.zero_residuals,
                "extrema": eq.extrema,
                "passed": eq.passed,
            },
            "probe": {
                "trials": probe.trials,
                "step": probe.step,
                "seed": probe.seed,
                "best_found": probe.best_found,
                "reference": probe.reference,
                "verdict": probe.verdict,
            },
            "diagnostics": diagnostics,
            "passed": ok,
        }
        print(json.dumps(report, indent=2))
    else:
        print(f"degree {n}, phi = {float(arc.phi)!r}")
        print(
            f"  equioscillation: {'PASS' if eq.passed else 'FAIL'} "
            f"({eq.count}/{eq.expected_count} extrema, spread {eq.magnitude_spread:.2e}, "
            f"max zero residual {max(eq.zero_residuals):.2e})"
        )
        print(
            f"  optimality probe: {'PASS' if probe.verdict else 'FAIL'} "
            f"({probe.trials} starts, seed {probe.seed}, best {probe.best_found:.6e} vs {probe.reference:.6e})"
        )
        for line in diagnostics:
            print(f"  ! {line}")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def cmd_roots(args):
    roots = quartic_all_real_roots(args.phi)
    if args.format == "json":
        payload = {
            "phi": float(args.phi.phi),
            "roots": [{"x": r.x, "amplitude": r.amplitude, "optimal": r.optimal} for r in roots],
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"{len(roots)} real zeros of the quartic objective, phi = {float(args.phi.phi)!r}")
        for r in roots:
            mark = "  <- optimal" if r.optimal else ""
            print(f"  x = {r.x: .10f}   amplitude = {r.amplitude:.6e}{mark}")
    return EXIT_OK


COMMANDS = {
    "interpolate": cmd_interpolate,
    "table": cmd_table,
    "error-curve": cmd_error_curve,
    "verify": cmd_verify,
    "roots": cmd_roots,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
