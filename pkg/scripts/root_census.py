"""Real-root counts of the quartic objective across half-angles, plus the 6 -> 4 threshold."""

import argparse
import math

from arcinterp.verification import locate_root_threshold, root_census


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--grid", type=int, default=25)
    parser.add_argument("--tol", type=float, default=1e-6)
    args = parser.parse_args()
    for phi, count in root_census(math.pi / 12, math.pi / 2, args.grid):
        print(f"{phi:.6f}  {count}")
    print(f"threshold: {locate_root_threshold(tol=args.tol):.6f}")


if __name__ == "__main__":
    main()
