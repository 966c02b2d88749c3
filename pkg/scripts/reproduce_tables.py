"""Print the three tables of optimal interpolants (degrees 2, 3, 4)."""

import argparse

from arcinterp.verification import format_table, reproduce_table


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--degree", type=int, choices=(2, 3, 4), action="append")
    args = parser.parse_args()
    for n in args.degree or (2, 3, 4):
        print(f"degree {n}")
        print(format_table(n, reproduce_table(n)))
        print()


if __name__ == "__main__":
    main()
