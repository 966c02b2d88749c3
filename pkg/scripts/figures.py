"""Write error-curve SVGs and CSVs for every degree at a few angles."""

import argparse
from pathlib import Path

from arcinterp.cli import main as cli

ANGLES = {"pi2": "pi/2", "pi4": "pi/4", "pi12": "pi/12"}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="figures")
    parser.add_argument("--samples", type=int, default=1024)
    args = parser.parse_args()
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for n in (2, 3, 4):
        for tag, phi in ANGLES.items():
            for fmt in ("svg", "csv"):
                path = out / f"error_n{n}_{tag}.{fmt}"
                code = cli(["error-curve", "--degree", str(n), "--phi", phi,
                            "--samples", str(args.samples), "--out", str(path), "--format", fmt])
                if code:
                    raise SystemExit(code)
                print(path)


if __name__ == "__main__":
    main()
