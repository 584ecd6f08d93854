#!/usr/bin/env python3
"""Textual summary of a CSV produced by `dilaton sweep`.

Prints the range of every column, the largest side asymmetry of the classical
correlation, and whether the difference cc_A - cc_B ever changes sign above
numerical noise (the same criterion `dilaton find-crossing` uses).
"""

import argparse
import csv
import sys

NOISE = 1e-12  # differences below this carry no sign information


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("csv_path", help="CSV written by `dilaton sweep`")
    args = parser.parse_args()

    with open(args.csv_path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    if not rows:
        sys.exit("error: the sweep file has no data rows")

    print(f"{len(rows)} rows, alpha in [{rows[0]['alpha']}, {rows[-1]['alpha']}]")
    print(f"{'column':>14} {'first':>13} {'last':>13} {'min':>13} {'max':>13}")
    for col in rows[0]:
        if col == "alpha":
            continue
        values = [float(r[col]) for r in rows]
        print(
            f"{col:>14} {values[0]:>13.6g} {values[-1]:>13.6g}"
            f" {min(values):>13.6g} {max(values):>13.6g}"
        )

    gap, at_alpha = max(
        (abs(float(r["cc_A"]) - float(r["cc_B"])), float(r["alpha"])) for r in rows
    )
    print(f"\nlargest |cc_A - cc_B| = {gap:.6g} at alpha = {at_alpha:.6g}")

    confident = [
        d
        for d in (float(r["cc_A"]) - float(r["cc_B"]) for r in rows)
        if abs(d) > NOISE
    ]
    flips = sum(1 for x, y in zip(confident, confident[1:]) if (x < 0) != (y < 0))
    print(f"sign changes of cc_A - cc_B above noise: {flips}")


if __name__ == "__main__":
    main()
