"""CSV of the equilibrium density over a family of z0 values, plus normalizations.

    python scripts/equilibrium_measure.py --nu 3 --grid 200 > density.csv
"""

import argparse
import csv
import sys
from fractions import Fraction

import mpmath

from genus_engine.numerics import density_normalization, equilibrium_density

Z0_VALUES = (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--nu", type=int, default=3)
    ap.add_argument("--grid", type=int, default=200)
    a = ap.parse_args()

    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["eta"] + [f"z0={z}" for z in Z0_VALUES])
    for k in range(a.grid):
        eta = Fraction(2 * k + 1, a.grid) - 1
        w.writerow([float(eta)] + [mpmath.nstr(equilibrium_density(a.nu, z, eta), 15)
                                   for z in Z0_VALUES])
    for z in Z0_VALUES:
        err = density_normalization(a.nu, z) - 1
        print(f"# z0={z}: mass - 1 = {mpmath.nstr(err, 3)}", file=sys.stderr)


if __name__ == "__main__":
    main()
