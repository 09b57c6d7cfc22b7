"""Exact tables: z_g shapes, e_g fit sizes, map counts and timings.

    python scripts/genus_tables.py --nu 2,3 --gmax 4 --jmax 8
"""

import argparse
import time

from genus_engine.energy import energy_engine
from genus_engine.hierarchy import engine
from genus_engine.painleve import divergence_ratios


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--nu", default="2,3")
    ap.add_argument("--gmax", type=int, default=4)
    ap.add_argument("--jmax", type=int, default=8)
    a = ap.parse_args()
    for nu in (int(x) for x in a.nu.split(",")):
        print(f"== nu = {nu}")
        for g in range(1, a.gmax + 1):
            t0 = time.perf_counter()
            z = engine(nu).zg(g)
            e = energy_engine(nu).eg(g)
            dt = time.perf_counter() - t0
            print(f"g={g}: z_g pole {z.pole_order}, top {z.coeffs[-1]}; "
                  f"e_g (d, o) = ({e.d}, {e.o}); {dt:.2f}s")
        for g in range(0, min(a.gmax, 3) + 1):
            print(f"  counts g={g}: {engine(nu).count_table(g, a.jmax)}")
            print(f"  kappa  g={g}: {energy_engine(nu).kappa_table(g, a.jmax)}")
        r = divergence_ratios(nu, 10)
        print("  a^(g+1)/a^(g) / g^2:", [round(float(r[g - 1]) / g ** 2, 2) for g in range(2, 10)])


if __name__ == "__main__":
    main()
