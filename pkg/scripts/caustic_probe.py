"""Approach to the shock time: z0 - nu/(nu-1) against its square-root law.

Reports both denominators, (nu-1)^(nu+2) and (nu-1)^nu, so the two can be
compared directly.
"""

import argparse

from genus_engine.numerics import caustic_probe


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--nu", default="2,3,4")
    a = ap.parse_args()
    for nu in (int(x) for x in a.nu.split(",")):
        rep = caustic_probe(nu)
        print(f"nu={nu}  s_c={rep.shock_time}  K={rep.constant}  K'={rep.printed_constant}")
        for r in rep.rows:
            print(f"  k={r['k']}  ratio {r['ratio']:.10f}  ratio' {r['ratio_printed']:.10f}"
                  f"  (ratio-1)/sqrt(gap) {(r['ratio'] - 1) / r['sqrt_gap']:+.4f}")


if __name__ == "__main__":
    main()
