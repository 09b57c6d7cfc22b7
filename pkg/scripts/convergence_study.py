"""Error of the truncated genus expansion against Stieltjes b_{N,N}^2, per G.

    python scripts/convergence_study.py --nu 2 --t 0.05 --N 16,24,32,48 --G 3
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction

import mpmath

from genus_engine.numerics import convergence_study, recurrence_stieltjes, string_forward


@dataclass
class StudyConfig:
    nu: int = 2
    t: str = "0.05"
    Ns: list = field(default_factory=lambda: [16, 24, 32, 48])
    G: int = 2
    precision: int = 200
    cross_check: bool = True


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--nu", type=int, default=2)
    ap.add_argument("--t", default="0.05")
    ap.add_argument("--N", default="16,24,32,48")
    ap.add_argument("--G", type=int, default=2)
    ap.add_argument("--precision", type=int, default=200)
    a = ap.parse_args()
    cfg = StudyConfig(a.nu, a.t, [int(x) for x in a.N.split(",")], a.G, a.precision)
    t = Fraction(cfg.t)

    t0 = time.perf_counter()
    runs = {N: recurrence_stieltjes(cfg.nu, t, N, prec=cfg.precision) for N in cfg.Ns}
    out = {"config": asdict(cfg), "studies": []}
    for G in range(cfg.G + 1):
        rep = convergence_study(cfg.nu, t, cfg.Ns, G, prec=cfg.precision, runs=runs)
        out["studies"].append(rep.to_json())
        print(f"G={G}  slope {rep.slope:+.4f}  (expected {rep.expected})  "
              + "  ".join(mpmath.nstr(e, 4) for e in rep.errors))
    if cfg.cross_check and cfg.nu == 2:
        gap = max(max(abs(x - y) for x, y in zip(runs[N].b2, string_forward(t, N).b2))
                  for N in cfg.Ns)
        out["string_gap"] = mpmath.nstr(gap, 4)
        print(f"max |stieltjes - string| = {mpmath.nstr(gap, 4)}")
    out["seconds"] = round(time.perf_counter() - t0, 2)
    print(json.dumps(out, indent=2))


if __name__ == "__main__":
    main()
