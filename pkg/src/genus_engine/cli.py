"""Command-line front end.

Exact quantities are always emitted as rational strings.  The coupling is
given as ``--t`` (or ``--s`` with s = -t); everything downstream runs in s.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
from dataclasses import dataclass
from fractions import Fraction

from .config import FORMATS, EngineConfig, default_precision
from .errors import StructuralError
from .exactnum import format_rational

SCHEMA = "1"


class UsageError(Exception):
    pass


@dataclass
class Document:
    payload: dict
    header: list | None = None
    rows: list | None = None


@dataclass
class Result:
    code: int
    text: str
    error: str = ""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational or decimal number: {text!r}")


def _coupling(args) -> Fraction:
    if args.t is not None and args.s is not None:
        raise UsageError("give only one of --t and --s")
    if args.s is not None:
        return -args.s
    return args.t if args.t is not None else Fraction(1, 20)


def _series(f, nu, order):
    from .symbolics import series_compose
    return [format_rational(c) for c in series_compose(f, nu, order).coeffs]


# ---------------------------------------------------------------- handlers

def cmd_zg(args, cfg):
    from .hierarchy import engine
    if args.g < 1:
        raise UsageError("--g must be >= 1 for zg")
    z = engine(cfg.nu).zg(args.g)
    out = z.to_json()
    out["rational"] = z.to_rational().to_string()
    if args.order is not None:
        out["series"] = _series(z.to_rational(), cfg.nu, args.order)
    rows = [[ell, format_rational(a)] for ell, a in enumerate(z.coeffs)]
    return Document(out, ["ell", "coefficient"], rows)


def cmd_eg(args, cfg):
    from .energy import solve_eg
    e = solve_eg(cfg.nu, args.g)
    out = e.to_json()
    out["rational"] = e.rational().to_string()
    if args.order is not None:
        out["series"] = _series(e.value, cfg.nu, args.order)
    rows = [[k, c] for k, c in enumerate(out["numerator"])]
    return Document(out, ["power", "numerator_coefficient"], rows)


def cmd_counts(args, cfg):
    from .hierarchy import engine
    tab = engine(cfg.nu).count_table(args.g, args.jmax)
    return Document({"nu": cfg.nu, "g": args.g, "counts": tab},
                    ["j", "count"], [[j, v] for j, v in enumerate(tab)])


def cmd_kappa(args, cfg):
    from .energy import energy_engine
    tab = energy_engine(cfg.nu).kappa_table(args.g, args.jmax)
    return Document({"nu": cfg.nu, "g": args.g, "kappa": tab},
                    ["j", "kappa"], [[j, v] for j, v in enumerate(tab, start=1)])


def cmd_dcoeff(args, cfg):
    from .combinatorics import d_coeff_symmetric, d_coeff_walks, partitions
    rows = []
    for ell in range(args.g + 1):
        for lam in partitions(2 * ell + 1, cfg.nu + 1):
            d = d_coeff_symmetric(cfg.nu, lam)
            if d != d_coeff_walks(cfg.nu, lam):
                raise StructuralError(f"d coefficient mismatch at {lam}")
            rows.append([cfg.nu, str(lam), d])
    return Document({"table": [{"nu": n, "lambda": l, "d": d} for n, l, d in rows]},
                    ["nu", "lambda", "d"], rows)


def cmd_painleve(args, cfg):
    from .painleve import check_pi_bridge, pi_alpha, top_pole_sequence
    alpha = pi_alpha(args.G)
    bridge = check_pi_bridge(args.G)
    tops = top_pole_sequence(2, args.G)
    out = {"alpha": [a.to_string() for a in alpha],
           "top_pole": [format_rational(a) for a in tops],
           "pi_bridge": bridge.to_json()}
    if not bridge.ok:
        raise StructuralError("PI bridge identity fails: " + json.dumps(bridge.rows))
    rows = [[g, alpha[g].to_string(), format_rational(tops[g - 1]) if g else ""]
            for g in range(args.G + 1)]
    return Document(out, ["g", "alpha", "top_pole"], rows)


def cmd_tg(args, cfg):
    from .painleve import tg
    ts = [t.to_string() for t in tg(args.G)]
    return Document({"t": ts}, ["g", "t"], [[g, t] for g, t in enumerate(ts, start=1)])


def cmd_ds(args, cfg):
    from .painleve import divergence_ratios, double_scaling_series
    rep = double_scaling_series(cfg.nu, args.G)
    out = rep.to_json()
    ratios = divergence_ratios(cfg.nu, args.G)
    out["divergence_ratios"] = [format_rational(r) for r in ratios]
    rows = [[g, format_rational(p), format_rational(c)]
            for g, (p, c) in enumerate(zip(rep.pole_coefficients, rep.series_coefficients), 1)]
    return Document(out, ["g", "pole_coefficient", "series_coefficient"], rows)


def cmd_numcheck(args, cfg):
    import mpmath
    from .numerics import convergence_study, recurrence_stieltjes
    t = _coupling(args)
    Ns = args.N or [16, 24, 32, 48]
    runs = {N: recurrence_stieltjes(cfg.nu, t, N, prec=cfg.precision) for N in Ns}
    rep = convergence_study(cfg.nu, t, Ns, args.G, prec=cfg.precision, runs=runs)
    out = rep.to_json()
    out["t"] = format_rational(t)
    out["s"] = format_rational(-t)
    out["precision"] = cfg.precision
    rows = [[N, mpmath.nstr(runs[N].b2[N], 30), mpmath.nstr(e, 12)] for N, e in zip(Ns, rep.errors)]
    return Document(out, ["N", "b2_NN", "error"], rows)


def cmd_eqmeasure(args, cfg):
    import mpmath
    from .numerics import density_normalization, equilibrium_density
    z0 = args.z0 if args.z0 is not None else Fraction(1, 2)
    if args.grid < 1:
        raise UsageError("--grid must be positive")
    rows = []
    with mpmath.workprec(cfg.precision):
        for k in range(args.grid):
            eta = Fraction(2 * k + 1, args.grid) - 1
            rows.append([mpmath.nstr(mpmath.mpf(eta.numerator) / eta.denominator, 17),
                         mpmath.nstr(equilibrium_density(cfg.nu, z0, eta, cfg.precision), 17)])
        mass = density_normalization(cfg.nu, z0, prec=cfg.precision)
    out = {"nu": cfg.nu, "z0": format_rational(z0), "normalization": mpmath.nstr(mass, 30),
           "eta": [r[0] for r in rows], "density": [r[1] for r in rows]}
    return Document(out, ["eta", "density"], rows)


def cmd_plotdata(args, cfg):
    import mpmath
    from .numerics import caustic_probe, z0_eval
    from .painleve import shock_time
    if args.kind == "caustic":
        rep = caustic_probe(cfg.nu, prec=cfg.precision)
        rows = [[r["k"], r["sqrt_gap"], r["ratio"], r["ratio_printed"]] for r in rep.rows]
        return Document(rep.to_json(), ["k", "sqrt_gap", "ratio", "ratio_printed"], rows)
    sc = shock_time(cfg.nu)
    n = args.grid
    rows = []
    for k in range(n + 1):
        s = sc * Fraction(2 * k - n, n)  # s in [-s_c, s_c]
        rows.append([float(s), mpmath.nstr(z0_eval(cfg.nu, s, cfg.precision), 17)])
    return Document({"nu": cfg.nu, "shock_time": format_rational(sc),
                     "s": [r[0] for r in rows], "z0": [r[1] for r in rows]}, ["s", "z0"], rows)


def cmd_validate(args, cfg):
    from .validation import run_suite
    results = run_suite(cfg, args.only.split(",") if args.only else None)
    rows = [[r.ident, "PASS" if r.ok else "FAIL", f"{r.seconds:.2f}", r.detail] for r in results]
    doc = Document({"nu": cfg.nu, "gmax": cfg.g_max,
                    "results": [{"id": r.ident, "ok": r.ok, "detail": r.detail} for r in results],
                    "ok": all(r.ok for r in results)},
                   ["id", "status", "seconds", "detail"], rows)
    return doc


COMMANDS = {
    "zg": (cmd_zg, "json", "exact z_g as a partial fraction in u"),
    "eg": (cmd_eg, "json", "exact e_g as a rational function of z0"),
    "counts": (cmd_counts, "json", "two-legged map counts of genus g"),
    "kappa": (cmd_kappa, "json", "map counts read off from e_g"),
    "dcoeff": (cmd_dcoeff, "json", "table of d coefficients"),
    "painleve": (cmd_painleve, "json", "PI coefficients and the top-pole identity"),
    "tg": (cmd_tg, "json", "asymptotic map-count constants t_g"),
    "ds": (cmd_ds, "json", "double-scaling coefficients"),
    "numcheck": (cmd_numcheck, "json", "numerical convergence of the genus expansion"),
    "eqmeasure": (cmd_eqmeasure, "csv", "equilibrium density on a grid"),
    "validate": (cmd_validate, "text", "run the invariant suite"),
    "plotdata": (cmd_plotdata, "csv", "data series for the z0 curve or the caustic probe"),
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--nu", type=int, default=2)
    common.add_argument("--precision", type=int, default=None, help="binary precision in bits")
    common.add_argument("--format", choices=FORMATS, default=None)
    common.add_argument("--out", default=None, help="write output here instead of stdout")
    common.add_argument("--order", type=int, default=None, help="series order in s")

    p = _Parser(prog="genus-engine", description="Exact genus expansion toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, _, help_) in COMMANDS.items():
        sp = sub.add_parser(name, parents=[common], help=help_)
        if name in ("zg", "eg", "counts", "kappa"):
            sp.add_argument("--g", type=int, required=True)
        if name in ("counts", "kappa"):
            sp.add_argument("--jmax", type=int, default=10)
        if name == "dcoeff":
            sp.add_argument("--g", type=int, default=4, help="include |lambda| = 2l+1 for l <= g")
        if name in ("painleve", "tg", "ds"):
            sp.add_argument("--G", type=int, default=6)
        if name == "numcheck":
            sp.add_argument("--G", type=int, default=2)
            sp.add_argument("--N", type=_int_list, default=None)
            sp.add_argument("--t", type=_rational, default=None)
            sp.add_argument("--s", type=_rational, default=None)
        if name == "eqmeasure":
            sp.add_argument("--z0", type=_rational, default=None)
            sp.add_argument("--grid", type=int, default=200)
        if name == "plotdata":
            sp.add_argument("--kind", choices=("z0", "caustic"), default="z0")
            sp.add_argument("--grid", type=int, default=100)
        if name == "validate":
            sp.add_argument("--gmax", "--g", dest="gmax", type=int, default=3)
            sp.add_argument("--only", default=None, help="comma list of id prefixes")
    return p


# ---------------------------------------------------------------- rendering

def render(doc: Document, fmt: str, command: str) -> str:
    if fmt == "json":
        return json.dumps({"schema": SCHEMA, "command": command, **doc.payload}, indent=2) + "\n"
    if doc.header is None:
        raise UsageError(f"{command} has no tabular form; use --format json")
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(doc.header)
        w.writerows(doc.rows)
        return buf.getvalue()
    cells = [list(map(str, doc.header))] + [list(map(str, r)) for r in doc.rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(doc.header))]
    return "".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n" for r in cells)


def _write_atomic(path: str, text: str):
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".genus-engine-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def run(argv: list[str]) -> Result:
    """Parse and execute; never exits the process."""
    try:
        args = build_parser().parse_args(argv)
        handler, default_fmt, _ = COMMANDS[args.command]
        fmt = args.format or default_fmt
        cfg = EngineConfig(nu=args.nu, g_max=getattr(args, "gmax", 3), series_order=args.order,
                           precision=args.precision or default_precision(), fmt=fmt)
        doc = handler(args, cfg)
        text = render(doc, fmt, args.command)
    except UsageError as exc:
        return Result(2, "", str(exc))
    except StructuralError as exc:
        return Result(1, "", f"structural error: {exc}")
    except (ValueError, ArithmeticError) as exc:
        # bad parameter values (nu < 2, s beyond the shock time, ...)
        return Result(2, "", f"error: {exc}")
    code = 0
    if args.command == "validate" and not doc.payload["ok"]:
        code = 1
    if args.out:
        _write_atomic(args.out, text)
        text = ""
    return Result(code, text)


def main(argv: list[str] | None = None) -> int:
    res = run(sys.argv[1:] if argv is None else argv)
    if res.text:
        sys.stdout.write(res.text)
    if res.error:
        sys.stderr.write(res.error.rstrip("\n") + "\n")
    return res.code


if __name__ == "__main__":
    sys.exit(main())
