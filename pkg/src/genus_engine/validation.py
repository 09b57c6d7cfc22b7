"""Invariant suite behind ``genus-engine validate``.

Each check has a stable identifier ``module.name`` and returns ``(ok, detail)``.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .config import EngineConfig

_REGISTRY: dict[str, Callable] = {}


def check(ident: str):
    def deco(fn):
        _REGISTRY[ident] = fn
        return fn
    return deco


@dataclass
class CheckResult:
    ident: str
    ok: bool
    detail: str
    seconds: float


def registry() -> dict[str, Callable]:
    return dict(_REGISTRY)


def run_suite(cfg: EngineConfig, select: list[str] | None = None) -> list[CheckResult]:
    out = []
    for ident, fn in _REGISTRY.items():
        if select and not any(ident.startswith(p) for p in select):
            continue
        t0 = time.perf_counter()
        try:
            ok, detail = fn(cfg)
        except Exception as exc:  # a raised structural error is a failed check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(ident, bool(ok), str(detail), time.perf_counter() - t0))
    return out


# ---------------------------------------------------------------- exactnum

def _rand_q(rng):
    return Fraction(rng.randint(-50, 50), rng.randint(1, 30))


@check("exactnum.field_axioms")
def _(cfg):
    from .exactnum import QuadExt
    rng = random.Random(0)
    for _ in range(50):
        a, b, c = (_rand_q(rng) for _ in range(3))
        x, y, z = (QuadExt(_rand_q(rng), _rand_q(rng)) for _ in range(3))
        for p, q, r, one in ((a, b, c, Fraction(1)), (x, y, z, QuadExt(1))):
            if (p + q) + r != p + (q + r) or (p * q) * r != p * (q * r):
                return False, "associativity"
            if p * (q + r) != p * q + p * r:
                return False, "distributivity"
            if p != 0 and p * (one / p) != one:
                return False, "inverse"
    return True, "50 random triples in Q and Q(sqrt 6)"


@check("exactnum.norm_multiplicative")
def _(cfg):
    from .exactnum import QuadExt
    rng = random.Random(1)
    for _ in range(50):
        x, y = (QuadExt(_rand_q(rng), _rand_q(rng)) for _ in range(2))
        if (x * y).norm() != x.norm() * y.norm():
            return False, f"{x} {y}"
    return True, "50 random pairs"


@check("exactnum.sqrtpi_associative")
def _(cfg):
    from .exactnum import SqrtPiScaled
    rng = random.Random(2)
    for _ in range(50):
        x, y, z = (SqrtPiScaled(_rand_q(rng) or 1, rng.randint(-3, 3)) for _ in range(3))
        if (x * y) * z != x * (y * z):
            return False, "associativity"
        for w in ((x * y) * z, x / y):
            if not isinstance(w.pi_half_exponent, int):
                return False, "non-integer pi exponent"
    return True, "50 random triples"


# ---------------------------------------------------------------- symbolics

def _random_rational(rng, nu):
    from .symbolics import PolyQ, RationalZ0
    coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(rng.randint(1, 4))]
    return RationalZ0(nu, PolyQ(coeffs), 0, rng.randint(0, 3))


@check("symbolics.canonical_idempotent")
def _(cfg):
    from .symbolics import RationalZ0
    rng = random.Random(1)
    for _ in range(20):
        a, b = _random_rational(rng, cfg.nu), _random_rational(rng, cfg.nu)
        for r in (a + b, a * b, a - b, a.deriv()):
            if not r.is_canonical() or r.canonical() != r:
                return False, f"non-canonical result {r}"
    return True, "20 random pairs"


@check("symbolics.compose_homomorphism")
def _(cfg):
    from .symbolics import series_compose
    rng = random.Random(2)
    M = 8
    for _ in range(10):
        a, b = _random_rational(rng, cfg.nu), _random_rational(rng, cfg.nu)
        sa, sb = series_compose(a, cfg.nu, M), series_compose(b, cfg.nu, M)
        if series_compose(a + b, cfg.nu, M) != sa + sb or series_compose(a * b, cfg.nu, M) != sa * sb:
            return False, f"composition not additive/multiplicative for {a}, {b}"
    return True, "10 random pairs, order 8"


@check("symbolics.sderiv_commutes")
def _(cfg):
    from .symbolics import s_derivative, series_compose
    rng = random.Random(3)
    for _ in range(20):
        f = _random_rational(rng, cfg.nu)
        M = rng.randint(2, 12)
        lhs = series_compose(s_derivative(f, cfg.nu), cfg.nu, M - 1)
        if lhs != series_compose(f, cfg.nu, M).deriv():
            return False, f"d/ds does not commute with composition for {f}"
    return True, "20 random fixtures"


@check("symbolics.z0_series_identity")
def _(cfg):
    from .combinatorics import c_nu
    from .symbolics import PowerSeriesS, z0_series
    for nu in (2, 3, 4, 5):
        z = z0_series(nu, 20)
        s = PowerSeriesS([0, 1] + [0] * 19)
        resid = PowerSeriesS.const(1, 20) - z + s * (z ** nu) * c_nu(nu)
        if any(resid.coeffs):
            return False, f"nu={nu}"
    return True, "nu 2..5, order 20"


# ---------------------------------------------------------------- combinatorics

@check("combinatorics.d_equivalence")
def _(cfg):
    from .combinatorics import d_coeff_symmetric, d_coeff_walks, partitions
    n = 0
    for nu in (2, 3, 4):
        for size in (1, 3, 5, 7, 9):
            for lam in partitions(size, nu + 1):
                if d_coeff_symmetric(nu, lam) != d_coeff_walks(nu, lam):
                    return False, f"nu={nu}, lambda={lam}"
                n += 1
    return True, f"{n} cases"


@check("combinatorics.d_even")
def _(cfg):
    from .combinatorics import d_coeff_symmetric, partitions
    for size in (1, 3, 5, 7, 9):
        for lam in partitions(size, cfg.nu + 1):
            if d_coeff_symmetric(cfg.nu, lam) % 2:
                return False, str(lam)
    return True, "all even"


@check("combinatorics.walk_count")
def _(cfg):
    from math import comb
    from .combinatorics import downturn_walks, restricted_partitions
    for nu in range(2, 7):
        if not len(restricted_partitions(nu)) == len(downturn_walks(nu)) == comb(2 * nu, nu + 1):
            return False, f"nu={nu}"
    return True, "nu 2..6"


@check("combinatorics.m_symmetric")
def _(cfg):
    from .combinatorics import monomial_symmetric, partitions
    rng = random.Random(4)
    for _ in range(30):
        lam = rng.choice(partitions(rng.randint(1, 7), 4))
        x = [rng.randint(-4, 4) for _ in range(4)]
        y = x[:]
        rng.shuffle(y)
        if monomial_symmetric(lam, x) != monomial_symmetric(lam, y):
            return False, f"{lam} {x}"
    return True, "30 random permutations"


# ---------------------------------------------------------------- hierarchy

@check("hierarchy.vanishing_lemma")
def _(cfg):
    from .hierarchy import engine
    # factor_w_derivative raises VanishingLemmaError on a nonzero low coefficient
    for nu in sorted({2, 3, cfg.nu}):
        e = engine(nu)
        for k in range(5):
            for n in range(10):
                e.factor_w_derivative(k, n)
    return True, f"k <= 4, n <= 9, nu in {sorted({2, 3, cfg.nu})}"


@check("hierarchy.row_sums_and_positivity")
def _(cfg):
    from .hierarchy import engine
    for nu in sorted({2, 3, 4, 5, cfg.nu}):
        for g in range(1, 6):
            z = engine(nu).zg(g)
            if sum(z.coeffs) != 0 or z.coeffs[-1] <= 0 or z.pole_order != 5 * g - 1:
                return False, f"nu={nu}, g={g}"
    return True, "g <= 5, nu 2..5"


@check("hierarchy.z1_z2_fixtures")
def _(cfg):
    from .fixtures import z1_coeffs, z2_reference
    from .hierarchy import engine
    for nu in (2, 3, 4, 5):
        if engine(nu).zg(1).coeffs != z1_coeffs(nu):
            return False, f"z_1 at nu={nu}"
        if engine(nu).zg_rational(2) != z2_reference(nu):
            return False, f"z_2 at nu={nu}"
    return True, "nu 2..5"


@check("hierarchy.z3_structure")
def _(cfg):
    from .symbolics import PolyQ
    from .hierarchy import engine
    for nu in (2, 3, 4, 5):
        r = engine(nu).zg_rational(3)
        p = r.numerator.exact_div(PolyQ([0, -1, 1]))
        if p.degree != 7 or r.u_pole != 14:
            return False, f"nu={nu}: deg {p.degree}, pole {r.u_pole}"
    return True, "degree 7 over u**14, nu 2..5"


@check("hierarchy.count_oracle")
def _(cfg):
    from .hierarchy import engine
    e = engine(cfg.nu)
    for g in range(0, min(cfg.g_max, 3) + 1):
        e.count_table(g, 10)
    return True, "two paths agree, nonnegative integers"


# ---------------------------------------------------------------- energy

@check("energy.e2_fixture")
def _(cfg):
    from .energy import energy_engine
    from .fixtures import e2_reference
    for nu in (2, 3, 4, 5):
        if energy_engine(nu).eg(2).rational() != e2_reference(nu):
            return False, f"nu={nu}"
    return True, "nu 2..5"


@check("energy.fit_and_crosscheck")
def _(cfg):
    from .energy import energy_engine
    ee = energy_engine(cfg.nu)
    rows = []
    for g in range(2, cfg.g_max + 1):
        e = ee.eg(g)
        if e.rational().z0_pole != 0:
            return False, f"e_{g} has a z0 pole"
        rows.append(f"g={g}:(d={e.d},o={e.o})")
    return True, " ".join(rows) or "nothing to fit"


@check("energy.drivers_vanish_at_one")
def _(cfg):
    from .energy import energy_engine
    ee = energy_engine(cfg.nu)
    for g in range(1, cfg.g_max + 1):
        if ee.drivers(g).value_at_one() != 0:
            return False, f"g={g}"
    return True, f"g <= {cfg.g_max}"


@check("energy.drivers_poles")
def _(cfg):
    from .energy import energy_engine
    from .symbolics import RationalZ0
    # a RationalZ0 only carries denominators z0**p u**q, so a successful
    # construction already confines the poles
    ee = energy_engine(cfg.nu)
    ok = all(isinstance(ee.drivers(g), RationalZ0) for g in range(1, cfg.g_max + 1))
    return ok, "denominators are z0**p u**q"


@check("energy.resonance_nu2")
def _(cfg):
    from .energy import energy_engine
    from .symbolics import series_compose
    ee = energy_engine(2)
    for g in range(2, max(cfg.g_max, 2) + 1):
        ds = series_compose(ee.drivers(g), 2, 2 * g)
        if ds[2 * g - 2] != 0 or ds[2 * g - 1] != 0:
            return False, f"g={g}"
    return True, f"D_(2g-2) = D_(2g-1) = 0 for g <= {max(cfg.g_max, 2)}"


@check("energy.kappa_integral")
def _(cfg):
    from .energy import energy_engine
    ee = energy_engine(cfg.nu)
    for g in range(0, min(cfg.g_max, 3) + 1):
        ee.kappa_table(g, 10)
    return True, "nonnegative integers"


# ---------------------------------------------------------------- painleve

@check("painleve.top_matches_hierarchy")
def _(cfg):
    from .hierarchy import engine
    from .painleve import top_pole_sequence
    for nu in sorted({2, 3, cfg.nu}):
        if top_pole_sequence(nu, 4) != [engine(nu).zg(g).coeffs[-1] for g in range(1, 5)]:
            return False, f"nu={nu}"
    return True, f"g <= 4, nu in {sorted({2, 3, cfg.nu})}"


@check("painleve.pi_bridge")
def _(cfg):
    from .painleve import check_pi_bridge
    return check_pi_bridge(8).ok, "g <= 8"


@check("painleve.top_pole_recursion")
def _(cfg):
    from .painleve import top_pole_sequence
    a = [None] + top_pole_sequence(2, 9)
    for g in range(1, 9):
        rhs = Fraction(4, 3) * (25 * g * g - 1) * a[g] + sum(a[m] * a[g + 1 - m] for m in range(1, g + 1))
        if rhs != a[g + 1]:
            return False, f"g={g}"
    return True, "g <= 8"


@check("painleve.alpha_parity")
def _(cfg):
    from .painleve import pi_alpha
    for g, a in enumerate(pi_alpha(12)):
        if (a.b if g % 2 == 0 else a.a) != 0:
            return False, f"g={g}"
    return True, "g <= 12"


@check("painleve.tg_and_pinning")
def _(cfg):
    from .painleve import pinning_constants, tg
    ts = tg(6)
    for g, t in enumerate(ts, start=1):
        if t.pi_half_exponent != (-1 if g % 2 == 0 else 0):
            return False, f"t_{g} pi power"
    pinning_constants()
    return True, "g <= 6"


# ---------------------------------------------------------------- numerics

@check("numerics.density_two_path")
def _(cfg):
    import mpmath
    from .numerics import equilibrium_density, equilibrium_density_from_h
    worst = mpmath.mpf(0)
    for z0 in (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1)):
        for k in range(10):
            eta = mpmath.mpf(2 * k + 1) / 10 - 1
            worst = max(worst, abs(equilibrium_density(cfg.nu, z0, eta)
                                   - equilibrium_density_from_h(cfg.nu, z0, eta)))
    return worst < mpmath.mpf(10) ** -20, f"max diff {mpmath.nstr(worst, 3)}"


@check("numerics.z0_quadratic")
def _(cfg):
    import mpmath
    from .numerics import z0_eval
    rng = random.Random(5)
    with mpmath.workprec(220):
        for _ in range(100):
            s = Fraction(rng.randint(-10 ** 6, 20832), 10 ** 6)
            z = z0_eval(2, s)
            sm = mpmath.mpf(s.numerator) / s.denominator
            exact = (1 - mpmath.sqrt(1 - 48 * sm)) / (24 * sm) if s else mpmath.mpf(1)
            if abs(z - exact) > mpmath.mpf(2) ** (-190):
                return False, f"s={s}"
    return True, "100 random s"


@check("numerics.stieltjes_vs_string")
def _(cfg):
    import mpmath
    from .numerics import recurrence_stieltjes, string_forward
    t = Fraction(1, 20)
    worst = mpmath.mpf(0)
    for N in (16, 32, 48):
        a = recurrence_stieltjes(2, t, N).b2
        b = string_forward(t, N).b2
        worst = max(worst, max(abs(x - y) for x, y in zip(a, b)))
    return worst < mpmath.mpf(10) ** -15, f"max diff {mpmath.nstr(worst, 3)}"


@check("numerics.normalization")
def _(cfg):
    import mpmath
    from .numerics import density_normalization
    worst = mpmath.mpf(0)
    for nu in (2, 3):
        for z0 in (Fraction(0), Fraction(1, 2), Fraction(1)):
            worst = max(worst, abs(density_normalization(nu, z0) - 1))
    return worst < mpmath.mpf(10) ** -12, f"max |mass - 1| {mpmath.nstr(worst, 3)}"


@check("numerics.convergence")
def _(cfg):
    from .numerics import convergence_study, recurrence_stieltjes
    t, Ns = Fraction(1, 20), (16, 24, 32, 48)
    runs = {N: recurrence_stieltjes(2, t, N) for N in Ns}
    tol = {0: 0.3, 1: 0.4, 2: 0.5}
    parts = []
    for G in (0, 1, 2):
        rep = convergence_study(2, t, Ns, G, runs=runs)
        mono = all(a > b for a, b in zip(rep.errors, rep.errors[1:]))
        if not mono or abs(rep.slope - rep.expected) > tol[G]:
            return False, f"G={G}: slope {rep.slope:.3f}, monotone {mono}"
        parts.append(f"G={G}:{rep.slope:.2f}")
    return True, " ".join(parts)


# ---------------------------------------------------------------- cli

@check("cli.json_roundtrip")
def _(cfg):
    from .cli import run
    from .symbolics import RationalZ0
    from .hierarchy import engine
    doc = json.loads(run(["zg", "--nu", str(cfg.nu), "--g", "2"]).text)
    back = [Fraction(c) for c in doc["coeffs"]]
    if tuple(back) != engine(cfg.nu).zg(2).coeffs:
        return False, "coefficients changed in transit"
    num = RationalZ0.from_json(cfg.nu, {"numerator": doc["numerator_poly"], "z0_pole": 0,
                                        "u_pole": doc["pole_order"]})
    return num == engine(cfg.nu).zg_rational(2), "zg round-trip"
