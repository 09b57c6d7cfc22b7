"""Extended-precision numerical checks of the exact results.

All floating-point work uses mpmath at a configurable binary precision
(default 200 bits).  Functions take ``prec`` and run inside a local
``mpmath.workprec`` block, so the global context is left alone.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import mpmath
from mpmath import mpf

from .combinatorics import c_nu
from .painleve import caustic_constant, caustic_constant_printed, shock_time

DEFAULT_PRECISION = int(os.environ.get("GENUS_ENGINE_PRECISION", "200"))


class DomainError(ValueError):
    pass


class PrecisionError(ArithmeticError):
    pass


def _mpq(x) -> mpf:
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    return mpf(x)


# ---------------------------------------------------------------- z0

def z0_eval(nu: int, s, prec: int = DEFAULT_PRECISION) -> mpf:
    """Real root of ``1 = z - c s z**nu`` on the branch with z0(0) = 1.

    Safeguarded Newton: iterates stay inside a sign-change bracket, falling
    back to bisection when a Newton step would leave it.
    """
    with mpmath.workprec(prec + 20):
        c = c_nu(nu)
        s = _mpq(s)
        sc = _mpq(shock_time(nu))
        zstar = mpf(nu) / (nu - 1)
        if s > sc:
            raise DomainError(f"s = {s} is beyond the shock time {sc}")
        if s == sc:
            return +zstar
        if s == 0:
            return mpf(1)
        F = lambda z: z - c * s * z ** nu - 1
        dF = lambda z: 1 - c * nu * s * z ** (nu - 1)
        lo, hi = (mpf(1), zstar) if s > 0 else (mpf(0), mpf(1))
        z = (lo + hi) / 2 if s > 0 else mpf(1) / (1 + mpmath.sqrt(-c * s))
        tol = mpf(2) ** (-prec + 8)
        for _ in range(10 * prec):
            f = F(z)
            if abs(f) < tol:
                return z
            if f < 0:
                lo = z
            else:
                hi = z
            d = dF(z)
            step = z - f / d if d != 0 else None
            z = step if step is not None and lo < step < hi else (lo + hi) / 2
        raise ArithmeticError(f"z0 iteration did not converge at s = {s}")


def genus_expansion_eval(nu: int, s, G: int, N, kind: str = "z",
                         prec: int = DEFAULT_PRECISION) -> mpf:
    """Truncated genus sums at z0(s): ``z0 + sum z_g / N**(2g)`` or ``sum e_g N**(2-2g)``."""
    from .energy import energy_engine
    from .hierarchy import engine
    with mpmath.workprec(prec):
        z0 = z0_eval(nu, s, prec)
        N = mpf(N)
        if kind == "z":
            tot = z0
            for g in range(1, G + 1):
                tot += _mpq_eval(engine(nu).zg_rational(g), z0) / N ** (2 * g)
            return tot
        if kind == "e":
            ee = energy_engine(nu)
            tot = mpf(0)
            for g in range(0, G + 1):
                tot += _mpq_eval(ee.eg(g).value, z0) * N ** (2 - 2 * g)
            return tot
        raise ValueError("kind must be 'z' or 'e'")


def _mpq_eval(f, z0):
    v = f(z0)
    return _mpq(v) if isinstance(v, Fraction) else v


# ---------------------------------------------------------------- equilibrium measure

@dataclass
class EquilibriumDensityParams:
    nu: int
    z0: object
    beta: object = None
    h_coeffs: list = field(default_factory=list)

    def __post_init__(self):
        if not 0 <= self.z0 <= 1:
            raise DomainError("z0 parameter must lie in [0, 1]")
        self.beta = 2 * mpmath.sqrt(_mpq(self.z0))


def equilibrium_density(nu: int, z0, eta, prec: int = DEFAULT_PRECISION) -> mpf:
    """Density on [-1, 1] after the dilation ``lambda = 2 sqrt(z0) eta``."""
    with mpmath.workprec(prec):
        eta = _mpq(eta)
        if not -1 < eta < 1:
            raise DomainError("eta must lie in (-1, 1)")
        z0 = _mpq(z0)
        B = comb(2 * nu - 1, nu - 1)
        x = 2 * eta
        bracket = x ** (2 * nu - 2) / B
        for j in range(1, nu):
            bracket += mpf(2 * comb(2 * j - 1, j - 1)) / B * x ** (2 * nu - 2 - 2 * j)
        return 2 / mpmath.pi * (z0 + (1 - z0) * bracket) * mpmath.sqrt(1 - eta * eta)


def _v_coeff(i: int, beta2):
    if i == 0:
        return beta2 / 2
    return mpf(comb(2 * i - 1, i - 1)) / 4 ** i * beta2 ** (i + 1) / (i + 1)


def h_polynomial_coeffs(nu: int, z0, prec: int = DEFAULT_PRECISION) -> list:
    """Coefficients of ``h(lambda) = 1 + sum_j h_j lambda**(2j)`` from the v-sequence."""
    with mpmath.workprec(prec):
        z0 = _mpq(z0)
        if z0 <= 0:
            raise DomainError("the lambda-space route needs z0 > 0")
        beta2 = 4 * z0
        t = (1 - z0) / (c_nu(nu) * z0 ** nu)
        return [4 * nu * (nu - j) * t * _v_coeff(nu - 1 - j, beta2) / beta2 for j in range(nu)]


def equilibrium_density_from_h(nu: int, z0, eta, prec: int = DEFAULT_PRECISION) -> mpf:
    """Same density, built as ``(1/2pi) sqrt(beta**2 - lambda**2) h(lambda)`` and rescaled."""
    with mpmath.workprec(prec):
        eta = _mpq(eta)
        z0 = _mpq(z0)
        if z0 == 0:
            # limit z0 -> 0: every z0 power cancels term by term
            c = c_nu(nu)
            tot = mpf(0)
            for j in range(nu):
                i = nu - 1 - j
                vi = mpf(1) / 2 if i == 0 else mpf(comb(2 * i - 1, i - 1)) / (4 ** i * (i + 1))
                tot += mpf(4) ** nu * nu * (nu - j) * vi / c * eta ** (2 * j)
            return 2 / mpmath.pi * mpmath.sqrt(1 - eta * eta) * tot
        hs = h_polynomial_coeffs(nu, z0, prec)
        beta = 2 * mpmath.sqrt(z0)
        lam = beta * eta
        h = 1 + sum(hj * lam ** (2 * j) for j, hj in enumerate(hs))
        psi = mpmath.sqrt(beta * beta - lam * lam) * h / (2 * mpmath.pi)
        return psi * beta  # d lambda = beta d eta


def density_normalization(nu: int, z0, nodes: int = 200, prec: int = DEFAULT_PRECISION,
                          density=equilibrium_density) -> mpf:
    """Integral of the density over (-1, 1), Gauss-Legendre in ``eta = cos(theta)``."""
    with mpmath.workprec(prec):
        xs, ws = _gauss_legendre(nodes, prec)
        tot = mpf(0)
        half_pi = mpmath.pi / 2
        for x, w in zip(xs, ws):
            th = half_pi * (x + 1)
            tot += w * density(nu, z0, mpmath.cos(th), prec) * mpmath.sin(th)
        return tot * half_pi


_GL_CACHE: dict = {}


def _gauss_legendre(n: int, prec: int):
    key = (n, prec)
    if key not in _GL_CACHE:
        with mpmath.workprec(prec + 20):
            xs, ws = [], []
            for k in range(1, n + 1):
                x = mpmath.cos(mpmath.pi * (k - mpf(1) / 4) / (n + mpf(1) / 2))
                for _ in range(100):
                    p0, p1 = mpf(1), x
                    for m in range(2, n + 1):
                        p0, p1 = p1, ((2 * m - 1) * x * p1 - (m - 1) * p0) / m
                    dp = n * (x * p1 - p0) / (x * x - 1)
                    dx = p1 / dp
                    x -= dx
                    if abs(dx) < mpf(2) ** (-prec - 10):
                        break
                xs.append(x)
                ws.append(2 / ((1 - x * x) * dp * dp))
        _GL_CACHE[key] = (xs, ws)
    return _GL_CACHE[key]


# ---------------------------------------------------------------- recurrence coefficients

@dataclass
class RecurrenceRun:
    nu: int
    t: object
    N: int
    b2: list
    method: str
    precision: int
    meta: dict = field(default_factory=dict)

    def at(self, n: int):
        return self.b2[n]


def _tail_bound(n: int, N: int, L):
    """Bound on the integral over |lambda| > L of (2 lambda)**(2n) exp(-N lambda**2/2)."""
    a = mpf(N) / 2
    return 2 * mpf(4) ** n * a ** (-(n + mpf(1) / 2)) / 2 * mpmath.gammainc(n + mpf(1) / 2, a * L * L)


def recurrence_stieltjes(nu: int, t, N: int, n_max: int | None = None,
                         prec: int = DEFAULT_PRECISION, step=None) -> RecurrenceRun:
    """b_n^2 for the weight ``exp(-N (lambda**2/2 + t lambda**(2 nu)))``.

    Discretized Stieltjes procedure on a trapezoid grid (spectrally accurate
    for this entire, rapidly decaying integrand).  The cut-off L is chosen so
    that a rigorous tail bound is below ``2**-prec`` times each computed norm;
    the bound assumes every zero lies in ``[-L/2, L/2]``, which is checked.
    """
    if _mpq(t) < 0:
        raise DomainError("t must be nonnegative")
    if N > 64:
        raise DomainError("N is capped at 64")
    n_max = N if n_max is None else n_max
    if n_max > N:
        raise DomainError("n_max must not exceed N")
    with mpmath.workprec(prec + 32):
        t = _mpq(t)
        h = mpf(1) / 256 if step is None else _mpq(step)
        L = mpf(4)
        while True:
            b2, norms = _stieltjes_grid(nu, t, N, n_max, h, L)
            eps = mpf(2) ** (-prec)
            r = 2 * mpmath.sqrt(max(b2[1:], default=mpf(0)))
            ok = L >= max(2 * r, 2) and all(
                _tail_bound(n, N, L) < eps * norms[n] for n in range(n_max + 1))
            if ok:
                break
            L += 1
            if L > 64:
                raise PrecisionError("could not certify the quadrature tail")
        for n in range(1, n_max + 1):
            if not b2[n] > 0:
                raise PrecisionError(f"b^2_{n} lost positivity; increase the precision")
        return RecurrenceRun(nu, t, N, [+x for x in b2], "stieltjes", prec,
                             {"cutoff": L, "step": h})


def _stieltjes_grid(nu, t, N, n_max, h, L):
    K = int(mpmath.ceil(L / h))
    xs = [k * h for k in range(K + 1)]
    ws = [2 * h * mpmath.exp(-N * (x * x / 2 + t * x ** (2 * nu))) for x in xs]
    ws[0] /= 2
    p_prev = [mpf(0)] * len(xs)
    p_cur = [mpf(1)] * len(xs)
    norms = [mpmath.fsum(ws)]
    b2 = [mpf(0)]
    for n in range(n_max):
        bn = b2[n]
        p_next = [x * pc - bn * pp for x, pc, pp in zip(xs, p_cur, p_prev)]
        hn = mpmath.fsum(w * p * p for w, p in zip(ws, p_next))
        norms.append(hn)
        b2.append(hn / norms[n])
        p_prev, p_cur = p_cur, p_next
    return b2, norms


def even_moments(nu: int, t, N: int, k_max: int, prec: int = DEFAULT_PRECISION):
    """``int lambda**(2k) w(lambda) d lambda`` for k = 0..k_max."""
    with mpmath.workprec(prec + 32):
        t = _mpq(t)
        f = lambda k: (lambda x: x ** (2 * k) * mpmath.exp(-N * (x * x / 2 + t * x ** (2 * nu))))
        return [2 * mpmath.quad(f(k), [0, 1, 2, 4, mpmath.inf]) for k in range(k_max + 1)]


def string_forward(t, N: int, n_max: int | None = None, prec: int = DEFAULT_PRECISION,
                   b2_1=None) -> RecurrenceRun:
    """Forward recursion of the quartic string equation, seeded by two moments."""
    if _mpq(t) <= 0:
        raise DomainError("the forward string recursion needs t > 0")
    n_max = N if n_max is None else n_max
    # each step amplifies the seed error by roughly 2**5; pay for it in guard bits
    work = prec + 32 + 5 * n_max
    with mpmath.workprec(work):
        t = _mpq(t)
        if b2_1 is None:
            m = even_moments(2, t, N, 1, work)
            b2_1 = m[1] / m[0]
        b2 = [mpf(0), _mpq(b2_1)]
        for n in range(1, n_max):
            nxt = (mpf(n) / N - b2[n]) / (4 * t * b2[n]) - b2[n - 1] - b2[n]
            if not nxt > 0:
                raise PrecisionError(f"string recursion became unstable after n = {n}")
            b2.append(nxt)
        return RecurrenceRun(2, t, N, [+x for x in b2], "string", prec)


def string_residual(run: RecurrenceRun) -> mpf:
    """Largest residual of the quartic string equation along a run."""
    with mpmath.workprec(run.precision + 32):
        b2, t, N = run.b2, _mpq(run.t), run.N
        worst = mpf(0)
        for n in range(1, len(b2) - 1):
            r = 4 * t * b2[n] * (b2[n - 1] + b2[n] + b2[n + 1]) + b2[n] - mpf(n) / N
            worst = max(worst, abs(r))
        return worst


# ---------------------------------------------------------------- studies

@dataclass
class ConvergenceReport:
    nu: int
    t: object
    G: int
    Ns: list
    errors: list
    slope: float
    expected: int

    def to_json(self) -> dict:
        return {"nu": self.nu, "t": str(self.t), "G": self.G, "N": self.Ns,
                "errors": [mpmath.nstr(e, 12) for e in self.errors],
                "slope": self.slope, "expected_slope": self.expected}


def convergence_study(nu: int, t, Ns, G: int, prec: int = DEFAULT_PRECISION,
                      runs: dict | None = None) -> ConvergenceReport:
    """Errors of the genus-G truncation against b_{N,N}^2 and their log-log slope."""
    s = -_mpq(t)
    errors = []
    for N in Ns:
        run = runs[N] if runs and N in runs else recurrence_stieltjes(nu, t, N, prec=prec)
        approx = genus_expansion_eval(nu, s, G, N, "z", prec)
        errors.append(abs(run.b2[N] - approx))
    import numpy as np
    x = np.log(np.array([float(n) for n in Ns]))
    y = np.log(np.array([float(e) for e in errors]))
    slope = float(np.polyfit(x, y, 1)[0])
    return ConvergenceReport(nu, t, G, list(Ns), errors, slope, -(2 * G + 2))


@dataclass
class CausticReport:
    nu: int
    shock_time: Fraction
    constant: Fraction
    printed_constant: Fraction
    rows: list

    def to_json(self) -> dict:
        from .exactnum import format_rational
        return {"nu": self.nu, "shock_time": format_rational(self.shock_time),
                "constant": format_rational(self.constant),
                "printed_constant": format_rational(self.printed_constant),
                "rows": self.rows}


def caustic_probe(nu: int, ks=range(3, 9), prec: int = DEFAULT_PRECISION) -> CausticReport:
    """Ratio of ``z0 - nu/(nu-1)`` to its square-root law as s approaches s_c."""
    sc = shock_time(nu)
    K = caustic_constant(nu)
    Kp = caustic_constant_printed(nu)
    rows = []
    with mpmath.workprec(prec):
        zstar = mpf(nu) / (nu - 1)
        for k in ks:
            gap = _mpq(sc) * mpf(10) ** (-k)
            z = z0_eval(nu, _mpq(sc) - gap, prec)
            law = -mpmath.sqrt(_mpq(K) * gap)
            printed = -mpmath.sqrt(_mpq(Kp) * gap)
            rows.append({"k": k, "ratio": float((z - zstar) / law),
                         "ratio_printed": float((z - zstar) / printed),
                         "sqrt_gap": float(mpmath.sqrt(gap))})
    return CausticReport(nu, sc, K, Kp, rows)
