"""Free-energy coefficients e_g as exact functions of z0.

e_0 and e_1 have closed forms with logarithms.  For g >= 2, e_g solves the
second-order Euler-type equation

    ((nu-1) theta - (2g-2)) ((nu-1) theta - (2g-1)) e_g = drivers_g,

with ``theta = s d/ds``.  The left side is the second w-derivative of
``w**(2-2g) e_g(w**(nu-1) s)`` at w = 1, i.e. the leading term of the same
lattice second difference whose higher terms make up drivers_g.

We look for ``e_g = (z0-1) Q(z0) / u**o`` and solve for Q exactly.  The two
homogeneous solutions are powers of s, which have a pole at z0 = 0, so the
fit is unique when it exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .combinatorics import c_nu
from .errors import FitError, StructuralError
from .hierarchy import GenusEngine, engine, w_table
from .symbolics import (LogExtendedZ0, PolyQ, RationalZ0, lift_log, s_derivative,
                        s_variable, series_compose, series_log_coefficient, theta, u_poly)

__all__ = ["EnergyCoefficient", "EnergyEngine", "e0", "e1", "drivers", "solve_eg", "kappa"]


def e0(nu: int) -> LogExtendedZ0:
    eta = Fraction((nu - 1) ** 2, 4 * nu * (nu + 1))
    r = Fraction(3 * (nu + 1), nu - 1)
    quad = PolyQ([r, -(1 + r), 1]) * eta  # (z0 - 1)(z0 - r)
    return LogExtendedZ0(RationalZ0(nu, quad), Fraction(1, 2), Fraction(0))


def e1(nu: int) -> LogExtendedZ0:
    return LogExtendedZ0(RationalZ0.const(nu, 0), Fraction(0), Fraction(-1, 12))


@dataclass(frozen=True)
class EnergyCoefficient:
    nu: int
    g: int
    value: object  # LogExtendedZ0 for g <= 1, RationalZ0 otherwise
    d: int | None = None
    o: int | None = None

    def rational(self) -> RationalZ0:
        return self.value if isinstance(self.value, RationalZ0) else self.value.rational

    def q_poly(self) -> PolyQ:
        """Q with ``e_g = (z0 - 1) Q / u**o`` (g >= 2)."""
        r = self.rational()
        return r.numerator.exact_div(PolyQ([-1, 1]))

    def to_json(self) -> dict:
        from .exactnum import format_rational
        r = self.rational()
        out = {"nu": self.nu, "g": self.g,
               "numerator": [format_rational(c) for c in r.numerator.coeffs],
               "u_pole": r.u_pole, "d": self.d, "o": self.o}
        if isinstance(self.value, LogExtendedZ0):
            out["log_z0"] = format_rational(self.value.log_z0)
            out["log_u"] = format_rational(self.value.log_u)
        return out


def _w_block(nu: int, f, n: int, c, weight_power: bool = True) -> RationalZ0:
    """``d^n/dw^n [w**c F(w**(nu-1) s)]`` at w=1 for F given as a function of z0."""
    tab = w_table(nu, c, n)
    s = s_variable(nu)
    out = RationalZ0.const(nu, 0)
    f = lift_log(f)
    t0 = tab(n, 0)
    if t0 != 0:
        if f.log_z0 or f.log_u:
            raise StructuralError("a logarithm survives in the drivers")
        out = out + f.rational * t0
    deriv = f
    for j in range(1, n + 1):
        deriv = s_derivative(deriv, nu)
        tj = tab(n, j)
        if tj == 0:
            continue
        w = (nu - 1) ** j if weight_power else 1
        out = out + (s ** j) * deriv * (tj * w)
    return out


def _solve_linear(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Exact least-structure solve of an overdetermined system; None if inconsistent."""
    n = len(rows[0]) if rows else 0
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    piv_cols = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        piv_cols.append(col)
        r += 1
    if any(row[-1] != 0 for row in m[r:]):
        return None
    if len(piv_cols) < n:
        # free parameters would mean a non-unique fit
        raise FitError("ansatz system is rank deficient")
    x = [Fraction(0)] * n
    for i, col in enumerate(piv_cols):
        x[col] = m[i][-1]
    return x


def _common_numerators(nu: int, items: list[RationalZ0]) -> list[PolyQ]:
    p = max(f.z0_pole for f in items)
    q = max(f.u_pole for f in items)
    up = u_poly(nu)
    return [f.numerator.shift(p - f.z0_pole) * up ** (q - f.u_pole) for f in items]


class EnergyEngine:
    def __init__(self, nu: int, zengine: GenusEngine | None = None, weight_power: bool = True,
                 series_margin: int = 12):
        self.nu = nu
        self.c = c_nu(nu)
        self.z = zengine or engine(nu)
        self.weight_power = weight_power
        self.series_margin = series_margin
        self._e: dict[int, EnergyCoefficient] = {
            0: EnergyCoefficient(nu, 0, e0(nu)),
            1: EnergyCoefficient(nu, 1, e1(nu)),
        }
        self._drivers: dict[int, RationalZ0] = {}

    def drivers(self, g: int) -> RationalZ0:
        if g < 1:
            raise ValueError("drivers are defined for g >= 1")
        if g in self._drivers:
            return self._drivers[g]
        nu = self.nu
        total = RationalZ0.const(nu, 0)
        for ell in range(1, g + 1):
            n = 2 * ell + 2
            block = _w_block(nu, self.eg(g - ell).value, n, 2 - 2 * (g - ell), self.weight_power)
            total = total - block * Fraction(2, factorial(n))
        zs = [self.z.zg_rational(m) for m in range(g + 1)]
        total = total + series_log_coefficient(zs, g)
        if total.value_at_one() != 0:
            raise StructuralError(f"drivers_{g} does not vanish at z0 = 1")
        self._drivers[g] = total
        return total

    def _operator(self, g: int, f: RationalZ0) -> RationalZ0:
        a, b = 2 * g - 2, 2 * g - 1
        first = theta(f) * (self.nu - 1) - f * a
        return theta(first) * (self.nu - 1) - first * b

    def _fit(self, g: int, rhs: RationalZ0, o: int, d: int) -> RationalZ0 | None:
        nu = self.nu
        basis = [RationalZ0(nu, PolyQ([-1, 1]).shift(i), 0, o) for i in range(d + 1)]
        images = [self._operator(g, b) for b in basis]
        nums = _common_numerators(nu, images + [rhs])
        width = max(len(p.coeffs) for p in nums)
        rows = [[nums[i][k] for i in range(d + 1)] for k in range(width)]
        sol = _solve_linear(rows, [nums[-1][k] for k in range(width)])
        if sol is None:
            return None
        out = RationalZ0(nu, PolyQ([-1, 1]) * PolyQ(sol), 0, o)
        if self._operator(g, out) != rhs:
            raise FitError("residual is not identically zero")
        return out

    def eg(self, g: int) -> EnergyCoefficient:
        if g in self._e:
            return self._e[g]
        if g < 0:
            raise ValueError("g must be nonnegative")
        for k in range(2, g):
            self.eg(k)
        rhs = self.drivers(g)
        found = None
        for o in range(1, 5 * g + 1):
            for d in range(0, 3 * g + 3):
                found = self._fit(g, rhs, o, d)
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            raise FitError(f"no (o, d) with o <= {5 * g}, d <= {3 * g + 2} fits e_{g} "
                           f"(drivers has u-pole {rhs.u_pole}, z0-pole {rhs.z0_pole})")
        if found.z0_pole != 0:
            raise StructuralError(f"e_{g} has a pole at z0 = 0")
        out = EnergyCoefficient(self.nu, g, found, d=found.numerator.degree - 1, o=found.u_pole)
        self._cross_check(g, out)
        self._e[g] = out
        return out

    def _cross_check(self, g: int, e: EnergyCoefficient):
        nu = self.nu
        order = 3 * g + self.series_margin
        es = series_compose(e.value, nu, order)
        ds = series_compose(self.drivers(g), nu, order)
        for m in range(order + 1):
            fac = ((nu - 1) * m - (2 * g - 2)) * ((nu - 1) * m - (2 * g - 1))
            if fac == 0:
                if ds[m] != 0:
                    raise StructuralError(f"resonant drivers coefficient D_{m} = {ds[m]} != 0")
                continue
            if es[m] != ds[m] / fac:
                raise StructuralError(f"series cross-check failed for e_{g} at s^{m}")

    def kappa(self, g: int, j: int) -> int:
        if j < 0:
            raise ValueError("j must be nonnegative")
        ser = series_compose(self.eg(g).value, self.nu, j)
        val = factorial(j) * ser[j]
        if val.denominator != 1 or val < 0:
            raise StructuralError(f"kappa_{g}({j}) = {val} is not a nonnegative integer")
        return int(val)

    def kappa_table(self, g: int, j_max: int) -> list[int]:
        ser = series_compose(self.eg(g).value, self.nu, j_max)
        out = []
        for j in range(1, j_max + 1):
            val = factorial(j) * ser[j]
            if val.denominator != 1 or val < 0:
                raise StructuralError(f"kappa_{g}({j}) = {val} is not a nonnegative integer")
            out.append(int(val))
        return out


_ENGINES: dict[int, EnergyEngine] = {}


def energy_engine(nu: int) -> EnergyEngine:
    if nu not in _ENGINES:
        _ENGINES[nu] = EnergyEngine(nu)
    return _ENGINES[nu]


def drivers(nu: int, g: int) -> RationalZ0:
    return energy_engine(nu).drivers(g)


def solve_eg(nu: int, g: int) -> EnergyCoefficient:
    return energy_engine(nu).eg(g)


def kappa(nu: int, g: int, j: int) -> int:
    return energy_engine(nu).kappa(g, j)
