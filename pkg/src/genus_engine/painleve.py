"""Painleve I asymptotics and the highest-order pole coefficients of z_g.

The top coefficient ``a_{3g-1}^{(g)}`` of each ``z_g`` obeys a closed quadratic
recursion.  At nu = 2 it is a rescaling of the asymptotic coefficients of the
tritronquee-type Painleve I solutions, and it also gives the constants t_g
governing the large-size asymptotics of map counts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .combinatorics import c_nu
from .errors import StructuralError
from .exactnum import (PrimeExponentReal, QuadExt, SqrtPiScaled, format_rational,
                       gamma_half_integer)

SQRT6 = QuadExt(0, 1, 6)


def pi_alpha(G: int) -> list[QuadExt]:
    """alpha_0..alpha_G of the PI expansion ``sqrt(-x/6) (1 + sum alpha_g (-x)^(-5g/2))``."""
    if G < 0:
        raise ValueError("G must be nonnegative")
    alpha = [QuadExt(1)]
    inv = QuadExt(1) / (SQRT6 * 8)
    for g in range(0, G):
        nxt = inv * (25 * g * g - 1) * alpha[g]
        quad = QuadExt(0)
        for m in range(1, g + 1):
            quad = quad + alpha[m] * alpha[g + 1 - m]
        alpha.append(nxt - quad * Fraction(1, 2))
    return alpha


def top_pole_sequence(nu: int, G: int) -> list[Fraction]:
    """``[a_2^{(1)}, a_5^{(2)}, ..., a_{3G-1}^{(G)}]`` from the quadratic recursion."""
    if nu < 2 or G < 1:
        raise ValueError("need nu >= 2 and G >= 1")
    a = [None, Fraction(nu * nu, 6)]
    for g in range(1, G):
        lin = Fraction(nu ** 3 * (25 * g * g - 1), 6) * a[g]
        quad = sum((a[m] * a[g + 1 - m] for m in range(1, g + 1)), Fraction(0))
        a.append(lin + Fraction(nu, 2) * quad)
    return a[1:]


def bridge_rhs(g: int, alpha_g: QuadExt) -> QuadExt:
    """``-2**(5g-1) (2/3)**(g/2) alpha_g`` inside Q(sqrt 6)."""
    half = Fraction(2, 3) ** (g // 2)
    root = SQRT6 / 3 if g % 2 else QuadExt(1)  # sqrt(2/3) = sqrt(6)/3
    return -(root * half * alpha_g) * 2 ** (5 * g - 1)


@dataclass
class BridgeReport:
    ok: bool
    rows: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"ok": self.ok, "rows": self.rows}


def check_pi_bridge(G: int) -> BridgeReport:
    """Compare the nu = 2 top-pole sequence with the rescaled PI coefficients."""
    alpha = pi_alpha(G)
    tops = top_pole_sequence(2, G)
    rows, ok = [], True
    for g in range(1, G + 1):
        rhs = bridge_rhs(g, alpha[g])
        good = rhs == QuadExt(tops[g - 1])
        ok &= good
        rows.append({"g": g, "top": format_rational(tops[g - 1]), "from_alpha": rhs.to_string(),
                     "ok": good})
    return BridgeReport(ok, rows)


def tg(G: int) -> list[SqrtPiScaled]:
    """t_1..t_G, computed from both the PI and the top-pole forms and compared."""
    alpha = pi_alpha(G)
    tops = top_pole_sequence(2, G)
    out = []
    for g in range(1, G + 1):
        gam = gamma_half_integer(Fraction(5 * g - 1, 2))
        # 6**(g/2) = 6**(g//2) * sqrt(6)**(g%2)
        six = QuadExt(6 ** (g // 2)) * (SQRT6 if g % 2 else QuadExt(1))
        q = -(alpha[g] / six) / Fraction(2) ** (g - 2)
        if not q.is_rational():
            raise StructuralError(f"t_{g} from alpha is not rational times a pi power")
        from_alpha = SqrtPiScaled(q.a) / gam
        from_top = SqrtPiScaled(tops[g - 1] / Fraction(2) ** (7 * g - 3)) / gam
        if from_alpha != from_top:
            raise StructuralError(f"t_{g}: {from_alpha} != {from_top}")
        out.append(from_top)
    return out


T0 = SqrtPiScaled(2, -1)  # 2/sqrt(pi), quoted constant


def pinning_constants() -> tuple[PrimeExponentReal, PrimeExponentReal]:
    """(gamma_1, gamma_2) for nu = 2, with the matching relations asserted."""
    g2 = PrimeExponentReal({2: Fraction(3, 5), 3: Fraction(2, 5)})
    g1 = (g2 ** -3) / 4
    if g2 ** 5 != PrimeExponentReal.from_rational(72):
        raise StructuralError("gamma_2**5 != 72")
    if g1 * 192 != (g2 ** 2) * Fraction(2, 3):
        raise StructuralError("192 gamma_1 != (2/3) gamma_2**2")
    # first PI coefficient recovered from the top pole: -2 a / (192 gamma_1)**(5/2)
    a1 = top_pole_sequence(2, 1)[0]
    lhs = ((g1 * 192) ** Fraction(5, 2)).inverse() * (-2 * a1)
    alpha1 = PrimeExponentReal({2: Fraction(-7, 2), 3: Fraction(-1, 2)}, -1)  # -1/(8 sqrt 6)
    if lhs != alpha1:
        raise StructuralError("pinning constants do not reproduce alpha_1")
    return g1, g2


def shock_time(nu: int) -> Fraction:
    return Fraction((nu - 1) ** (nu - 1), c_nu(nu) * nu ** nu)


def caustic_constant(nu: int) -> Fraction:
    """K with ``(z0 - nu/(nu-1))**2 ~ K (s_c - s)`` as s -> s_c from below."""
    return Fraction(2 * c_nu(nu) * nu ** (nu + 1), (nu - 1) ** (nu + 2))


def caustic_constant_printed(nu: int) -> Fraction:
    """The variant with (nu-1)**nu in the denominator; equal to the above only at nu = 2."""
    return Fraction(2 * c_nu(nu) * nu ** (nu + 1), (nu - 1) ** nu)


@dataclass
class DoubleScalingReport:
    nu: int
    shock_time: Fraction
    caustic_constant: Fraction
    caustic_constant_printed: Fraction
    pole_coefficients: list[Fraction]   # (nu/(nu-1)) a_{3g-1}^{(g)}
    series_coefficients: list[Fraction]  # nu a_{3g-1}^{(g)} / (nu-1)**(5g)
    pinning: tuple | None = None

    def evaluate(self, xi, gamma1, N=None):
        """Leading N**(-2/5) coefficient of ``b_{N,N}^2 - nu/(nu-1)`` (series truncated).

        With ``Y = -K gamma1 xi`` this is ``-sqrt(Y) (1 - sum_g c_g Y**(-5g/2))``.
        """
        Y = -mpmath.mpf(self.caustic_constant.numerator) / self.caustic_constant.denominator \
            * mpmath.mpf(gamma1) * mpmath.mpf(xi)
        tot = mpmath.mpf(1)
        for g, cg in enumerate(self.series_coefficients, start=1):
            tot -= mpmath.mpf(cg.numerator) / cg.denominator * Y ** (-mpmath.mpf(5 * g) / 2)
        val = -mpmath.sqrt(Y) * tot
        if N is not None:
            val *= mpmath.mpf(N) ** (-mpmath.mpf(2) / 5)
        return val

    def to_json(self) -> dict:
        out = {
            "nu": self.nu,
            "shock_time": format_rational(self.shock_time),
            "caustic_constant": format_rational(self.caustic_constant),
            "caustic_constant_printed": format_rational(self.caustic_constant_printed),
            "pole_coefficients": [format_rational(x) for x in self.pole_coefficients],
            "series_coefficients": [format_rational(x) for x in self.series_coefficients],
        }
        if self.pinning:
            out["gamma1"], out["gamma2"] = (p.to_string() for p in self.pinning)
        return out


def double_scaling_series(nu: int, G: int) -> DoubleScalingReport:
    tops = top_pole_sequence(nu, G)
    return DoubleScalingReport(
        nu=nu,
        shock_time=shock_time(nu),
        caustic_constant=caustic_constant(nu),
        caustic_constant_printed=caustic_constant_printed(nu),
        pole_coefficients=[Fraction(nu, nu - 1) * a for a in tops],
        series_coefficients=[nu * a / Fraction(nu - 1) ** (5 * g) for g, a in enumerate(tops, 1)],
        pinning=pinning_constants() if nu == 2 else None,
    )


def divergence_ratios(nu: int, G: int) -> list[Fraction]:
    """``a^{(g+1)} / a^{(g)}`` for g = 1..G-1."""
    tops = top_pole_sequence(nu, G)
    return [tops[g] / tops[g - 1] for g in range(1, G)]
