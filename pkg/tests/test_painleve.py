from fractions import Fraction

import mpmath
import pytest

from genus_engine.exactnum import PrimeExponentReal, QuadExt, SqrtPiScaled
from genus_engine.hierarchy import engine
from genus_engine.painleve import (SQRT6, caustic_constant, caustic_constant_printed, check_pi_bridge,
                                   divergence_ratios, double_scaling_series, bridge_rhs, pi_alpha,
                                   pinning_constants, shock_time, tg, top_pole_sequence)


def _pi_residual(alpha, X):
    """y'' - 6 y**2 - x at x = -X for the truncated series."""
    X = mpmath.mpf(X)
    r6 = mpmath.sqrt(6)
    y = ypp = mpmath.mpf(0)
    for g, a in enumerate(alpha):
        c = (mpmath.mpf(a.a.numerator) / a.a.denominator
             + mpmath.mpf(a.b.numerator) / a.b.denominator * r6) / r6
        p = mpmath.mpf(1) / 2 - mpmath.mpf(5 * g) / 2
        y += c * X ** p
        ypp += c * p * (p - 1) * X ** (p - 2)  # d/dx = -d/dX twice
    return ypp - 6 * y * y + X


def test_alpha_solves_the_equation_asymptotically():
    with mpmath.workdps(60):
        alpha = pi_alpha(5)
        small = abs(_pi_residual(alpha, 10 ** 4))
        bad = list(alpha)
        bad[3] = bad[3] * 2
        assert small < mpmath.mpf(10) ** -30
        assert abs(_pi_residual(bad, 10 ** 4)) > 10 ** 8 * small


def test_alpha_values():
    a = pi_alpha(3)
    assert a[1] == QuadExt(0, Fraction(-1, 48))
    assert a[2] == QuadExt(Fraction(-49, 768))


def test_alpha_parity():
    for g, a in enumerate(pi_alpha(12)):
        assert (a * SQRT6 ** (g % 2)).is_rational()


@pytest.mark.parametrize("nu", [2, 3])
def test_top_pole_matches_hierarchy(nu):
    assert top_pole_sequence(nu, 4) == [engine(nu).zg(g).coeffs[-1] for g in range(1, 5)]


def test_pi_bridge_identity():
    rep = check_pi_bridge(8)
    assert rep.ok and len(rep.rows) == 8
    assert bridge_rhs(1, pi_alpha(1)[1]) == QuadExt(Fraction(2, 3))


def test_top_pole_quadratic_recursion():
    a = [None] + top_pole_sequence(2, 9)
    for g in range(1, 9):
        quad = sum(a[m] * a[g + 1 - m] for m in range(1, g + 1))
        assert a[g + 1] == Fraction(4, 3) * (25 * g * g - 1) * a[g] + quad


def test_tg_values():
    t = tg(6)
    assert t[0] == SqrtPiScaled(Fraction(1, 24))
    assert t[1] == SqrtPiScaled(Fraction(7, 4320), -1)
    assert t[1].to_string() == "7/4320 * pi^(-1/2)"
    assert t[2] == SqrtPiScaled(Fraction(245, 15925248))
    for g, x in enumerate(t, start=1):
        assert x.pi_half_exponent == (-1 if g % 2 == 0 else 0)


def test_pinning_constants():
    g1, g2 = pinning_constants()
    assert g2 ** 5 == PrimeExponentReal.from_rational(72)
    assert g1 == (g2 ** -3) / 4
    assert g1.to_string() == "2^(-19/5) * 3^(-6/5)"


def test_shock_time():
    assert shock_time(2) == Fraction(1, 48)
    for nu in range(2, 7):
        assert shock_time(nu) == Fraction((nu - 1) ** (nu - 1), engine(nu).c * nu ** nu)


def test_caustic_constants():
    assert caustic_constant(2) == caustic_constant_printed(2) == 192
    assert caustic_constant(3) * 4 == caustic_constant_printed(3)


@pytest.mark.parametrize("nu", [2, 3, 4])
def test_divergence_witness(nu):
    ratios = divergence_ratios(nu, 10)
    for g in range(2, 10):
        assert ratios[g - 1] >= g * g


def test_double_scaling_report():
    rep = double_scaling_series(2, 3)
    assert rep.series_coefficients[0] == Fraction(4, 3)
    doc = rep.to_json()
    assert doc["gamma2"] == "2^(3/5) * 3^(2/5)"
    assert double_scaling_series(3, 2).pinning is None
    # Y**(1/2) dominates for large Y
    with mpmath.workdps(30):
        v = rep.evaluate(-10 ** 6, 1 / float(rep.caustic_constant))
        assert abs(v / -mpmath.sqrt(10 ** 6) - 1) < 1e-10


def test_bad_arguments():
    with pytest.raises(ValueError):
        pi_alpha(-1)
    with pytest.raises(ValueError):
        top_pole_sequence(1, 3)
