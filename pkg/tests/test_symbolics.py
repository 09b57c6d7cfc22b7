from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from genus_engine.combinatorics import c_nu
from genus_engine.errors import ResonanceError, StructuralError
from genus_engine.symbolics import (LaurentU, LogExtendedZ0, PolyQ, PowerSeriesS, RationalZ0,
                                    laurent_antiderivative_u, s_derivative, s_variable,
                                    series_compose, series_log_coefficient, theta, u_poly,
                                    z0_power_to_u, z0_series)

small = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 7))
polys = st.lists(small, min_size=1, max_size=5).map(PolyQ)
nus = st.integers(2, 5)


@st.composite
def rationals_z0(draw, nu=None):
    nu = nu or draw(nus)
    return RationalZ0(nu, draw(polys), draw(st.integers(0, 2)), draw(st.integers(0, 3)))


@st.composite
def pairs(draw):
    nu = draw(nus)
    return draw(rationals_z0(nu)), draw(rationals_z0(nu))


def _recanon(r):
    return RationalZ0(r.nu, r.numerator, r.z0_pole, r.u_pole)


# ---------------------------------------------------------------- PolyQ

@given(polys, polys)
def test_poly_divmod(a, b):
    if b.is_zero():
        return
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


def test_poly_exact_div_raises():
    with pytest.raises(StructuralError):
        PolyQ([1, 0, 1]).exact_div(PolyQ([-1, 1]))


def test_poly_substitute_and_eval():
    p = PolyQ([1, 2, 3], "u")
    q = p.substitute_linear(2, -1, "z0")  # u = 2 - z0
    assert q(Fraction(1, 2)) == p(Fraction(3, 2))
    assert PolyQ([0, 0, 5]).valuation() == 2


# ---------------------------------------------------------------- LaurentU

def test_laurent_trim_and_poles():
    f = LaurentU(-3, [0, 2, 0, 5, 0])
    assert f.min_degree == -2 and f.max_degree == 0
    assert f.pole_orders() == (0, 2)


def test_antiderivative_rejects_residue():
    with pytest.raises(ResonanceError) as info:
        laurent_antiderivative_u(2, LaurentU.monomial(-1, 3))
    assert info.value.coefficient == 3


@given(st.integers(2, 5), st.integers(-6, 4).filter(lambda k: k != -1), small)
def test_antiderivative_differentiates_back(nu, k, c):
    # d/dz of F(u(z)) = -(nu-1) F'(u)
    F = laurent_antiderivative_u(nu, LaurentU.monomial(k, c))
    dF = {j - 1: -(nu - 1) * j * a for j, a in F.items()}
    assert LaurentU.from_dict(dF) == LaurentU.monomial(k, c)


@given(st.integers(2, 5), st.integers(0, 6))
def test_z0_power_to_u(nu, m):
    f = z0_power_to_u(nu, m)
    x = Fraction(1, 3)
    assert f(Fraction(nu) - (nu - 1) * x) == x ** m


# ---------------------------------------------------------------- RationalZ0

@given(pairs())
def test_canonical_after_arithmetic(p):
    a, b = p
    for r in (a + b, a - b, a * b, a.deriv(), theta(a)):
        assert r.is_canonical()
        assert _recanon(r) == r


@given(pairs())
@settings(max_examples=40, deadline=None)
def test_compose_is_a_ring_homomorphism(p):
    a, b = p
    nu, M = a.nu, 8
    sa, sb = series_compose(a, nu, M), series_compose(b, nu, M)
    assert series_compose(a + b, nu, M) == sa + sb
    assert series_compose(a * b, nu, M) == sa * sb


@given(rationals_z0(), st.integers(2, 12))
@settings(max_examples=20, deadline=None)
def test_s_derivative_commutes_with_composition(f, M):
    lhs = series_compose(s_derivative(f, f.nu), f.nu, M - 1)
    assert lhs == series_compose(f, f.nu, M).deriv()


@given(rationals_z0())
def test_json_round_trip(f):
    assert RationalZ0.from_json(f.nu, f.to_json()) == f


def test_canonical_cancels_common_factors():
    r = RationalZ0(2, u_poly(2) * PolyQ([0, 0, 3]), 1, 2)
    assert (r.z0_pole, r.u_pole) == (0, 1)
    assert r.numerator == PolyQ([0, 3])


def test_text_form():
    r = RationalZ0(3, PolyQ([1, 2]), 1, 2)
    assert r.to_string() == "((1) + (2)*z0) / (z0^1 * (nu-(nu-1)*z0)^2)"


def test_negative_pole_rejected():
    with pytest.raises(ValueError):
        RationalZ0(2, PolyQ([1]), -1, 0)


def test_s_variable_and_theta():
    nu = 3
    s = s_variable(nu)
    assert series_compose(s, nu, 6) == PowerSeriesS([0, 1, 0, 0, 0, 0, 0])
    # theta s = s
    assert theta(s) == s


def test_log_terms_derivative():
    f = LogExtendedZ0(RationalZ0.const(2, 0), Fraction(1, 2), Fraction(-1, 12))
    ser = series_compose(f, 2, 6)
    assert ser.deriv() == series_compose(s_derivative(f, 2), 2, 5)


# ---------------------------------------------------------------- power series

@pytest.mark.parametrize("nu", [2, 3, 4, 5])
def test_z0_series_solves_the_defining_equation(nu):
    M = 20
    z = z0_series(nu, M)
    s = PowerSeriesS([0, 1] + [0] * (M - 1))
    resid = PowerSeriesS.const(1, M) - z + s * z ** nu * c_nu(nu)
    assert not any(resid.coeffs)


def test_z0_series_quartic_values():
    assert list(z0_series(2, 4).coeffs) == [1, 12, 288, 8640, 290304]


@given(st.lists(small, min_size=2, max_size=8))
def test_series_inverse(cs):
    a = PowerSeriesS([Fraction(1)] + cs[1:])
    one = a * a.inverse()
    assert one == PowerSeriesS.const(1, a.order)


def test_log_coefficient_small_cases():
    nu = 2
    z0 = RationalZ0.z0(nu)
    z1 = RationalZ0.const(nu, 3)
    z2 = RationalZ0.const(nu, 5)
    # log(z0 + 3 n^-2 + 5 n^-4): n^-2 -> 3/z0, n^-4 -> 5/z0 - 9/(2 z0^2)
    assert series_log_coefficient([z0, z1, z2], 1) == RationalZ0.monomial(nu, -1, 0, 3)
    expect = RationalZ0.monomial(nu, -1, 0, 5) - RationalZ0.monomial(nu, -2, 0, Fraction(9, 2))
    assert series_log_coefficient([z0, z1, z2], 2) == expect
