from fractions import Fraction

import pytest

from genus_engine.energy import EnergyEngine, e0, e1, energy_engine, kappa, solve_eg
from genus_engine.errors import FitError
from genus_engine.fixtures import e2_reference
from genus_engine.symbolics import RationalZ0, series_compose

import oracles

# frozen from the Hankel-determinant oracle: j! [s^j] e_g at nu = 2, j = 1..7
KAPPA_NU2 = {
    0: [2, 36, 1728, 145152, 17915904, 2956124160, 614873825280],
    1: [1, 60, 6336, 964224, 192098304, 47357706240, 13922807316480],
    2: [0, 0, 1440, 770688, 348033024, 158525890560, 76300251955200],
    3: [0, 0, 0, 0, 58060800, 92253634560, 100275872071680],
}


@pytest.mark.parametrize("nu", [2, 3, 4, 5])
def test_e2_matches_reference(nu):
    e = solve_eg(nu, 2)
    assert e.rational() == e2_reference(nu)
    assert (e.d, e.o) == (4, 5)


@pytest.mark.parametrize("nu", [2, 3])
def test_higher_shapes(nu):
    assert (solve_eg(nu, 3).d, solve_eg(nu, 3).o) == (9, 10)


@pytest.mark.parametrize("g", [0, 1, 2, 3])
def test_kappa_frozen(g):
    assert energy_engine(2).kappa_table(g, 7) == KAPPA_NU2[g]


@pytest.mark.parametrize("nu", [2, 3])
def test_series_against_hankel_oracle(nu):
    J = 7 if nu == 2 else 5
    ref = oracles.e_series_by_genus(nu, J)
    for g in range(0, 4):
        got = series_compose(energy_engine(nu).eg(g).value, nu, J)
        assert list(got.coeffs) == ref.get(g, [0] * (J + 1))


@pytest.mark.parametrize("nu", [2, 3])
def test_kappa_nonnegative_integers(nu):
    for g in range(4):
        assert all(isinstance(v, int) and v >= 0 for v in energy_engine(nu).kappa_table(g, 10))
    assert kappa(nu, 1, 1) == energy_engine(nu).kappa_table(1, 1)[0]


@pytest.mark.parametrize("nu", [2, 3, 4])
def test_regular_at_zero_and_vanishing_at_one(nu):
    for g in (2, 3):
        r = solve_eg(nu, g).rational()
        assert r.z0_pole == 0
        assert r.value_at_one() == 0


def test_operator_residual_is_exact():
    ee = energy_engine(2)
    for g in (2, 3):
        assert ee._operator(g, ee.eg(g).rational()) == ee.drivers(g)


def test_drivers_vanish_at_one():
    ee = energy_engine(3)
    for g in (1, 2, 3):
        d = ee.drivers(g)
        assert isinstance(d, RationalZ0) and d.value_at_one() == 0


def test_resonant_coefficients_vanish_nu2():
    ee = energy_engine(2)
    for g in (2, 3, 4):
        ds = series_compose(ee.drivers(g), 2, 2 * g)
        assert ds[2 * g - 2] == 0 and ds[2 * g - 1] == 0


def test_low_genus_closed_forms():
    assert e1(2).log_u == Fraction(-1, 12)
    # e_0 vanishes at z0 = 1 (s = 0)
    assert e0(4).value_at_one() == 0


def test_unweighted_drivers_do_not_fit():
    # dropping the (nu-1)**j weights leaves no rational solution at nu = 3
    with pytest.raises(FitError):
        EnergyEngine(3, weight_power=False).eg(2)


def test_json_shape():
    doc = solve_eg(2, 2).to_json()
    assert doc["u_pole"] == 5 and doc["d"] == 4 and doc["o"] == 5
    assert RationalZ0.from_json(2, {"numerator": doc["numerator"], "z0_pole": 0,
                                    "u_pole": doc["u_pole"]}) == solve_eg(2, 2).rational()
