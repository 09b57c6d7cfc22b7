import random
from math import comb

import pytest
from hypothesis import given, strategies as st

from genus_engine.combinatorics import (Partition, c_nu, d_coeff_symmetric, d_coeff_walks,
                                        downturn_walks, monomial_symmetric, partitions,
                                        restricted_partitions, walk_locations, zeta)

# partition counts p(n) restricted to at most k parts
PARTITION_COUNTS = {(5, 5): 7, (7, 3): 8, (9, 4): 18, (9, 9): 30}


@pytest.mark.parametrize("n,k", sorted(PARTITION_COUNTS))
def test_partition_counts(n, k):
    ps = partitions(n, k)
    assert len(ps) == PARTITION_COUNTS[(n, k)]
    assert len(set(ps)) == len(ps)
    assert all(p.size == n and p.length <= k for p in ps)


def test_partition_string_round_trip():
    lam = Partition((3, 1, 1))
    assert str(lam) == "[3,1,1]"
    assert Partition.parse("[3,1,1]") == lam
    assert lam.multiplicities() == {3: 1, 1: 2}


def test_c_nu_values():
    assert [c_nu(n) for n in (2, 3, 4, 5)] == [12, 60, 280, 1260]
    with pytest.raises(ValueError):
        c_nu(1)


def test_zeta_at_nu2_is_catalan():
    assert [zeta(2, j) for j in range(6)] == [1, 1, 2, 5, 14, 42]


@pytest.mark.parametrize("nu", [2, 3, 4])
def test_d_equivalence_exhaustive(nu):
    for size in (1, 3, 5, 7, 9):
        for lam in partitions(size, nu + 1):
            assert d_coeff_symmetric(nu, lam) == d_coeff_walks(nu, lam), lam


@pytest.mark.parametrize("nu", [2, 3, 4, 5])
def test_d_small_partitions(nu):
    assert d_coeff_symmetric(nu, (3,)) == nu * c_nu(nu)
    assert d_coeff_symmetric(nu, (1,)) == c_nu(nu)


def test_d_known_values():
    assert d_coeff_walks(2, (3,)) == 24
    assert d_coeff_walks(2, (2, 1)) == 16
    assert d_coeff_walks(2, (1, 1, 1)) == 0
    assert d_coeff_walks(3, (1, 1, 1)) == 30


@given(st.integers(2, 4), st.sampled_from([1, 3, 5, 7]), st.data())
def test_d_values_are_even(nu, size, data):
    lam = data.draw(st.sampled_from(partitions(size, nu + 1)))
    assert d_coeff_symmetric(nu, lam) % 2 == 0


def test_d_rejects_bad_partitions():
    with pytest.raises(ValueError):
        d_coeff_symmetric(2, (2,))
    with pytest.raises(ValueError):
        d_coeff_walks(2, (1, 1, 1, 1, 1))


@pytest.mark.parametrize("nu", range(2, 7))
def test_walk_bijection_size(nu):
    assert len(restricted_partitions(nu)) == len(downturn_walks(nu)) == comb(2 * nu, nu + 1)


def test_walk_locations():
    # all downturns first: +1 -> 0 -> -1 -> -2 then back up
    assert walk_locations((1, 2, 3)) == (0, -1, -2)
    assert walk_locations((2, 3, 4)) == (1, 0, -1)


@given(st.lists(st.integers(-5, 5), min_size=4, max_size=4), st.randoms())
def test_monomial_symmetric_is_symmetric(x, rnd):
    lam = Partition((2, 1, 1))
    y = list(x)
    rnd.shuffle(y)
    assert monomial_symmetric(lam, x) == monomial_symmetric(lam, y)


def test_monomial_symmetric_small():
    # m_(1,1)(a,b,c) = ab + ac + bc
    assert monomial_symmetric(Partition((1, 1)), [2, 3, 5]) == 6 + 10 + 15
    assert monomial_symmetric(Partition((2,)), [1, 2]) == 5
