from itertools import chain

import pytest
from hypothesis import given, strategies as st

from cml.crystal import AlphaWeight, enumerate_Z, lambda_mu_weight, wt_partition
from cml.mullineux import (
    OrbitWeight,
    c_diag,
    fixed_points_Z,
    folded_cartan,
    folded_delta,
    folded_index_set,
    folded_type,
    format_orbit_weight,
    gamma_is_maximal,
    gamma_weight,
    mullineux,
    omega_root,
    omega_weight,
    orbit_c,
    orbit_multiplicity,
    parse_orbit_weight,
    transfer_to_alpha,
)
from cml.partitions import is_p_core, is_p_restricted, p_core, partitions_of, transpose
from cml.words import count_avoiding_involutions


def restricted(p, max_n):
    return [lam for lam in chain.from_iterable(partitions_of(n) for n in range(max_n + 1)) if is_p_restricted(lam, p)]


def test_examples():
    assert mullineux((), 3) == ()
    assert mullineux((2,), 3) == (1, 1)
    assert mullineux((2, 1, 1), 3) == (3, 1)
    with pytest.raises(ValueError):
        mullineux((2,), 2)


@pytest.mark.parametrize("p", range(2, 6))
def test_involution_twist_and_path_independence(p):
    for lam in restricted(p, 10):
        m = mullineux(lam, p)
        assert is_p_restricted(m, p)
        assert mullineux(m, p) == lam
        assert mullineux(lam, p, "max") == m
        assert wt_partition(m, 0, p).coeffs == omega_root(wt_partition(lam, 0, p).coeffs)


@pytest.mark.parametrize("p", range(2, 6))
def test_core_of_image_is_conjugate_core(p):
    # the block of mu(lam) is the block of the conjugate
    for lam in restricted(p, 9):
        assert p_core(mullineux(lam, p), p) == transpose(p_core(lam, p))


@pytest.mark.parametrize("p", range(2, 8))
def test_transpose_on_cores(p):
    for n in range(13):
        for lam in partitions_of(n):
            if is_p_core(lam, p):
                assert mullineux(lam, p) == transpose(lam)


def test_omega():
    w = AlphaWeight(5, 1, 0, (0, 1, 0, 0, 0))
    assert omega_weight(w).coeffs == (0, 0, 0, 0, 1)


@given(st.integers(2, 9).flatmap(lambda p: st.lists(st.integers(-5, 5), min_size=p, max_size=p)))
def test_omega_involution(c):
    assert omega_root(omega_root(c)) == tuple(c)


@pytest.mark.parametrize("p", range(2, 10))
def test_omega_swaps_distinguished_weights(p):
    for ell in range(1, p):
        for t in range(p):
            try:
                lam = lambda_mu_weight(p, ell, t)
            except ValueError:
                continue
            assert omega_root(lam) == lambda_mu_weight(p, ell, p - t, "mu")


@pytest.mark.parametrize("p", range(2, 12))
def test_folded_data(p):
    idx = folded_index_set(p)
    for i in idx:
        assert orbit_c(p, i, i) == c_diag(p, i)
    A = folded_cartan(p)
    d = folded_delta(p)
    assert all(sum(A[i][j] * d[j] for j in idx) == 0 for i in idx)
    assert all(A[i][i] == 2 for i in idx)


def test_delta_values():
    assert folded_delta(5) == (2, 2, 1)
    assert folded_delta(6) == (1, 1, 1, 1)
    assert folded_type(5) == "A2" and folded_type(6) == "D2"


def test_orbit_examples():
    mult, gamma = orbit_multiplicity(5, 1, 2)
    assert mult == 2 and gamma == OrbitWeight(5, 2, (2, 1, 0))
    assert orbit_multiplicity(6, 1, 2)[1].type_tag == "D2"
    assert gamma_is_maximal(5, 1, 2)
    assert fixed_points_Z(7, 1, 3) == 3
    for p in range(2, 8):
        assert fixed_points_Z(p, 2, 1) == 1


@pytest.mark.parametrize("p", range(2, 10))
def test_transfer_of_gamma(p):
    for ell in range(1, p // 2 + 1):
        assert transfer_to_alpha(gamma_weight(p, 1, ell)) == lambda_mu_weight(p, ell, 0)


def test_fixed_points_are_self_conjugate_tuples():
    tuples = enumerate_Z(5, 1, 0, 2)
    assert all(all(transpose(x) == x for x in node) for node in tuples)
    assert fixed_points_Z(5, 1, 2) == 2


@pytest.mark.parametrize("p,k", [(p, k) for p in range(2, 8) for k in (1, 2)])
def test_fixed_point_counts(p, k):
    for ell in range(1, p // 2 + 1):
        assert fixed_points_Z(p, k, ell) == count_avoiding_involutions(ell, k)


@given(st.integers(2, 12).flatmap(
    lambda p: st.builds(OrbitWeight, st.just(p), st.integers(0, 9),
                        st.lists(st.integers(-4, 9), min_size=len(folded_index_set(p)),
                                 max_size=len(folded_index_set(p))).map(tuple))))
def test_orbit_weight_round_trip(w):
    assert parse_orbit_weight(format_orbit_weight(w)) == w


def test_orbit_weight_format():
    assert format_orbit_weight(OrbitWeight(5, 2, (2, 1, 0))) == "2L0^ - [2,1,0] type=A2"
    with pytest.raises(ValueError):
        parse_orbit_weight("2L0^ - [2,1] type=B2")
