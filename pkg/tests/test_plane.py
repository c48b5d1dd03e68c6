from itertools import chain

import pytest
from hypothesis import given, strategies as st

from cml.crystal import enumerate_Z, lambda_mu_weight, node_weight
from cml.partitions import cells, partitions_of, transpose
from cml.plane import (
    BetaWeight,
    PlanePartition,
    beta_transfer,
    beta_weight_pp,
    enumerate_v3,
    format_plane_partition,
    frobenius_coordinates,
    frobenius_partition,
    is_cspp,
    iter_cspp,
    lambda_hat,
    parse_plane_partition,
    phi_map,
    pi_inverse,
    pi_map,
    plane_partitions,
    psi_map,
    square_weight,
    tableau_shape,
    v2_to_v3,
    v3_violations,
)
from cml.verify import multiplicity_grid
from cml.words import count_avoiding_shuffles, enumerate_shuffles, lds_length, shuffle_to_v2

SHAPES = list(chain.from_iterable(partitions_of(n) for n in range(1, 5)))


def cspp_pairs(max_entry=3):
    for lam in SHAPES:
        tabs = list(iter_cspp(lam, max_entry))
        for P in tabs:
            for Q in tabs:
                yield P, Q


def test_frobenius_examples():
    assert frobenius_partition((1,), (1,)) == (1,)
    assert frobenius_partition((3,), (1,)) == (3,)
    assert frobenius_partition((2, 1), (3, 1)) == (2, 2, 1)
    assert frobenius_partition((), ()) == ()
    with pytest.raises(ValueError):
        frobenius_partition((2,), (1, 1))
    with pytest.raises(ValueError):
        frobenius_partition((1, 1), (2, 1))


@pytest.mark.parametrize("n", range(13))
def test_frobenius_round_trip(n):
    for lam in partitions_of(n):
        assert frobenius_partition(*frobenius_coordinates(lam)) == lam


def test_pi_examples():
    assert pi_map(((1,),), ((1,),)) == PlanePartition(((1,),))
    pi = pi_map(((2, 1),), ((2, 1),))
    assert pi.cols == ((2, 1), (1,))
    assert pi.rows() == ((2, 1), (1,))
    with pytest.raises(ValueError):
        pi_map(((1,),), ((1, 1),))


def test_beta_weight_examples():
    assert beta_weight_pp(PlanePartition(((1,),))) == BetaWeight({0: 1})
    assert beta_weight_pp(PlanePartition.from_rows([[2, 1], [1]])) == BetaWeight({-1: 1, 0: 2, 1: 1})
    assert beta_weight_pp(PlanePartition(())).is_zero()


def test_transfer_examples():
    assert beta_transfer(BetaWeight({-1: 1}), 5) == (0, 0, 0, 0, 1)
    assert beta_transfer(BetaWeight({0: 1, 3: 1}), 3) == (2, 0, 0)
    assert beta_transfer(lambda_hat(2, 0), 5) == lambda_mu_weight(5, 2, 0)


def test_lambda_hat_examples():
    assert lambda_hat(1, 0) == BetaWeight({0: 1})
    assert lambda_hat(2, 0) == BetaWeight({-1: 1, 0: 2, 1: 1})
    assert lambda_hat(1, 1) == BetaWeight({0: 1, 1: 1})


@pytest.mark.parametrize("ell", range(1, 6))
@pytest.mark.parametrize("s", range(6))
def test_lambda_hat_is_square_minus_strip(ell, s):
    n = ell + s
    strip = BetaWeight.from_cells(cells((s,) * n)) if s else BetaWeight()
    assert lambda_hat(ell, s) == square_weight(n) - strip


@pytest.mark.parametrize("p", range(2, 9))
def test_lambda_hat_transfers_to_distinguished_weight(p):
    for ell in range(1, p):
        for s in range(p):
            if ell + s < p - ell + 1:
                assert beta_transfer(lambda_hat(ell, s), p) == lambda_mu_weight(p, ell, s)


def test_pi_round_trip_pairs():
    n = 0
    for P, Q in cspp_pairs():
        pi = pi_map(P, Q)
        assert pi_inverse(pi) == (P, Q)
        n += 1
    assert n > 0


def box_count_weight(P, Q):
    c = {}
    top = max(x for row in chain(P, Q) for x in row)
    for i in range(top):
        c[i] = sum(1 for row in P for x in row if x > i)
    for i in range(1, top + 1):
        c[-i] = sum(1 for row in Q for x in row if x > i)
    return BetaWeight(c)


def test_weight_identity_and_width():
    for P, Q in cspp_pairs():
        pi = pi_map(P, Q)
        lam = tableau_shape(P)
        assert lam[0] == len(pi.cols)
        assert beta_weight_pp(pi) == box_count_weight(P, Q)
        # swapping the pair transposes every column
        assert pi_map(Q, P).cols == tuple(transpose(c) for c in pi.cols)


@pytest.mark.parametrize("n", range(9))
def test_plane_partition_round_trip(n):
    for pi in plane_partitions(n):
        assert pi.total() == n
        P, Q = pi_inverse(pi)
        assert is_cspp(P) and is_cspp(Q)
        assert pi_map(P, Q) == pi


def test_plane_partition_counts():
    assert [sum(1 for _ in plane_partitions(n)) for n in range(9)] == [1, 1, 3, 6, 13, 24, 48, 86, 160]


def test_plane_partition_validation():
    with pytest.raises(ValueError):
        PlanePartition(((1,), (2,)))
    with pytest.raises(ValueError):
        PlanePartition.from_rows([[1, 2]])


@given(st.integers(0, 8).flatmap(lambda n: st.sampled_from(list(plane_partitions(n)))))
def test_plane_partition_text_round_trip(pi):
    assert parse_plane_partition(format_plane_partition(pi)) == pi


def test_plane_partition_text_format():
    assert format_plane_partition(PlanePartition.from_rows([[2, 1], [1]])) == "[[2,1],[1]]"
    assert format_plane_partition(PlanePartition(())) == "[]"


def test_v3_example():
    v3 = enumerate_v3(1, 1, 1)
    assert [pi.cols for pi in v3] == [((2, 1), (1,)), ((2, 2),)]
    images = [phi_map(pi, 1, 1, 1) for pi in v3]
    assert images == [((1,), (1,)), ((1, 1), ())]
    assert [psi_map(z, 1, 1, 1) for z in images] == v3


def test_phi_example():
    assert phi_map(PlanePartition.from_rows([[2, 1], [1]]), 1, 0, 2) == ((2, 1), (1,))


def test_violation_messages():
    bad = PlanePartition(((1,),))
    msgs = v3_violations(bad, 1, 1, 1)
    assert any("first column" in m for m in msgs)
    assert any("weight" in m for m in msgs)
    with pytest.raises(ValueError, match="not in V3"):
        phi_map(bad, 1, 1, 1)
    wide = PlanePartition(((1,), (1,), (1,)))
    assert any("column 3" in m for m in v3_violations(wide, 1, 0, 1))
    with pytest.raises(ValueError):
        psi_map(((1,),), 1, 0, 1)


V3_CASES = sorted({(k, s, ell) for p, k, s, ell in multiplicity_grid(6, 3)})


@pytest.mark.parametrize("k,s,ell", V3_CASES)
def test_phi_psi_and_weights(k, s, ell):
    v3 = enumerate_v3(k, s, ell)
    images = [phi_map(pi, k, s, ell) for pi in v3]
    assert [psi_map(z, k, s, ell) for z in images] == v3
    for p in range(2 * ell + s, 8):
        z = enumerate_Z(p, k, s, ell)
        assert sorted(images) == z
        target = lambda_mu_weight(p, ell, s)
        for node in z:
            assert node_weight(node, s, p).coeffs == target
            assert beta_weight_pp(psi_map(node, k, s, ell)) == square_weight(ell + s)


@pytest.mark.parametrize("k,s,ell", [c for c in V3_CASES if sum(c[1:]) <= 5])
def test_shuffle_chain(k, s, ell):
    v3 = set(enumerate_v3(k, s, ell))
    seen = set()
    for w in enumerate_shuffles(s, ell):
        if lds_length(w) > k + 1:
            continue
        pi = v2_to_v3(*shuffle_to_v2(w))
        assert not v3_violations(pi, k, s, ell)
        seen.add(pi)
    assert seen == v3
    assert len(seen) == count_avoiding_shuffles(s, ell, k)
