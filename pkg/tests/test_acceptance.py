"""Acceptance criteria, one test per criterion.

Each test runs its grid at the stated bounds and time limits; the summary
at the end of the pytest run prints one PASS/FAIL line per criterion.
"""
import time
from itertools import chain, product

import pytest

from cml.crystal import enumerate_Z, explore, lambda_mu_weight, weight_multiplicity
from cml.mullineux import mullineux
from cml.partitions import is_p_core, is_p_restricted, partitions_of, transpose
from cml.plane import (
    enumerate_v3,
    iter_cspp,
    phi_map,
    pi_inverse,
    pi_map,
    plane_partitions,
    psi_map,
)
from cml.qcount import ballot_count, count_U, enumerate_S, totient_count
from cml.verify import multiplicity_case, multiplicity_grid, verify_fixed_points, verify_q_lucas, verify_totient
from cml.words import count_avoiding_permutations, count_avoiding_shuffles, lds_length, rsk_insert, rsk_inverse

GRID_LIMIT = 15 * 60
CASE_LIMIT = 60.0
Q_LUCAS_LIMIT = 30.0


def detail(request, text):
    request.node.user_properties.append(("detail", text))


@pytest.fixture(scope="module")
def grid_a():
    """Every case of the (p, k, s, ell) grid with its values and wall time."""
    rows = []
    start = time.perf_counter()
    for p, k, s, ell in multiplicity_grid(7, 3):
        t0 = time.perf_counter()
        values = multiplicity_case(p, k, s, ell)
        rows.append(((p, k, s, ell), values, time.perf_counter() - t0))
    return rows, time.perf_counter() - start


@pytest.mark.criterion(1, "multiplicity = #Z = avoiding shuffles on p<=7, k<=3")
def test_criterion_1_three_routes(grid_a, request):
    rows, total = grid_a
    bad = [c for c, v, _ in rows if len(set(v.values())) != 1]
    slowest = max(t for _, _, t in rows)
    detail(request, f"{len(rows)} cases, total {total:.1f}s, slowest case {slowest:.2f}s")
    assert len(rows) == sum(1 for _ in multiplicity_grid(7, 3))
    assert not bad, bad
    assert total < GRID_LIMIT
    assert slowest < CASE_LIMIT


@pytest.mark.criterion(2, "level-2 values are ballot numbers")
def test_criterion_2_ballot(grid_a, request):
    rows, _ = grid_a
    level2 = {(p, s, ell): v["multiplicity"] for (p, k, s, ell), v, _ in rows if k == 1}
    assert level2[(5, 0, 2)] == 2
    assert level2[(7, 1, 2)] == 5
    bad = [c for c, m in level2.items() if m != ballot_count(c[2], c[1])]
    detail(request, f"{len(level2)} cases")
    assert not bad, bad


@pytest.mark.criterion(3, "Mullineux fixed points = avoiding involutions, gamma maximal, p<=9, k<=3")
def test_criterion_3_fixed_points(request):
    report = verify_fixed_points(9, 3)
    detail(request, f"{len(report.cases)} cases, {report.wall_time:.1f}s")
    assert report.status == "ok", [c for c in report.cases if not c["agree"]]
    assert all(c["values"]["gamma_maximal"] for c in report.cases)


@pytest.mark.criterion(4, "s=0 rows = brute-force avoiding permutations")
def test_criterion_4_permutations(grid_a, request):
    rows, _ = grid_a
    brute = {(ell, k): count_avoiding_permutations(ell, k) for ell in range(1, 9) for k in (1, 2, 3)}
    s0 = [(c, v) for c, v, _ in rows if c[2] == 0]
    bad = [c for c, v in s0 if v["shuffle_count"] != brute[(c[3], c[1])]]
    assert not bad, bad
    # shuffles of 1..ell are the permutations themselves, up to ell = 8
    for (ell, k), n in brute.items():
        assert count_avoiding_shuffles(0, ell, k) == n
    # the crystal and Z routes past the main grid, with p = 2*ell
    extra = 0
    for ell in range(4, 6):
        for k in (1, 2):
            p = 2 * ell
            assert len(enumerate_Z(p, k, 0, ell)) == brute[(ell, k)]
            assert weight_multiplicity(p, k, 0, lambda_mu_weight(p, ell, 0)) == brute[(ell, k)]
            extra += 1
    detail(request, f"{len(s0)} grid rows, brute force for ell<=8, {extra} extra crystal cases")


@pytest.mark.criterion(5, "count_U = totient formula = |S| for p<=12, k<=8")
def test_criterion_5_totient(request):
    assert count_U(2, 2) == totient_count(2, 2) == len(enumerate_S(2, 0, 2)) == 2
    assert count_U(3, 1) == totient_count(3, 1) == len(enumerate_S(3, 0, 1)) == 1
    assert count_U(4, 2) == totient_count(4, 2) == len(enumerate_S(4, 0, 2)) == 3
    report = verify_totient(12, 8)
    detail(request, f"{len(report.cases)} cases")
    assert report.status == "ok", [c for c in report.cases if not c["agree"]]


@pytest.mark.criterion(6, "q-Lucas at roots of unity, n<=30, d<=12, under 30 s")
def test_criterion_6_q_lucas(request):
    start = time.perf_counter()
    report = verify_q_lucas(30, 12)
    elapsed = time.perf_counter() - start
    checked = sum(c["values"]["checked"] for c in report.cases)
    detail(request, f"{checked} identities, {elapsed:.2f}s")
    assert report.status == "ok"
    assert elapsed < Q_LUCAS_LIMIT


@pytest.mark.criterion(7, "RSK, Pi and Phi/Psi round trips")
def test_criterion_7_round_trips(request):
    n_words = 0
    for length in range(1, 9):
        for w in product(range(1, 6), repeat=length):
            P, Q = rsk_insert(w)
            assert rsk_inverse(P, Q) == w
            assert len(P) == lds_length(w)
            n_words += 1

    n_pairs = 0
    for lam in chain.from_iterable(partitions_of(n) for n in range(1, 7)):
        tabs = list(iter_cspp(lam, 4))
        for P in tabs:
            for Q in tabs:
                assert pi_inverse(pi_map(P, Q)) == (P, Q)
                n_pairs += 1

    n_pp = 0
    for n in range(9):
        for pi in plane_partitions(n):
            assert pi_map(*pi_inverse(pi)) == pi
            n_pp += 1

    n_v3 = 0
    for k, s, ell in sorted({(k, s, ell) for _, k, s, ell in multiplicity_grid(7, 3)}):
        for pi in enumerate_v3(k, s, ell):
            assert psi_map(phi_map(pi, k, s, ell), k, s, ell) == pi
            n_v3 += 1
    for p, k, s, ell in multiplicity_grid(7, 3):
        for z in enumerate_Z(p, k, s, ell):
            assert phi_map(psi_map(z, k, s, ell), k, s, ell) == z
    detail(request, f"{n_words} words, {n_pairs} tableau pairs, {n_pp} plane partitions, {n_v3} V3 elements")


@pytest.mark.criterion(8, "level-one depth counts; Mullineux involutive and transpose on cores")
def test_criterion_8_crystal_sanity(request):
    n_checked = 0
    for p in range(2, 8):
        raw = explore(p, 0, 0, 12)
        by_depth = [0] * 13
        for c, n in raw.items():
            by_depth[sum(c)] += n
        for n in range(13):
            assert by_depth[n] == sum(1 for lam in partitions_of(n) if is_p_restricted(lam, p))
        for lam in chain.from_iterable(partitions_of(n) for n in range(13)):
            if is_p_restricted(lam, p):
                assert mullineux(mullineux(lam, p), p) == lam
                n_checked += 1
            if is_p_core(lam, p):
                assert mullineux(lam, p) == transpose(lam)
    detail(request, f"{n_checked} restricted partitions")
