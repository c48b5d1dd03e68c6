"""Grid verification suites shared by the CLI and the acceptance tests."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from .crystal import (
    AlphaWeight,
    CensusOverflow,
    dominant_maximal_check,
    enumerate_Z,
    lambda_mu_weight,
    weight_multiplicity,
)
from .mullineux import fixed_points_Z, gamma_is_maximal
from .qcount import (
    ballot_count,
    count_U,
    count_U_by_roots,
    dominant_maximal_weights,
    enumerate_S,
    q_lucas_verify,
    totient_count,
)
from .words import count_avoiding_involutions, count_avoiding_shuffles

SUITES = ("theorem-a", "theorem-b", "level-2", "prop-4-1", "q-lucas")


@dataclass
class VerificationReport:
    suite: str
    grid: dict[str, Any]
    cases: list[dict[str, Any]] = field(default_factory=list)
    status: str = "ok"
    wall_time: float = 0.0

    def as_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "grid": self.grid,
            "cases": self.cases,
            "status": self.status,
        }


def _run(suite: str, grid: dict, cases: Iterable[tuple[dict, Callable[[], dict]]]) -> VerificationReport:
    report = VerificationReport(suite, grid)
    start = time.perf_counter()
    for params, compute in cases:
        try:
            values = compute()
        except CensusOverflow as exc:
            report.cases.append({"params": params, "values": {}, "agree": False, "error": str(exc)})
            report.status = "aborted"
            break
        agree = values.pop("agree", None)
        if agree is None:
            agree = len({v for v in values.values()}) == 1
        report.cases.append({"params": params, "values": values, "agree": bool(agree)})
    if report.status == "ok" and not all(c["agree"] for c in report.cases):
        report.status = "failed"
    report.wall_time = time.perf_counter() - start
    return report


def multiplicity_case(p: int, k: int, s: int, ell: int) -> dict:
    target = lambda_mu_weight(p, ell, s)
    return {
        "multiplicity": weight_multiplicity(p, k, s, target),
        "z_count": len(enumerate_Z(p, k, s, ell)),
        "shuffle_count": count_avoiding_shuffles(s, ell, k),
    }


def multiplicity_grid(max_p: int, max_k: int, min_p: int = 2):
    for p in range(min_p, max_p + 1):
        for k in range(1, max_k + 1):
            for s in range(p):
                for ell in range(1, (p - s) // 2 + 1):
                    yield p, k, s, ell


def verify_multiplicities(max_p: int = 7, max_k: int = 3) -> VerificationReport:
    cases = (
        ({"p": p, "k": k, "s": s, "ell": ell}, (lambda p=p, k=k, s=s, ell=ell: multiplicity_case(p, k, s, ell)))
        for p, k, s, ell in multiplicity_grid(max_p, max_k)
    )
    return _run("theorem-a", {"p": [2, max_p], "k": [1, max_k]}, cases)


def fixed_point_case(p: int, k: int, ell: int) -> dict:
    fixed = fixed_points_Z(p, k, ell)
    inv = count_avoiding_involutions(ell, k)
    maximal = gamma_is_maximal(p, k, ell)
    return {"fixed_points": fixed, "involutions": inv, "gamma_maximal": maximal, "agree": fixed == inv and maximal}


def verify_fixed_points(max_p: int = 9, max_k: int = 3) -> VerificationReport:
    cases = (
        ({"p": p, "k": k, "ell": ell}, (lambda p=p, k=k, ell=ell: fixed_point_case(p, k, ell)))
        for p in range(2, max_p + 1)
        for k in range(1, max_k + 1)
        for ell in range(1, p // 2 + 1)
    )
    return _run("theorem-b", {"p": [2, max_p], "k": [1, max_k]}, cases)


def level2_case(p: int, s: int) -> dict:
    """Dominant maximal weights and multiplicities of ``Lambda_0 + Lambda_s``."""
    hw = AlphaWeight.highest(p, 1, s)
    expected = {(0,) * p: 1}
    for ell in range(1, (p - s) // 2 + 1):
        expected[lambda_mu_weight(p, ell, s)] = ballot_count(ell, s)
    for ell in range(1, s // 2 + 1):
        expected[lambda_mu_weight(p, ell, s, "mu")] = ballot_count(ell, p - s)
    found = {w.coeffs for w in dominant_maximal_weights(p, s, 1)}
    mults = {c: weight_multiplicity(p, 1, s, c) for c in expected}
    maximal = all(dominant_maximal_check(p, 1, s, hw.minus(c)) for c in expected)
    agree = found == set(expected) and mults == expected and maximal
    return {
        "weights": len(found),
        "expected_weights": len(expected),
        "multiplicities": [mults[c] for c in sorted(expected)],
        "ballot": [expected[c] for c in sorted(expected)],
        "maximal": maximal,
        "agree": agree,
    }


def verify_level2(max_p: int = 7) -> VerificationReport:
    cases = (
        ({"p": p, "s": s}, (lambda p=p, s=s: level2_case(p, s)))
        for p in range(2, max_p + 1)
        for s in range(p)
    )
    return _run("level-2", {"p": [2, max_p], "k": [1, 1]}, cases)


def totient_case(p: int, k: int) -> dict:
    return {
        "count_U": count_U(p, k),
        "totient": totient_count(p, k),
        "S": len(enumerate_S(p, 0, k)),
        "roots": count_U_by_roots(p, k),
    }


def verify_totient(max_p: int = 12, max_k: int = 8) -> VerificationReport:
    cases = (
        ({"p": p, "k": k}, (lambda p=p, k=k: totient_case(p, k)))
        for p in range(2, max_p + 1)
        for k in range(1, max_k + 1)
    )
    return _run("prop-4-1", {"p": [2, max_p], "k": [1, max_k]}, cases)


def verify_q_lucas(max_n: int = 30, max_d: int = 12) -> VerificationReport:
    def compute(n):
        failures = [[j, d] for j in range(n + 1) for d in range(1, max_d + 1) if not q_lucas_verify(n, j, d)]
        return {"checked": (n + 1) * max_d, "failures": failures, "agree": not failures}

    cases = (({"n": n}, (lambda n=n: compute(n))) for n in range(max_n + 1))
    return _run("q-lucas", {"n": [0, max_n], "d": [1, max_d]}, cases)


def run_suite(suite: str, max_p: int | None = None, max_k: int | None = None,
              max_n: int | None = None, max_d: int | None = None) -> VerificationReport:
    def pick(v, default):
        return default if v is None else v

    if suite == "theorem-a":
        return verify_multiplicities(pick(max_p, 7), pick(max_k, 3))
    if suite == "theorem-b":
        return verify_fixed_points(pick(max_p, 9), pick(max_k, 3))
    if suite == "level-2":
        return verify_level2(pick(max_p, 7))
    if suite == "prop-4-1":
        return verify_totient(pick(max_p, 12), pick(max_k, 8))
    if suite == "q-lucas":
        return verify_q_lucas(pick(max_n, 30), pick(max_d, 12))
    raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
