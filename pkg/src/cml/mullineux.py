"""Mullineux involution and the folded (orbit) algebra of type A^(2) / D^(2).

The diagram automorphism ``i -> -i`` of A^(1)_{p-1} folds it to A^(2)_{p-1}
for odd ``p`` and to D^(2)_{1+p/2} for even ``p``.  Fixed points of the
entrywise Mullineux map on the level-``k+1`` component carry the weights of
the folded algebra.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .crystal import (
    AlphaWeight,
    cartan_entry,
    e_op,
    enumerate_Z,
    f_op,
    lambda_mu_weight,
    signature,
)
from .partitions import Partition, is_p_restricted, transpose


def mullineux(lam: Partition, p: int, strategy: str = "min") -> Partition:
    """Strip ``lam`` to the empty partition with ``e_i``'s, then rebuild with ``f_{-i}``'s.

    ``strategy`` picks which raisable residue to strip first (``"min"`` or
    ``"max"``); the result does not depend on it.
    """
    if not is_p_restricted(lam, p):
        raise ValueError(f"{lam} is not {p}-restricted")
    path = []
    cur = lam
    while cur:
        live = [i for i in range(p) if signature(cur, i, 0, p).eps > 0]
        i = min(live) if strategy == "min" else max(live)
        path.append(i)
        cur = e_op(cur, i, 0, p)
    out: Partition = ()
    for i in reversed(path):
        nxt = f_op(out, (-i) % p, 0, p)
        if nxt is None:
            raise AssertionError(f"f_{(-i) % p} undefined while twisting {lam}")
        out = nxt
    return out


def omega_root(coeffs) -> tuple[int, ...]:
    """Move the coefficient of ``alpha_i`` to ``alpha_{-i}``."""
    p = len(coeffs)
    return tuple(coeffs[(-i) % p] for i in range(p))


def omega_weight(w: AlphaWeight) -> AlphaWeight:
    return AlphaWeight(w.p, w.k, (-w.s) % w.p, omega_root(w.coeffs))


# ---------------------------------------------------------------------------
# folded Cartan data


def folded_type(p: int) -> str:
    return "A2" if p % 2 else "D2"


def folded_index_set(p: int) -> range:
    return range((p - 1) // 2 + 1) if p % 2 else range(p // 2 + 1)


def orbit(p: int, i: int) -> list[int]:
    i %= p
    return [i] if (-i) % p == i else [i, (-i) % p]


def orbit_c(p: int, i: int, j: int) -> int:
    """``c_ij``: sum of ``a_{i, w^r(j)}`` over the orbit of ``j``."""
    return sum(cartan_entry(p, i, jj) for jj in orbit(p, j))


def c_diag(p: int, i: int) -> int:
    """Closed form of ``c_ii`` on the folded index set."""
    return 1 if p % 2 and i == (p - 1) // 2 else 2


def folded_cartan(p: int) -> list[list[int]]:
    idx = folded_index_set(p)
    out = []
    for i in idx:
        row = []
        for j in idx:
            num = 2 * orbit_c(p, i, j)
            cjj = orbit_c(p, j, j)
            if num % cjj:
                raise ArithmeticError(f"non-integral folded Cartan entry at ({i},{j}) for p={p}")
            row.append(num // cjj)
        out.append(row)
    return out


def folded_delta(p: int) -> tuple[int, ...]:
    if p % 2:
        return (2,) * ((p - 1) // 2) + (1,)
    return (1,) * (p // 2 + 1)


@dataclass(frozen=True)
class OrbitWeight:
    """The folded weight ``level*Lambda_0 - sum_i coeffs[i] * alpha_i``."""

    p: int
    level: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if len(self.coeffs) != len(folded_index_set(self.p)):
            raise ValueError(f"need {len(folded_index_set(self.p))} coefficients for p={self.p}")

    @property
    def type_tag(self) -> str:
        return folded_type(self.p)

    def pairing(self, i: int) -> int:
        A = folded_cartan(self.p)
        return self.level * (i == 0) - sum(A[i][j] * m for j, m in enumerate(self.coeffs))

    def is_dominant(self) -> bool:
        return all(self.pairing(i) >= 0 for i in folded_index_set(self.p))

    def plus_delta(self) -> OrbitWeight:
        return OrbitWeight(self.p, self.level, tuple(m - d for m, d in zip(self.coeffs, folded_delta(self.p))))

    def __str__(self) -> str:
        return format_orbit_weight(self)


_OW_RE = re.compile(r"^\s*(\d+)L0\^\s*-\s*\[([-\d,\s]*)\]\s+type=(A2|D2)\s*$")


def format_orbit_weight(w: OrbitWeight) -> str:
    return f"{w.level}L0^ - [" + ",".join(str(m) for m in w.coeffs) + f"] type={w.type_tag}"


def parse_orbit_weight(text: str) -> OrbitWeight:
    m = _OW_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse folded weight {text!r}")
    coeffs = tuple(int(x) for x in m.group(2).split(",") if x.strip())
    n = len(coeffs)
    # index set size n fixes p up to parity, which the type tag resolves
    p = 2 * n - 1 if m.group(3) == "A2" else 2 * n - 2
    return OrbitWeight(p, int(m.group(1)), coeffs)


def transfer_to_alpha(w: OrbitWeight) -> tuple[int, ...]:
    """Root-lattice part of the unfolded weight: ``sum 2 m_i / c_ii`` over each full orbit."""
    out = [0] * w.p
    for i, m in zip(folded_index_set(w.p), w.coeffs):
        scaled = 2 * m
        if scaled % c_diag(w.p, i):
            raise ArithmeticError(f"2*m_{i} not divisible by c_{i}{i}")
        for j in orbit(w.p, i):
            out[j] += scaled // c_diag(w.p, i)
    return tuple(out)


# ---------------------------------------------------------------------------
# fixed points and gamma


def _check(p: int, k: int, ell: int) -> None:
    if p < 2 or k < 1:
        raise ValueError(f"need p >= 2 and k >= 1, got p={p}, k={k}")
    if not 1 <= ell <= p // 2:
        raise ValueError(f"ell={ell} out of range 1..{p // 2} for p={p}")


def fixed_points_Z(p: int, k: int, ell: int) -> int:
    """Tuples of the ``s=0`` chain set fixed by entrywise Mullineux.

    The entries are ``p``-cores, where Mullineux is transposition; both maps
    are applied and must select the same tuples.
    """
    _check(p, k, ell)
    by_mullineux = by_transpose = 0
    for node in enumerate_Z(p, k, 0, ell):
        m = all(mullineux(lam, p) == lam for lam in node)
        t = all(transpose(lam) == lam for lam in node)
        if m != t:
            raise AssertionError(f"Mullineux and transpose disagree on {node}")
        by_mullineux += m
        by_transpose += t
    return by_mullineux


def gamma_weight(p: int, k: int, ell: int) -> OrbitWeight:
    n = len(folded_index_set(p))
    m = [max(ell - i, 0) for i in range(n)]
    return OrbitWeight(p, k + 1, tuple(m))


def orbit_multiplicity(p: int, k: int, ell: int) -> tuple[int, OrbitWeight]:
    _check(p, k, ell)
    gamma = gamma_weight(p, k, ell)
    if transfer_to_alpha(gamma) != lambda_mu_weight(p, ell, 0):
        raise AssertionError(f"weight transfer of {gamma} does not give lambda^{p}_({ell},0)")
    return fixed_points_Z(p, k, ell), gamma


def gamma_is_maximal(p: int, k: int, ell: int) -> bool:
    """``gamma_ell`` is a dominant weight and ``gamma_ell + delta`` is not below the highest weight."""
    mult, gamma = orbit_multiplicity(p, k, ell)
    if mult == 0 or not gamma.is_dominant():
        return False
    return any(c < 0 for c in gamma.plus_delta().coeffs)
