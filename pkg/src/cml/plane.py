"""Plane partitions, beta-weights and the column-wise Frobenius bijection.

A plane partition is stored as the tuple of its column partitions
``pi_{*,1} ⊇ pi_{*,2} ⊇ ...``; columns are the unit every map here works on.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .partitions import (
    Partition,
    cells,
    contains,
    make_partition,
    partitions_in_box,
    partitions_of,
    transpose,
)

Tableau = tuple[tuple[int, ...], ...]


class BetaWeight:
    """Finitely supported integer combination of symbols ``beta_b``, ``b`` in Z."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._c = {b: c for b, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def from_cells(cls, boxes: Iterable[tuple[int, int]], shift: int = 0) -> BetaWeight:
        """Sum of ``beta_{shift - i + j}`` over boxes ``(i, j)``."""
        c: dict[int, int] = {}
        for i, j in boxes:
            b = shift - i + j
            c[b] = c.get(b, 0) + 1
        return cls(c)

    def __getitem__(self, b: int) -> int:
        return self._c.get(b, 0)

    def items(self):
        return sorted(self._c.items())

    def support(self) -> list[int]:
        return sorted(self._c)

    def __add__(self, other: BetaWeight) -> BetaWeight:
        c = dict(self._c)
        for b, v in other._c.items():
            c[b] = c.get(b, 0) + v
        return BetaWeight(c)

    def __sub__(self, other: BetaWeight) -> BetaWeight:
        c = dict(self._c)
        for b, v in other._c.items():
            c[b] = c.get(b, 0) - v
        return BetaWeight(c)

    def __eq__(self, other) -> bool:
        return isinstance(other, BetaWeight) and self._c == other._c

    def __hash__(self) -> int:
        return hash(tuple(self.items()))

    def __le__(self, other: BetaWeight) -> bool:
        """Coefficientwise comparison."""
        return all(v <= other[b] for b, v in self._c.items()) and all(
            v >= 0 for b, v in other._c.items() if b not in self._c
        )

    def is_zero(self) -> bool:
        return not self._c

    def __repr__(self) -> str:
        if not self._c:
            return "0"
        return " + ".join(f"{v}*b[{b}]" for b, v in self.items())


def beta_transfer(w: BetaWeight, p: int) -> tuple[int, ...]:
    """Fold ``beta_b -> alpha_{b mod p}``; returns the alpha coefficient vector."""
    out = [0] * p
    for b, v in w.items():
        out[b % p] += v
    return tuple(out)


def lambda_hat(ell: int, s: int) -> BetaWeight:
    """The tent-shaped combination with plateau ``ell`` on ``beta_0..beta_s``.

    Coefficients rise ``1, 2, ..., ell-1`` on ``beta_{1-ell}..beta_{-1}``, stay
    at ``ell`` for ``beta_0..beta_s`` and fall ``ell-1, ..., 1`` afterwards.
    """
    if ell < 1 or s < 0:
        raise ValueError(f"need ell >= 1 and s >= 0, got ell={ell}, s={s}")
    c = {}
    for j in range(1, ell):
        c[-j] = ell - j
        c[s + j] = ell - j
    for b in range(s + 1):
        c[b] = ell
    return BetaWeight(c)


def square_weight(n: int) -> BetaWeight:
    """Content weight of the ``n x n`` square."""
    return BetaWeight.from_cells(cells((n,) * n))


# ---------------------------------------------------------------------------
# Frobenius notation and the bijection between CSPP pairs and plane partitions


def _strictly_decreasing_positive(seq) -> bool:
    return all(x > 0 for x in seq) and all(seq[i] > seq[i + 1] for i in range(len(seq) - 1))


def frobenius_partition(pcol, qcol) -> Partition:
    """Partition with Frobenius coordinates ``(pcol_d - 1 | qcol_d - 1)``."""
    pcol, qcol = tuple(pcol), tuple(qcol)
    if len(pcol) != len(qcol):
        raise ValueError(f"legs of unequal length: {pcol} vs {qcol}")
    if not (_strictly_decreasing_positive(pcol) and _strictly_decreasing_positive(qcol)):
        raise ValueError(f"legs must be strictly decreasing positive: {pcol}, {qcol}")
    r = len(pcol)
    if r == 0:
        return ()
    rows = [pcol[d] + d for d in range(r)]  # lam_d = pcol_d - 1 + d, 1-indexed d
    # rows below the Durfee square from the column legs
    cols = [qcol[d] + d for d in range(r)]
    below = []
    for i in range(r + 1, cols[0] + 1):
        below.append(sum(1 for c in cols if c >= i))
    return make_partition(rows + below)


def frobenius_coordinates(lam: Partition) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Inverse of ``frobenius_partition``: the legs ``(pcol, qcol)``."""
    conj = transpose(lam)
    r = sum(1 for i, x in enumerate(lam, start=1) if x >= i)
    return (
        tuple(lam[d] - d for d in range(r)),
        tuple(conj[d] - d for d in range(r)),
    )


def transpose_tableau(t: Tableau) -> Tableau:
    return tuple(columns(t))


def columns(t: Tableau) -> list[tuple[int, ...]]:
    if not t:
        return []
    return [tuple(row[a] for row in t if len(row) > a) for a in range(len(t[0]))]


def from_columns(cols: list[tuple[int, ...]]) -> Tableau:
    if not cols:
        return ()
    nrows = len(cols[0])
    return tuple(tuple(c[i] for c in cols if len(c) > i) for i in range(nrows))


def tableau_shape(t: Tableau) -> Partition:
    return tuple(len(row) for row in t)


def is_cspp(t: Tableau) -> bool:
    """Positive entries, weakly decreasing along rows, strictly down columns."""
    shape = tableau_shape(t)
    if make_partition(shape) != shape:
        return False
    if any(x <= 0 for row in t for x in row):
        return False
    if any(row[j] < row[j + 1] for row in t for j in range(len(row) - 1)):
        return False
    return all(_strictly_decreasing_positive(c) for c in columns(t))


@dataclass(frozen=True)
class PlanePartition:
    cols: tuple[Partition, ...]

    def __post_init__(self):
        cols = tuple(tuple(c) for c in self.cols)
        while cols and not cols[-1]:
            cols = cols[:-1]
        for c in cols:
            if make_partition(c) != c:
                raise ValueError(f"column {c} is not a partition")
        for a in range(len(cols) - 1):
            if not contains(cols[a], cols[a + 1]):
                raise ValueError(f"columns {a + 1} and {a + 2} violate row monotonicity")
        object.__setattr__(self, "cols", cols)

    @classmethod
    def from_rows(cls, rows) -> PlanePartition:
        rows = [tuple(x for x in r if x > 0) for r in rows]
        for r in rows:
            if make_partition(r) != r:
                raise ValueError(f"row {r} is not weakly decreasing")
        width = max((len(r) for r in rows), default=0)
        return cls(tuple(make_partition(r[a] if a < len(r) else 0 for r in rows) for a in range(width)))

    def column(self, a: int) -> Partition:
        """The 1-indexed column ``pi_{*,a}``; empty past the support."""
        return self.cols[a - 1] if 1 <= a <= len(self.cols) else ()

    def rows(self) -> tuple[tuple[int, ...], ...]:
        nrows = len(self.cols[0]) if self.cols else 0
        return tuple(
            tuple(c[i] for c in self.cols if len(c) > i) for i in range(nrows)
        )

    def total(self) -> int:
        return sum(sum(c) for c in self.cols)

    def __str__(self) -> str:
        return format_plane_partition(self)


def pi_map(P: Tableau, Q: Tableau) -> PlanePartition:
    """Column ``a`` of the result is ``frobenius_partition(P[:, a], Q[:, a])``."""
    if tableau_shape(P) != tableau_shape(Q):
        raise ValueError(f"shape mismatch: {tableau_shape(P)} vs {tableau_shape(Q)}")
    if not (is_cspp(P) and is_cspp(Q)):
        raise ValueError("both tableaux must be column-strict plane partitions")
    return PlanePartition(tuple(frobenius_partition(pc, qc) for pc, qc in zip(columns(P), columns(Q))))


def pi_inverse(pi: PlanePartition) -> tuple[Tableau, Tableau]:
    pcols, qcols = [], []
    for c in pi.cols:
        pc, qc = frobenius_coordinates(c)
        pcols.append(pc)
        qcols.append(qc)
    # trailing columns of pi are nonempty, so every tableau column is nonempty
    return from_columns(pcols), from_columns(qcols)


def beta_weight_pp(pi: PlanePartition) -> BetaWeight:
    w = BetaWeight()
    for c in pi.cols:
        w = w + BetaWeight.from_cells(cells(c))
    return w


def plane_partitions(n: int) -> Iterator[PlanePartition]:
    """All plane partitions of total ``n``, as chains of shrinking columns."""

    def rec(prev: Partition | None, rem: int):
        if rem == 0:
            yield ()
            return
        for m in range(rem, 0, -1):
            for lam in partitions_of(m):
                if prev is None or contains(prev, lam):
                    for tail in rec(lam, rem - m):
                        yield (lam,) + tail

    for chain in rec(None, n):
        yield PlanePartition(chain)


def v2_to_v3(P: Tableau, Q: Tableau) -> PlanePartition:
    """A pair of reverse standard tableaux to ``pi_map`` of the transposed, swapped pair."""
    return pi_map(transpose_tableau(Q), transpose_tableau(P))


# ---------------------------------------------------------------------------
# V3 <-> Z


def v3_violations(pi: PlanePartition, k: int, s: int, ell: int) -> list[str]:
    """Names of the membership clauses ``pi`` fails; empty iff ``pi`` is in V3."""
    n = ell + s
    bad = []
    if not contains(pi.column(1), (s,) * n if s else ()):
        bad.append(f"first column does not contain ({s}^{n})")
    if beta_weight_pp(pi) != square_weight(n):
        bad.append(f"weight differs from the {n}x{n} square")
    if pi.column(k + 2):
        bad.append(f"column {k + 2} is nonempty")
    return bad


def phi_map(pi: PlanePartition, k: int, s: int, ell: int) -> tuple[Partition, ...]:
    """Strip ``s`` from each of the first ``ell+s`` rows of column 1; keep columns 2..k+1."""
    bad = v3_violations(pi, k, s, ell)
    if bad:
        raise ValueError("not in V3: " + "; ".join(bad))
    nu = pi.column(1)
    n = ell + s
    if len(nu) > n:
        raise ValueError(f"not in V3: first column has more than {n} rows")
    mu = make_partition(nu[i] - s if i < len(nu) else 0 for i in range(n))
    return (mu,) + tuple(pi.column(a) for a in range(2, k + 2))


def psi_map(tup: tuple[Partition, ...], k: int, s: int, ell: int) -> PlanePartition:
    if len(tup) != k + 1:
        raise ValueError(f"expected {k + 1} partitions, got {len(tup)}")
    mu = tup[0]
    n = ell + s
    if len(mu) > n:
        raise ValueError(f"first entry {mu} has more than {n} rows")
    first = make_partition((mu[i] if i < len(mu) else 0) + s for i in range(n))
    pi = PlanePartition((first,) + tuple(tup[1:]))
    bad = v3_violations(pi, k, s, ell)
    if bad:
        raise ValueError("image not in V3: " + "; ".join(bad))
    return pi


def enumerate_v3(k: int, s: int, ell: int) -> list[PlanePartition]:
    """Exhaustive search of V3: chains of at most ``k+1`` columns of the right weight."""
    n = ell + s
    target = square_weight(n)
    floor = (s,) * n if s else ()
    cand = []
    for lam in partitions_in_box(n, n):
        w = BetaWeight.from_cells(cells(lam))
        if w <= target:
            cand.append((lam, w))
    out = []

    def rec(chain, rem):
        if rem.is_zero():
            out.append(PlanePartition(tuple(chain)))
            return
        if len(chain) == k + 1:
            return
        prev = chain[-1] if chain else None
        for lam, w in cand:
            if not lam:
                continue
            if prev is None and not contains(lam, floor):
                continue
            if prev is not None and not contains(prev, lam):
                continue
            if w <= rem:
                rec(chain + [lam], rem - w)

    if not floor and target.is_zero():
        return [PlanePartition(())]
    rec([], target)
    return sorted(out, key=lambda pi: pi.cols)


# ---------------------------------------------------------------------------
# text format


def format_plane_partition(pi: PlanePartition) -> str:
    return "[" + ",".join("[" + ",".join(str(x) for x in r) + "]" for r in pi.rows()) + "]"


def parse_plane_partition(text: str) -> PlanePartition:
    rows = json.loads(text)
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ValueError(f"expected a list of rows, got {text!r}")
    return PlanePartition.from_rows(rows)


def iter_cspp(shape: Partition, max_entry: int) -> Iterator[Tableau]:
    """All column-strict plane partitions of ``shape`` with entries in ``1..max_entry``."""
    boxes = list(cells(shape))
    fill: dict[tuple[int, int], int] = {}

    def rec(idx):
        if idx == len(boxes):
            yield tuple(tuple(fill[(i, j)] for j in range(1, shape[i - 1] + 1)) for i in range(1, len(shape) + 1))
            return
        i, j = boxes[idx]
        hi = max_entry
        if j > 1:
            hi = min(hi, fill[(i, j - 1)])
        if i > 1:
            hi = min(hi, fill[(i - 1, j)] - 1)
        for v in range(1, hi + 1):
            fill[(i, j)] = v
            yield from rec(idx + 1)
        fill.pop((i, j), None)

    return rec(0)
