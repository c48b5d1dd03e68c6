"""Partition arithmetic.

Partitions are plain tuples of positive integers in weakly decreasing order,
with no trailing zeros; the empty partition is ``()``.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

Partition = tuple[int, ...]


def make_partition(parts: Iterable[int]) -> Partition:
    """Normalize ``parts`` into a partition, dropping zeros.

    Raises ValueError if the parts are negative or not weakly decreasing.
    """
    parts = tuple(parts)
    if any(x < 0 for x in parts):
        raise ValueError(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts not weakly decreasing: {parts}")
    return tuple(x for x in parts if x > 0)


def is_partition(parts) -> bool:
    try:
        return make_partition(parts) == tuple(parts)
    except (ValueError, TypeError):
        return False


def size(lam: Partition) -> int:
    return sum(lam)


def part(lam: Partition, i: int) -> int:
    """The ``i``-th part, 1-indexed, with zeros past the end."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def transpose(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def cells(lam: Partition) -> Iterator[tuple[int, int]]:
    """Boxes ``(row, col)`` of the Young diagram, 1-indexed, row by row."""
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            yield (i, j)


def contains(lam: Partition, mu: Partition) -> bool:
    """True iff the diagram of ``lam`` contains the diagram of ``mu``."""
    if len(mu) > len(lam):
        return False
    return all(a >= b for a, b in zip(lam, mu))


def contains_with_shift(mu: Partition, t: int, lam: Partition) -> bool:
    """True iff the row-shifted diagram ``(mu_i + t)_{i>=1}`` contains ``lam``.

    Rows of ``mu`` past its length count as zero, so the shifted diagram has
    infinitely many rows of length ``t``.
    """
    return all(part(mu, i) + t >= x for i, x in enumerate(lam, start=1))


def hook_lengths(lam: Partition) -> list[int]:
    conj = transpose(lam)
    return [lam[i - 1] - j + conj[j - 1] - i + 1 for i, j in cells(lam)]


def _check_p(p: int) -> None:
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")


def is_p_restricted(lam: Partition, p: int) -> bool:
    _check_p(p)
    return all(part(lam, i) - part(lam, i + 1) < p for i in range(1, len(lam) + 1))


def beta_numbers(lam: Partition) -> list[int]:
    """First-column hook lengths ``lam_i + len(lam) - i``."""
    n = len(lam)
    return [x + n - i for i, x in enumerate(lam, start=1)]


def is_p_core(lam: Partition, p: int) -> bool:
    """True iff ``lam`` has no removable ``p``-hook.

    Uses the abacus criterion on beta-numbers: every bead at position
    ``b >= p`` must have a bead at ``b - p`` directly above it.
    """
    _check_p(p)
    beads = set(beta_numbers(lam))
    return all(b < p or b - p in beads for b in beads)


def p_core(lam: Partition, p: int) -> Partition:
    """Remove ``p``-hooks until none is left: slide beads up their runners."""
    _check_p(p)
    n = len(lam)
    runners: list[int] = [0] * p
    for b in beta_numbers(lam):
        runners[b % p] += 1
    beads = sorted((r + p * h for r in range(p) for h in range(runners[r])), reverse=True)
    return make_partition(b - (n - i) for i, b in enumerate(beads, start=1))


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""

    def rec(remaining: int, largest: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    return rec(n, n)


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """All partitions with at most ``rows`` parts, each at most ``cols``."""

    def rec(r: int, largest: int) -> Iterator[Partition]:
        yield ()
        if r == 0:
            return
        for first in range(1, largest + 1):
            for rest in rec(r - 1, first):
                yield (first,) + rest

    return rec(rows, cols)


@lru_cache(maxsize=None)
def p_cores_in_box(p: int, rows: int, cols: int) -> tuple[Partition, ...]:
    """All ``p``-cores fitting in a ``rows x cols`` box, lexicographically sorted."""
    _check_p(p)
    return tuple(sorted(lam for lam in partitions_in_box(rows, cols) if is_p_core(lam, p)))


def tau(lam: Partition, m: int, p: int) -> Partition:
    """The map ``tau_m`` on ``p``-cores.

    With ``t = (p - m) % p`` and ``a = len(lam)`` the rows are::

        nu_i = lam_i + t                      (1 <= i <= m)
        nu_i = min(lam_i + t, lam_{i-m})      (m < i <= a)
        nu_i = min(t, lam_{i-m})              (a < i <= a + m)
    """
    _check_p(p)
    if not 0 <= m < p:
        raise ValueError(f"m must satisfy 0 <= m < p, got m={m}, p={p}")
    if not is_p_core(lam, p):
        raise ValueError(f"{format_partition(lam)} is not a {p}-core")
    t = (p - m) % p
    a = len(lam)
    nu = []
    for i in range(1, a + m + 1):
        if i <= m:
            nu.append(part(lam, i) + t)
        elif i <= a:
            nu.append(min(lam[i - 1] + t, lam[i - m - 1]))
        else:
            nu.append(min(t, lam[i - m - 1]))
    return make_partition(nu)


def format_partition(lam: Partition) -> str:
    return "[" + ",".join(str(x) for x in lam) + "]"


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"partition must be bracketed, got {text!r}")
    body = text[1:-1].strip()
    if not body:
        return ()
    parts = tuple(int(x) for x in body.split(","))
    lam = make_partition(parts)
    if lam != parts:
        raise ValueError(f"zero parts are not allowed in {text!r}")
    return lam
