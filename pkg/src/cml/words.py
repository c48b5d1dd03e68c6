"""Words, RSK insertion and decreasing-pattern counts."""
from __future__ import annotations

from itertools import combinations, permutations
from math import factorial
from typing import Iterator, Sequence

from .partitions import Partition, cells, partitions_of, transpose

Word = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]


def multiset_permutations(letters: Sequence[int]) -> Iterator[Word]:
    """Distinct arrangements of ``letters`` in lexicographic order."""
    a = sorted(letters)
    n = len(a)
    while True:
        yield tuple(a)
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


def enumerate_shuffles(s: int, ell: int) -> list[Word]:
    """All shuffles of ``0^s, 1, 2, ..., ell``."""
    return list(multiset_permutations([0] * s + list(range(1, ell + 1))))


def lds_length(w: Sequence[int]) -> int:
    """Length of the longest strictly decreasing subsequence."""
    if not w:
        raise ValueError("empty word")
    best = [1] * len(w)
    for j in range(len(w)):
        for i in range(j):
            if w[i] > w[j] and best[i] + 1 > best[j]:
                best[j] = best[i] + 1
    return max(best)


def count_avoiding_shuffles(s: int, ell: int, k: int) -> int:
    """Shuffles of ``0^s, 1..ell`` with no strictly decreasing subsequence of length ``k+2``."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return sum(1 for w in enumerate_shuffles(s, ell) if lds_length(w) <= k + 1)


def contains_decreasing(w: Sequence[int], length: int) -> bool:
    """Brute-force containment of the pattern ``length, ..., 2, 1``."""
    return any(
        all(sub[i] > sub[i + 1] for i in range(length - 1))
        for sub in combinations(w, length)
    )


def count_avoiding_permutations(n: int, k: int) -> int:
    """Permutations of ``n`` avoiding ``(k+2, k+1, ..., 1)``, by brute force."""
    return sum(1 for w in permutations(range(1, n + 1)) if not contains_decreasing(w, k + 2))


# ---------------------------------------------------------------------------
# RSK


def rsk_insert(w: Sequence[int]) -> tuple[Tableau, Tableau]:
    """Row insertion; each letter bumps the leftmost entry strictly greater than it."""
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, x in enumerate(w, start=1):
        r = 0
        while True:
            if r == len(P):
                P.append([x])
                Q.append([step])
                break
            row = P[r]
            j = next((j for j, y in enumerate(row) if y > x), None)
            if j is None:
                row.append(x)
                Q[r].append(step)
                break
            row[j], x = x, row[j]
            r += 1
    return tuple(map(tuple, P)), tuple(map(tuple, Q))


def rsk_inverse(P: Tableau, Q: Tableau) -> Word:
    P = [list(r) for r in P]
    Q = [list(r) for r in Q]
    n = sum(len(r) for r in Q)
    out = []
    for step in range(n, 0, -1):
        r = next(i for i, row in enumerate(Q) if row and row[-1] == step)
        Q[r].pop()
        x = P[r].pop()
        for rr in range(r - 1, -1, -1):
            row = P[rr]
            j = max(j for j, y in enumerate(row) if y < x)
            row[j], x = x, row[j]
        out.append(x)
        if not P[r]:
            P.pop(r)
            Q.pop(r)
    return tuple(reversed(out))


def shape(t: Tableau) -> Partition:
    return tuple(len(r) for r in t)


def content(t: Tableau) -> list[int]:
    return sorted(x for r in t for x in r)


def _cols(t: Tableau):
    return [[r[a] for r in t if len(r) > a] for a in range(len(t[0]))] if t else []


def is_sst(t: Tableau) -> bool:
    rows_ok = all(r[j] <= r[j + 1] for r in t for j in range(len(r) - 1))
    cols_ok = all(c[i] < c[i + 1] for c in _cols(t) for i in range(len(c) - 1))
    return rows_ok and cols_ok and list(shape(t)) == sorted(shape(t), reverse=True)


def is_standard(t: Tableau) -> bool:
    return is_sst(t) and content(t) == list(range(1, sum(shape(t)) + 1))


def is_reverse_standard(t: Tableau) -> bool:
    n = sum(shape(t))
    return content(t) == list(range(1, n + 1)) and is_standard(complement(t, n))


def complement(t: Tableau, m: int) -> Tableau:
    """Relabel ``x -> m + 1 - x``; swaps SST/ST with CSPP/RST."""
    return tuple(tuple(m + 1 - x for x in r) for r in t)


def transpose_tableau(t: Tableau) -> Tableau:
    return tuple(tuple(c) for c in _cols(t))


def standardize(t: Tableau) -> Tableau:
    """Replace entries by ``1..n``, equal letters numbered left to right."""
    boxes = sorted(
        ((x, j, i) for i, r in enumerate(t) for j, x in enumerate(r)),
    )
    out = [list(r) for r in t]
    for n, (_, j, i) in enumerate(boxes, start=1):
        out[i][j] = n
    return tuple(map(tuple, out))


def shuffle_to_v2(w: Word) -> tuple[Tableau, Tableau]:
    """A shuffle of ``0^s, 1..ell`` to a pair of reverse standard tableaux.

    RSK, standardization of the insertion tableau, then complementation; the
    zeros become ``ell+s, ..., ell+1`` in the first row of the first tableau.
    """
    P, Q = rsk_insert(w)
    m = len(w)
    return complement(standardize(P), m), complement(Q, m)


# ---------------------------------------------------------------------------
# standard tableaux and involutions


def syt_count(lam: Partition) -> int:
    """Number of standard tableaux of shape ``lam`` by the hook-length formula."""
    conj = transpose(lam)
    prod = 1
    for i, j in cells(lam):
        prod *= lam[i - 1] - j + conj[j - 1] - i + 1
    return factorial(sum(lam)) // prod


def standard_tableaux(lam: Partition) -> Iterator[Tableau]:
    """All standard tableaux of shape ``lam``, by placing ``n`` in a corner."""
    n = sum(lam)
    if n == 0:
        yield ()
        return
    for r in range(len(lam)):
        nxt = lam[r + 1] if r + 1 < len(lam) else 0
        if lam[r] > nxt:
            smaller = lam[:r] + (lam[r] - 1,) + lam[r + 1:]
            smaller = tuple(x for x in smaller if x)
            for t in standard_tableaux(smaller):
                rows = [list(row) for row in t]
                if r == len(rows):
                    rows.append([])
                rows[r].append(n)
                yield tuple(map(tuple, rows))


def reverse_standard_tableaux(lam: Partition) -> Iterator[Tableau]:
    n = sum(lam)
    for t in standard_tableaux(lam):
        yield complement(t, n)


def involutions(n: int) -> Iterator[Word]:
    """Involutions of ``1..n`` as one-line words."""

    def rec(w: list[int | None]):
        try:
            i = w.index(None)
        except ValueError:
            yield tuple(w)
            return
        w[i] = i + 1
        yield from rec(w)
        for j in range(i + 1, n):
            if w[j] is None:
                w[i], w[j] = j + 1, i + 1
                yield from rec(w)
                w[j] = None
        w[i] = None

    return rec([None] * n)


MAX_BRUTE_INVOLUTIONS = 10


def count_avoiding_involutions(ell: int, k: int, method: str = "both") -> int:
    """Involutions of ``ell`` avoiding ``(k+2, ..., 1)``.

    ``method="brute"`` filters involutions by decreasing-subsequence length,
    ``"formula"`` sums standard tableau counts over shapes with at most ``k+1``
    rows, ``"both"`` computes the two and insists they agree.
    """
    if k < 1 or ell < 0:
        raise ValueError(f"need k >= 1 and ell >= 0, got ell={ell}, k={k}")
    if method not in ("both", "brute", "formula"):
        raise ValueError(f"unknown method {method!r}")
    formula = sum(syt_count(lam) for lam in partitions_of(ell) if len(lam) <= k + 1)
    if method == "formula":
        return formula
    if ell > MAX_BRUTE_INVOLUTIONS:
        raise ValueError(f"brute force limited to ell <= {MAX_BRUTE_INVOLUTIONS}, got {ell}")
    brute = sum(1 for w in involutions(ell) if not w or lds_length(w) <= k + 1)
    if method == "brute":
        return brute
    if brute != formula:
        raise AssertionError(f"involution count mismatch for ell={ell}, k={k}: {brute} != {formula}")
    return brute


def format_word(w: Sequence[int]) -> str:
    if all(0 <= x < 10 for x in w):
        return "".join(str(x) for x in w)
    text = ",".join(str(x) for x in w)
    return text + "," if len(w) == 1 else text


def parse_word(text: str) -> Word:
    text = text.strip()
    if "," in text:
        return tuple(int(x) for x in text.split(",") if x)
    return tuple(int(c) for c in text)
