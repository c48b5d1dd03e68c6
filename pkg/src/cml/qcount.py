"""Ballot numbers, Gaussian binomials and the maximal-weight counting formula.

All arithmetic is over the integers.  Values at a primitive ``d``-th root of
unity are represented exactly as residues modulo the cyclotomic polynomial.
"""
from __future__ import annotations

import re
from functools import lru_cache
from math import comb, gcd
from typing import Iterator, Sequence

from .crystal import AlphaWeight
from .partitions import partitions_in_box


class QPoly:
    """Integer polynomial in ``q``; ``coeffs[i]`` is the coefficient of ``q^i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, n: int, c: int = 1) -> QPoly:
        return cls([0] * n + [c])

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPoly([other])
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: QPoly) -> QPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return QPoly([x + y for x, y in zip(a, b)])

    def __neg__(self) -> QPoly:
        return QPoly([-x for x in self.coeffs])

    def __sub__(self, other: QPoly) -> QPoly:
        return self + (-other)

    def __mul__(self, other) -> QPoly:
        if isinstance(other, int):
            return QPoly([x * other for x in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def shift(self, n: int) -> QPoly:
        """Multiply by ``q^n``."""
        return QPoly((0,) * n + self.coeffs) if self.coeffs else QPoly()

    def divmod_monic(self, d: QPoly) -> tuple[QPoly, QPoly]:
        """Division by a monic polynomial; exact over the integers."""
        if not d.coeffs or d.coeffs[-1] != 1:
            raise ValueError("divisor must be monic")
        r = list(self.coeffs)
        n = d.degree()
        if len(r) <= n:
            return QPoly(), QPoly(r)
        quo = [0] * (len(r) - n)
        for i in range(len(r) - 1, n - 1, -1):
            c = r[i]
            if c:
                quo[i - n] = c
                for j, dc in enumerate(d.coeffs):
                    r[i - n + j] -= c * dc
        return QPoly(quo), QPoly(r[:n])

    def exact_div(self, d: QPoly) -> QPoly:
        q, r = self.divmod_monic(d)
        if r.coeffs:
            raise ArithmeticError("division is not exact")
        return q

    def __call__(self, x: int) -> int:
        v = 0
        for c in reversed(self.coeffs):
            v = v * x + c
        return v

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        return format_qpoly(self)


def format_qpoly(f: QPoly) -> str:
    if not f.coeffs:
        return "0"
    out = []
    for i, c in enumerate(f.coeffs):
        if c == 0:
            continue
        mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


_TERM_RE = re.compile(r"^(\d+)?(?:\*?(q)(?:\^(\d+))?)?$")


def parse_qpoly(text: str) -> QPoly:
    s = text.replace(" ", "")
    if s in ("", "0"):
        return QPoly()
    terms = re.findall(r"[+-]?[^+-]+", s)
    out: dict[int, int] = {}
    for t in terms:
        sign = -1 if t.startswith("-") else 1
        t = t.lstrip("+-")
        m = _TERM_RE.match(t)
        if not m or not t:
            raise ValueError(f"bad term {t!r} in {text!r}")
        coef = int(m.group(1)) if m.group(1) else 1
        if m.group(2):
            e = int(m.group(3)) if m.group(3) else 1
        else:
            e = 0
            if not m.group(1):
                raise ValueError(f"bad term {t!r} in {text!r}")
        out[e] = out.get(e, 0) + sign * coef
    n = max(out) + 1
    return QPoly([out.get(i, 0) for i in range(n)])


# ---------------------------------------------------------------------------
# ballot paths


def ballot_count_dp(n: int, m: int) -> int:
    """Lattice paths ``(0,0) -> (n+m, n)`` by unit steps staying on or below ``y = x``."""
    width = n + m
    row = [1] * (width + 1)  # y = 0
    for y in range(1, n + 1):
        new = [0] * (width + 1)
        for x in range(width + 1):
            if x >= y:
                new[x] = row[x] + (new[x - 1] if x > 0 else 0)
        row = new
    return row[width]


def ballot_count_closed(n: int, m: int) -> int:
    num = (m + 1) * comb(2 * n + m, n)
    if num % (n + m + 1):
        raise ArithmeticError(f"closed form not integral at n={n}, m={m}")
    return num // (n + m + 1)


def ballot_count(n: int, m: int) -> int:
    """``D_{n,m}``, by dynamic programming, checked against the closed form."""
    if n < 0 or m < 0:
        raise ValueError(f"need n, m >= 0, got {n}, {m}")
    dp = ballot_count_dp(n, m)
    closed = ballot_count_closed(n, m)
    if dp != closed:
        raise AssertionError(f"ballot count mismatch at ({n},{m}): {dp} != {closed}")
    return dp


# ---------------------------------------------------------------------------
# q-binomials


@lru_cache(maxsize=None)
def _box_gf(rows: int, cols: int) -> QPoly:
    """Sum of ``q^|lam|`` over partitions in a ``rows x cols`` box.

    Splits on the number ``r`` of parts equal to ``cols``.
    """
    if rows == 0 or cols == 0:
        return QPoly([1])
    total = QPoly()
    for r in range(rows + 1):
        total = total + _box_gf(rows - r, cols - 1).shift(r * cols)
    return total


@lru_cache(maxsize=None)
def qbinom_pascal(a: int, b: int) -> QPoly:
    if b == 0 or b == a:
        return QPoly([1])
    return qbinom_pascal(a - 1, b - 1) + qbinom_pascal(a - 1, b).shift(b)


def q_integer(n: int) -> QPoly:
    return QPoly([1] * n)


def qbinom_quotient(a: int, b: int) -> QPoly:
    """``[a]! / ([b]! [a-b]!)`` by exact polynomial division."""
    num = QPoly([1])
    for n in range(a - b + 1, a + 1):
        num = num * q_integer(n)
    for n in range(1, b + 1):
        num = num.exact_div(q_integer(n))
    return num


@lru_cache(maxsize=None)
def qbinom(a: int, b: int) -> QPoly:
    """Gaussian binomial from the boxed-partition generating function, Pascal-checked."""
    if not 0 <= b <= a:
        raise ValueError(f"need 0 <= b <= a, got a={a}, b={b}")
    f = _box_gf(b, a - b)
    if f != qbinom_pascal(a, b):
        raise AssertionError(f"q-binomial mismatch at ({a},{b})")
    return f


def qbinom_by_enumeration(a: int, b: int) -> QPoly:
    """Slow oracle: enumerate partitions in the ``b x (a-b)`` box."""
    c = [0] * (b * (a - b) + 1)
    for lam in partitions_in_box(b, a - b):
        c[sum(lam)] += 1
    return QPoly(c)


# ---------------------------------------------------------------------------
# cyclotomic arithmetic


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> QPoly:
    """The ``d``-th cyclotomic polynomial, from ``q^d - 1 = prod_{e | d} Phi_e``."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    f = QPoly([-1] + [0] * (d - 1) + [1])
    for e in range(1, d):
        if d % e == 0:
            f = f.exact_div(cyclotomic(e))
    return f


def cyclotomic_eval(f: QPoly, d: int) -> QPoly:
    """``f`` at a primitive ``d``-th root of unity, as its residue mod ``Phi_d``."""
    return f.divmod_monic(cyclotomic(d))[1]


def q_lucas_verify(n: int, j: int, d: int) -> bool:
    """Check ``[n, j](zeta) = C(n//d, j//d) * [n%d, j%d](zeta)`` exactly."""
    if not 0 <= j <= n:
        raise ValueError(f"need 0 <= j <= n, got n={n}, j={j}")
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    lhs = cyclotomic_eval(qbinom(n, j), d)
    if j % d > n % d:
        rhs = QPoly()
    else:
        rhs = cyclotomic_eval(qbinom(n % d, j % d) * comb(n // d, j // d), d)
    return lhs == rhs


# ---------------------------------------------------------------------------
# dominant maximal weights


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def euler_phi(n: int) -> int:
    return sum(1 for a in range(1, n + 1) if gcd(a, n) == 1)


def enumerate_S(p: int, s: int, k: int) -> list[tuple[int, ...]]:
    """Integer vectors ``(x_0, ..., x_p)`` with ``x_0 = x_p = 0``,
    ``x_1 + x_{p-1} <= k`` (``k - 1`` when ``s != 0``) and
    ``[i == s] - x_{i-1} + 2 x_i - x_{i+1} >= 0`` for ``0 < i < p``.

    Searched over slopes ``y_i = x_i - x_{i-1}``, which may rise by at most
    one, and only at ``i = s``.  Lexicographic order.
    """
    if p < 2 or k < 1 or not 0 <= s < p:
        raise ValueError(f"need p >= 2, k >= 1, 0 <= s < p; got p={p}, s={s}, k={k}")
    cap = k if s == 0 else k - 1
    out = []
    # slopes lie in [y_1 - cap - 1, y_1 + 1] and sum to 0, so y_1 is in [-1, cap + 1]
    for y1 in range(-1, cap + 2):
        lo = y1 - cap - 1

        def rec(i, x, y, xs):
            # x = x_i, y = y_i (slope into i); choose y_{i+1}
            if i == p:
                if x == 0:
                    out.append(tuple(xs))
                return
            bump = 1 if i == s else 0
            rest = p - i
            for ny in range(y + bump, lo - 1, -1):
                nx = x + ny
                # remaining slopes after this one are at most ny (+1 if the bump is still ahead)
                ahead = 1 if s > i else 0
                if nx + (rest - 1) * (ny + ahead) < 0:
                    break
                if nx + (rest - 1) * lo > 0:
                    continue
                rec(i + 1, nx, ny, xs + [nx])

        rec(1, y1, y1, [0, y1])
    res = []
    for x in sorted(set(out)):
        ok = x[0] == 0 and x[p] == 0 and x[1] + x[p - 1] <= cap
        ok = ok and all((i == s) - x[i - 1] + 2 * x[i] - x[i + 1] >= 0 for i in range(1, p))
        if ok:
            res.append(x)
    return res


def s_vector_weight(x: Sequence[int], p: int, k: int, s: int) -> AlphaWeight:
    """Map ``x`` to ``Lambda + sum_i (x_i + q_0) alpha_i`` with ``Lambda = k*Lambda_0 + Lambda_s``.

    ``q_0 = -max(x_1, ..., x_{p-1})``.
    """
    top = max(x[1:p])
    if top < 0:
        raise ValueError(f"no admissible q_0 for {x}")
    return AlphaWeight(p, k, s, tuple(top - x[i] for i in range(p)))


def dominant_maximal_weights(p: int, s: int, k: int) -> list[AlphaWeight]:
    """Dominant maximal weights of ``k*Lambda_0 + Lambda_s`` (level ``k+1``)."""
    return [s_vector_weight(x, p, k, s) for x in enumerate_S(p, s, k + 1)]


def s_to_t(x: Sequence[int]) -> tuple[int, ...]:
    return tuple(x[i] - x[i - 1] for i in range(1, len(x)))


def t_to_s(y: Sequence[int]) -> tuple[int, ...]:
    out = [0]
    for v in y:
        out.append(out[-1] + v)
    return tuple(out)


def t_to_u(y: Sequence[int]) -> tuple[int, ...]:
    return tuple(v - y[-1] for v in y[:-1])


def u_to_t(lam: Sequence[int], p: int) -> tuple[int, ...]:
    total = sum(lam)
    if total % p:
        raise ValueError(f"size {total} not divisible by {p}")
    last = -total // p
    return tuple(v + last for v in lam) + (last,)


def enumerate_U(p: int, k: int) -> Iterator[tuple[int, ...]]:
    """Partitions with ``p-1`` parts (zeros kept) bounded by ``k``, size divisible by ``p``."""
    for lam in partitions_in_box(p - 1, k):
        if sum(lam) % p == 0:
            yield lam + (0,) * (p - 1 - len(lam))


def count_U(p: int, k: int) -> int:
    if p < 2 or k < 1:
        raise ValueError(f"need p >= 2 and k >= 1, got p={p}, k={k}")
    return sum(1 for _ in enumerate_U(p, k))


def totient_count(p: int, k: int) -> int:
    """``(1/(p+k)) * sum_{d | gcd(p,k)} phi(d) * C((p+k)/d, k/d)``."""
    if p < 2 or k < 1:
        raise ValueError(f"need p >= 2 and k >= 1, got p={p}, k={k}")
    total = sum(euler_phi(d) * comb((p + k) // d, k // d) for d in _divisors(gcd(p, k)))
    if total % (p + k):
        raise ArithmeticError(f"totient sum {total} not divisible by {p + k}")
    return total // (p + k)


def count_U_by_roots(p: int, k: int) -> int:
    """``#U`` as the average of ``[k+p-1, p-1]`` over all ``p``-th roots of unity.

    Every divisor ``d`` of ``p`` is visited.  The value at a primitive ``d``-th
    root is reduced exactly, must be a constant, and must vanish unless ``d``
    divides ``k``.
    """
    f = qbinom(k + p - 1, p - 1)
    total = 0
    for d in _divisors(p):
        r = cyclotomic_eval(f, d)
        if r.degree() > 0:
            raise AssertionError(f"value at a primitive {d}-th root is not rational: {r}")
        value = r.coeffs[0] if r.coeffs else 0
        if k % d and value:
            raise AssertionError(f"value at a primitive {d}-th root should vanish, got {value}")
        if k % d == 0 and value != comb((k + p) // d - 1, p // d - 1):
            raise AssertionError(f"value at a primitive {d}-th root is {value}")
        total += euler_phi(d) * value
    if total % p:
        raise ArithmeticError(f"root sum {total} not divisible by {p}")
    return total // p
