"""Misra-Miwa crystals of type A^(1)_{p-1} and weight multiplicities.

``B(Lambda_s)`` is realized on ``p``-restricted partitions, a box ``(i, j)``
having residue ``(s - i + j) mod p``.  A vertex of the tensor product
``B(Lambda_s) ⊗ B(Lambda_0)^{⊗k}`` is a tuple ``(mu, lam1, ..., lamk)``.
Multiplicities are counted on the connected component of the all-empty tuple.
"""
from __future__ import annotations

import os
import re
from collections import defaultdict, deque
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

from .partitions import (
    Partition,
    cells,
    contains,
    contains_with_shift,
    is_p_restricted,
    p_cores_in_box,
    part,
    tau,
)
from .plane import BetaWeight, lambda_hat

Node = tuple[Partition, ...]

DEFAULT_MAX_STATES = 5_000_000

# Box orderings for the signature rule; see ``signature``.
BOTTOM_UP = "bottom-up"
TOP_DOWN = "top-down"
DEFAULT_CONVENTION = BOTTOM_UP


class CensusOverflow(RuntimeError):
    """The exploration exceeded its state budget."""


def max_states_from_env() -> int:
    return int(os.environ.get("CML_MAX_STATES", DEFAULT_MAX_STATES))


# ---------------------------------------------------------------------------
# weights


def cartan_entry(p: int, i: int, j: int) -> int:
    """Entry ``a_ij`` of the Cartan matrix of type A^(1)_{p-1}."""
    i, j = i % p, j % p
    return 2 * (i == j) - ((i + 1) % p == j) - ((i - 1) % p == j)


@dataclass(frozen=True)
class AlphaWeight:
    """The weight ``k*Lambda_0 + Lambda_s - sum_i coeffs[i] * alpha_i``."""

    p: int
    k: int
    s: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if len(self.coeffs) != self.p:
            raise ValueError(f"need {self.p} coefficients, got {len(self.coeffs)}")
        if not 0 <= self.s < self.p:
            raise ValueError(f"s={self.s} out of range for p={self.p}")

    @classmethod
    def highest(cls, p: int, k: int, s: int) -> AlphaWeight:
        return cls(p, k, s, (0,) * p)

    def height(self) -> int:
        return sum(self.coeffs)

    def in_root_cone(self) -> bool:
        """True iff the weight lies in ``Lambda - Q_+``."""
        return all(c >= 0 for c in self.coeffs)

    def minus(self, root: Sequence[int]) -> AlphaWeight:
        """Subtract the root-lattice element with coefficient vector ``root``."""
        return AlphaWeight(self.p, self.k, self.s, tuple(a + b for a, b in zip(self.coeffs, root)))

    def minus_simple(self, i: int) -> AlphaWeight:
        c = list(self.coeffs)
        c[i % self.p] += 1
        return AlphaWeight(self.p, self.k, self.s, tuple(c))

    def plus_delta(self) -> AlphaWeight:
        return AlphaWeight(self.p, self.k, self.s, tuple(c - 1 for c in self.coeffs))

    def pairing(self, i: int) -> int:
        """``<wt, alpha_i^vee>``."""
        hw = self.k * (i % self.p == 0) + (i % self.p == self.s)
        return hw - sum(cartan_entry(self.p, i, j) * c for j, c in enumerate(self.coeffs))

    def is_dominant(self) -> bool:
        return all(self.pairing(i) >= 0 for i in range(self.p))

    def __str__(self) -> str:
        return format_alpha_weight(self)


_AW_RE = re.compile(r"^\s*(\d+)L0\+L(\d+)\s*-\s*\[([-\d,\s]*)\]\s*$")


def format_alpha_weight(w: AlphaWeight) -> str:
    return f"{w.k}L0+L{w.s} - [" + ",".join(str(c) for c in w.coeffs) + "]"


def parse_alpha_weight(text: str) -> AlphaWeight:
    m = _AW_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse weight {text!r}")
    coeffs = tuple(int(x) for x in m.group(3).split(",") if x.strip())
    return AlphaWeight(len(coeffs), int(m.group(1)), int(m.group(2)), coeffs)


def residue(i: int, j: int, s: int, p: int) -> int:
    return (s - i + j) % p


def residue_content(lam: Partition, s: int, p: int) -> tuple[int, ...]:
    c = [0] * p
    for i, j in cells(lam):
        c[(s - i + j) % p] += 1
    return tuple(c)


def wt_partition(lam: Partition, s: int, p: int) -> AlphaWeight:
    """Weight of ``lam`` as a vertex of ``B(Lambda_s)``."""
    if not is_p_restricted(lam, p):
        raise ValueError(f"{lam} is not {p}-restricted")
    return AlphaWeight(p, 0, s, residue_content(lam, s, p))


def node_weight(node: Node, s: int, p: int) -> AlphaWeight:
    c = [0] * p
    for idx, lam in enumerate(node):
        for r, v in enumerate(residue_content(lam, s if idx == 0 else 0, p)):
            c[r] += v
    return AlphaWeight(p, len(node) - 1, s, tuple(c))


# ---------------------------------------------------------------------------
# single-partition crystal


class Signature(NamedTuple):
    eps: int
    phi: int
    good_add: tuple[int, int] | None
    good_remove: tuple[int, int] | None


def _i_boxes(lam: Partition, i: int, s: int, p: int, convention: str):
    """Addable (+1) and removable (-1) ``i``-boxes in signature reading order."""
    out = []
    for r in range(1, len(lam) + 2):
        cur = part(lam, r)
        if cur > 0 and cur > part(lam, r + 1) and (s - r + cur) % p == i:
            out.append((r, cur, -1))
        if (r == 1 or part(lam, r - 1) > cur) and (s - r + cur + 1) % p == i:
            out.append((r, cur + 1, +1))
    if convention == BOTTOM_UP:
        out.reverse()
    elif convention != TOP_DOWN:
        raise ValueError(f"unknown convention {convention!r}")
    return out


def _reduce(word):
    """Cancel every ``+`` against a later ``-``; the reduced word is ``-...- +...+``.

    Returns ``(surviving_minus, surviving_plus)`` as lists of labels in order.
    """
    plus, minus = [], []
    for label, sign in word:
        if sign > 0:
            plus.append(label)
        elif plus:
            plus.pop()
        else:
            minus.append(label)
    return minus, plus


@lru_cache(maxsize=1 << 20)
def signature(lam: Partition, i: int, s: int, p: int, convention: str = DEFAULT_CONVENTION) -> Signature:
    """The ``i``-signature of ``lam`` in ``B(Lambda_s)``.

    Addable ``i``-boxes read as ``+`` and removable ones as ``-``, ordered by
    decreasing row index (``BOTTOM_UP``, the default) or increasing row index
    (``TOP_DOWN``).  After cancelling ``+ -`` pairs, ``f_i`` adds the leftmost
    surviving ``+`` and ``e_i`` removes the rightmost surviving ``-``.
    """
    word = [((r, c), sign) for r, c, sign in _i_boxes(lam, i % p, s, p, convention)]
    minus, plus = _reduce(word)
    return Signature(
        len(minus),
        len(plus),
        plus[0] if plus else None,
        minus[-1] if minus else None,
    )


def _add_box(lam: Partition, row: int) -> Partition:
    if row > len(lam):
        return lam + (1,)
    return lam[: row - 1] + (lam[row - 1] + 1,) + lam[row:]


def _remove_box(lam: Partition, row: int) -> Partition:
    if lam[row - 1] == 1:
        return lam[: row - 1] + lam[row:]
    return lam[: row - 1] + (lam[row - 1] - 1,) + lam[row:]


def apply_crystal_operator(
    lam: Partition, i: int, direction: str, s: int, p: int, convention: str = DEFAULT_CONVENTION
) -> Partition | None:
    """``f_i`` (``direction="lower"``) or ``e_i`` (``"raise"``); None when undefined."""
    sig = signature(lam, i % p, s, p, convention)
    if direction == "lower":
        return _add_box(lam, sig.good_add[0]) if sig.good_add else None
    if direction == "raise":
        return _remove_box(lam, sig.good_remove[0]) if sig.good_remove else None
    raise ValueError(f"direction must be 'lower' or 'raise', got {direction!r}")


def f_op(lam, i, s, p, convention=DEFAULT_CONVENTION):
    return apply_crystal_operator(lam, i, "lower", s, p, convention)


def e_op(lam, i, s, p, convention=DEFAULT_CONVENTION):
    return apply_crystal_operator(lam, i, "raise", s, p, convention)


# ---------------------------------------------------------------------------
# tensor products


def _factor_word(node: Node, i: int, s: int, p: int, convention: str):
    word = []
    for idx, lam in enumerate(node):
        sig = signature(lam, i, s if idx == 0 else 0, p, convention)
        word.extend([(idx, -1)] * sig.eps)
        word.extend([(idx, +1)] * sig.phi)
    return word


def tensor_signature(node: Node, i: int, s: int, p: int, convention: str = DEFAULT_CONVENTION):
    """``(eps, phi, f-factor, e-factor)`` for the tensor product rule.

    ``f_i(b1 ⊗ b2) = f_i b1 ⊗ b2`` if ``phi_i(b1) > eps_i(b2)``, else
    ``b1 ⊗ f_i b2``, extended associatively; factor 0 carries charge ``s``.
    """
    minus, plus = _reduce(_factor_word(node, i % p, s, p, convention))
    return len(minus), len(plus), (plus[0] if plus else None), (minus[-1] if minus else None)


def tensor_apply_f(node: Node, i: int, s: int, p: int, convention: str = DEFAULT_CONVENTION) -> Node | None:
    _, _, j, _ = tensor_signature(node, i, s, p, convention)
    if j is None:
        return None
    new = f_op(node[j], i, s if j == 0 else 0, p, convention)
    return node[:j] + (new,) + node[j + 1:]


def tensor_apply_e(node: Node, i: int, s: int, p: int, convention: str = DEFAULT_CONVENTION) -> Node | None:
    _, _, _, j = tensor_signature(node, i, s, p, convention)
    if j is None:
        return None
    new = e_op(node[j], i, s if j == 0 else 0, p, convention)
    return node[:j] + (new,) + node[j + 1:]


# ---------------------------------------------------------------------------
# exploration of the highest-weight component


def _check_params(p: int, k: int, s: int) -> None:
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if not 0 <= s < p:
        raise ValueError(f"s must satisfy 0 <= s < p, got s={s}, p={p}")


def explore(
    p: int,
    k: int,
    s: int,
    max_depth: int,
    bound: Sequence[int] | None = None,
    order: str = "bfs",
    max_states: int | None = None,
    convention: str = DEFAULT_CONVENTION,
) -> dict[tuple[int, ...], int]:
    """Vertex counts per coefficient vector in the component of ``(∅,)*(k+1)``.

    Only vertices of height ``<= max_depth`` are visited; with ``bound`` given,
    only vertices whose coefficients are all ``<= bound``.  Any vertex inside
    these limits is reached through a path that stays inside them, so the
    counts are exact there.
    """
    _check_params(p, k, s)
    if max_states is None:
        max_states = max_states_from_env()
    root: Node = ((),) * (k + 1)
    root_w = (0,) * p
    seen = {root}
    counts: dict[tuple[int, ...], int] = defaultdict(int)
    counts[root_w] += 1
    todo = deque([(root, root_w)])
    pop = todo.popleft if order == "bfs" else todo.pop
    if order not in ("bfs", "dfs"):
        raise ValueError(f"unknown order {order!r}")
    while todo:
        node, w = pop()
        if sum(w) >= max_depth:
            continue
        for i in range(p):
            if bound is not None and w[i] >= bound[i]:
                continue
            nxt = tensor_apply_f(node, i, s, p, convention)
            if nxt is None or nxt in seen:
                continue
            seen.add(nxt)
            if len(seen) > max_states:
                raise CensusOverflow(
                    f"more than {max_states} states (p={p}, k={k}, s={s}, depth={max_depth}); "
                    "raise CML_MAX_STATES to continue"
                )
            nw = w[:i] + (w[i] + 1,) + w[i + 1:]
            counts[nw] += 1
            todo.append((nxt, nw))
    return dict(counts)


def component_weight_census(
    p: int, k: int, s: int, max_depth: int, order: str = "bfs", max_states: int | None = None
) -> dict[AlphaWeight, int]:
    raw = explore(p, k, s, max_depth, order=order, max_states=max_states)
    return {AlphaWeight(p, k, s, c): n for c, n in sorted(raw.items())}


def weight_multiplicity(p: int, k: int, s: int, target, max_states: int | None = None) -> int:
    """``dim V(k*Lambda_0 + Lambda_s)_target``; ``target`` is an AlphaWeight or a coefficient vector."""
    if isinstance(target, AlphaWeight):
        if (target.p, target.k, target.s) != (p, k, s):
            raise ValueError(f"target {target} is not expressed against {k}L0+L{s} for p={p}")
        coeffs = target.coeffs
    else:
        coeffs = tuple(target)
        if len(coeffs) != p:
            raise ValueError(f"need {p} coefficients, got {len(coeffs)}")
    _check_params(p, k, s)
    if any(c < 0 for c in coeffs):
        return 0
    raw = explore(p, k, s, sum(coeffs), bound=coeffs, max_states=max_states)
    return raw.get(coeffs, 0)


def dominant_maximal_check(p: int, k: int, s: int, target: AlphaWeight, max_states: int | None = None) -> bool:
    """True iff ``target`` is a weight and ``target + delta`` is not."""
    if weight_multiplicity(p, k, s, target, max_states) == 0:
        return False
    return weight_multiplicity(p, k, s, target.plus_delta(), max_states) == 0


# ---------------------------------------------------------------------------
# the distinguished weights and the Z enumeration


def lambda_mu_weight(p: int, ell: int, t_or_u: int, kind: str = "lambda") -> tuple[int, ...]:
    """Coefficient vector of ``lambda^p_{ell,t}`` or ``mu^p_{ell,u}`` in ``Q_+``."""
    c = [0] * p
    if kind == "lambda":
        t = t_or_u
        if not (ell >= 1 and t >= 0 and ell + t < p - ell + 1):
            raise ValueError(f"lambda^{p}_({ell},{t}) undefined: need ell>=1, t>=0, ell+t < p-ell+1")
        c[0] += ell
        for j in range(1, t + 1):
            c[j] += ell
        for j in range(1, ell):
            c[t + j] += ell - j
            c[p - j] += ell - j
    elif kind == "mu":
        u = t_or_u
        if not (ell >= 1 and u <= p and ell < u - ell + 1):
            raise ValueError(f"mu^{p}_({ell},{u}) undefined: need ell>=1, u<=p, ell < u-ell+1")
        c[0] += ell
        for j in range(1, ell):
            c[j] += ell - j
            c[u - j] += ell - j
        for j in range(u, p):
            c[j] += ell
    else:
        raise ValueError(f"kind must be 'lambda' or 'mu', got {kind!r}")
    return tuple(c)


def check_grid_params(p: int, k: int, s: int, ell: int) -> None:
    _check_params(p, k, s)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if not 1 <= ell <= (p - s) // 2:
        raise ValueError(f"ell={ell} out of range 1..{(p - s) // 2} for p={p}, s={s}")


def enumerate_Z(
    p: int, k: int, s: int, ell: int, containment: str = "shift", weight: str = "beta"
) -> list[Node]:
    """Chains ``(mu, lam1, ..., lamk)`` of ``p``-cores counting ``Lambda - lambda^p_{ell,s}``.

    ``mu`` fits in ``ell+s`` rows of length ``ell``, each ``lam`` in ``ell`` rows of
    length ``ell+s``; ``lam1`` lies in ``mu`` shifted right by ``s`` (or, with
    ``containment="tau"``, in ``tau_{(p-s)%p}(mu)``) and the ``lam`` decrease.
    The content condition is checked on beta-weights (``weight="beta"``) or on
    their fold into the root lattice (``weight="alpha"``).
    """
    check_grid_params(p, k, s, ell)
    if weight == "beta":
        target = lambda_hat(ell, s)

        def wt(lam, shift):
            return BetaWeight.from_cells(cells(lam), shift)

        def le(a, b):
            return a <= b

        def sub(a, b):
            return a - b

        def zero(a):
            return a.is_zero()

    elif weight == "alpha":
        target = lambda_mu_weight(p, ell, s)

        def wt(lam, shift):
            return residue_content(lam, shift, p)

        def le(a, b):
            return all(x <= y for x, y in zip(a, b))

        def sub(a, b):
            return tuple(x - y for x, y in zip(a, b))

        def zero(a):
            return not any(a)

    else:
        raise ValueError(f"unknown weight mode {weight!r}")

    if containment == "shift":
        def first_ok(mu, lam):
            return contains_with_shift(mu, s, lam)
    elif containment == "tau":
        m = (p - s) % p

        def first_ok(mu, lam, _cache={}):
            key = mu
            if key not in _cache:
                _cache[key] = tau(mu, m, p)
            return contains(_cache[key], lam)
    else:
        raise ValueError(f"unknown containment mode {containment!r}")

    mus = [(mu, wt(mu, s)) for mu in p_cores_in_box(p, ell + s, ell)]
    lams = [(lam, wt(lam, 0)) for lam in p_cores_in_box(p, ell, ell + s)]
    out: list[Node] = []

    def rec(chain, rem):
        if len(chain) == k + 1:
            if zero(rem):
                out.append(tuple(chain))
            return
        prev = chain[-1]
        for lam, w in lams:
            ok = first_ok(prev, lam) if len(chain) == 1 else contains(prev, lam)
            if ok and le(w, rem):
                rec(chain + [lam], sub(rem, w))

    for mu, w in mus:
        if le(w, target):
            rec([mu], sub(target, w))
    return sorted(out)
