"""
Ranks and Tutte polynomials of ``P_w`` in closed form.

Ranks come from the rank certificates ``u_r(I)``: ``I`` has rank at least
``r`` in ``P_w`` exactly when ``w <= u_r(I)``. Tutte polynomials are summed
over the 123-avoiding permutations above ``w``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .config import bounds, require
from .dyck import axis_returns, dyck_words, first_peak_height
from .errors import DomainError
from .families import PrecOrder, as_mask, elements, mask, prec_sort, size
from .oracle import pattern_Mw, tutte_by_rank
from .perms import (
    all_perms, avoiders_123, avoids_123, bruhat_leq, classify_positions, length,
    longest,
)
from .poly import BivariatePoly
from .positroid import enumerate_Pw, u_perm

__all__ = [
    "J_r", "u_r", "rank_in_Pw", "stats_cd", "T_n", "T_n_dyck", "T_Kn", "U_w",
    "tutte_Pw", "mobius_check", "mobius_expected", "jr_fiber",
]

X, Y = BivariatePoly.x(), BivariatePoly.y()
ONE = BivariatePoly.const(1)
# 1 - (x-1)(y-1)
CORRECTION = ONE - (X - 1) * (Y - 1)


def J_r(I, r: int, n: int) -> int:
    """
    The ``n``-set ``{i_1, ..., i_r, j_1, ..., j_{n-r}}``: the ``r`` first
    elements of ``I`` followed by the first ``n - r`` elements outside them,
    everything in the order ``n+1, n, n+2, n-1, ..., 2n, 1``.
    """
    m = as_mask(I)
    if m >> (2 * n):
        raise ValueError(f"set outside [1, {2 * n}]")
    if not 0 <= r <= min(size(m), n):
        raise ValueError(f"r = {r} invalid for a set of size {size(m)} (n = {n})")
    order = PrecOrder(n)
    head = prec_sort(m, order)[:r]
    taken = set(head)
    fill = [x for x in order.sequence if x not in taken][: n - r]
    return mask(head + fill)


def u_r(I, r: int, n: int) -> tuple[int, ...]:
    return u_perm(J_r(I, r, n), n)


def rank_in_Pw(w: Sequence[int], I) -> int:
    n = len(w)
    m = as_mask(I)
    for r in range(min(size(m), n), 0, -1):
        if bruhat_leq(w, u_r(m, r, n)):
            return r
    return 0


def stats_cd(I, n: int) -> tuple[int, int, int]:
    """
    ``c``: longest initial segment of the order contained in ``I``.
    ``d``: number of ``j`` in ``[n]`` with ``#(I & [n-j+2, n+j]) = j - 1``.
    ``cbar``: longest final segment of the order missing ``I``.
    """
    m = as_mask(I)
    seq = PrecOrder(n).sequence
    c = 0
    for x in seq:
        if not m >> (x - 1) & 1:
            break
        c += 1
    cbar = 0
    for x in reversed(seq):
        if m >> (x - 1) & 1:
            break
        cbar += 1
    d = sum(1 for j in range(1, n + 1) if size(m & mask(range(n - j + 2, n + j + 1))) == j - 1)
    return c, d, cbar


@lru_cache(maxsize=None)
def T_n(n: int) -> BivariatePoly:
    """Tutte polynomial of ``P_{w_0}``, summed as ``x^c y^d`` over its bases."""
    require(n, bounds().enumerate_max_n, "n")
    if n == 0:
        return ONE
    out: dict[tuple[int, int], int] = {}
    for I in enumerate_Pw(longest(n)).members:
        c, d, _ = stats_cd(I, n)
        out[(c, d)] = out.get((c, d), 0) + 1
    return BivariatePoly(out)


def T_n_dyck(n: int) -> BivariatePoly:
    """Same polynomial from Dyck paths of length ``2n + 2``: ``x^(a-1) y^(b-1)``."""
    out: dict[tuple[int, int], int] = {}
    for d in dyck_words(n + 1):
        k = (first_peak_height(d) - 1, axis_returns(d) - 1)
        out[k] = out.get(k, 0) + 1
    return BivariatePoly(out)


def T_Kn(K: tuple[int, int], n: int) -> BivariatePoly:
    a, b = K
    t = T_n(b - a + 1)
    touches_first, touches_last = a == 1, b == n
    if touches_first and touches_last:
        return t
    if touches_first:
        return t.specialize(y=1)
    if touches_last:
        return t.specialize(x=1)
    return t.specialize(x=1, y=1)


def U_w(v: Sequence[int]) -> BivariatePoly:
    if not avoids_123(v):
        raise DomainError(f"{tuple(v)} contains 123")
    out = ONE
    for run in classify_positions(v).runs:
        out = out * T_Kn(run, len(v))
    return out


def tutte_Pw(w: Sequence[int]) -> BivariatePoly:
    n = len(w)
    require(n, bounds().enumerate_max_n, "n")
    w0 = longest(n)
    total = BivariatePoly()
    for v in avoiders_123(n):
        if v != w0 and bruhat_leq(w, v):
            total = total + U_w(v)
    return U_w(w0) + CORRECTION * total


def mobius_check(w: Sequence[int], method: str = "closed") -> BivariatePoly:
    """Signed sum of the Tutte polynomials of ``P_v`` over ``v >= w``."""
    n = len(w)
    lw = length(w)
    total = BivariatePoly()
    for v in all_perms(n):
        if not bruhat_leq(w, v):
            continue
        t = tutte_Pw(v) if method == "closed" else tutte_by_rank(pattern_Mw(v))
        total = total + (t if (length(v) - lw) % 2 == 0 else -t)
    return total


def mobius_expected(w: Sequence[int]) -> BivariatePoly:
    n = len(w)
    if tuple(w) == longest(n):
        return T_n(n)
    if avoids_123(w):
        return CORRECTION * U_w(w)
    return BivariatePoly()


def jr_fiber(K, r: int, n: int) -> frozenset[int]:
    """
    Sets ``I`` with ``J_r(I) = K`` written as ``E' | F | G``: ``E`` is the
    longest initial segment of the order inside ``K``, ``F = K - E``,
    ``E'`` has ``#E - n + r`` elements of ``E`` and ``G`` lies strictly after
    ``max F`` (anywhere outside ``E'`` when ``F`` is empty).
    """
    k = as_mask(K)
    order = PrecOrder(n)
    seq = order.sequence
    c = 0
    while c < len(seq) and k >> (seq[c] - 1) & 1:
        c += 1
    E = seq[:c]
    F = mask(elements(k)) & ~mask(E)
    need = len(E) - n + r
    if need < 0:
        return frozenset()
    if F:
        top = max(order.rank[x] for x in elements(F))
        tail = [x for x in seq if order.rank[x] > top]
    else:
        tail = None
    out = set()
    for Ep in combinations(E, need):
        base = mask(Ep) | F
        pool = tail if tail is not None else [x for x in seq if x not in Ep]
        for t in range(len(pool) + 1):
            for G in combinations(pool, t):
                out.add(base | mask(G))
    return frozenset(out)
