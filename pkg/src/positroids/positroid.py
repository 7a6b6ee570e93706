"""
The positroids ``P_w`` and their decomposition into Catalan pieces.

``P_w`` is the set of ``n``-subsets ``I`` of ``[2n]`` whose maximal minor in a
generic matrix with row ``i`` supported on ``[w(i), n+i]`` is nonzero. It is
computed here without any matching: ``I`` is a basis exactly when the
injective word ``v_I`` lies above ``w`` in Bruhat order.

>>> from positroids.families import mask
>>> v_word(mask({1, 2, 5, 7, 10, 11}), 6)
(7, 5, 2, 10, 11, 1)
>>> u_perm(mask({1, 3, 4, 6, 9, 10, 15, 16, 17}), 9)
(9, 8, 6, 4, 3, 7, 5, 2, 1)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .config import bounds, require
from .dyck import dyck_words, word_to_upsteps
from .errors import DomainError
from .families import (
    SetFamily, as_mask, direct_sum, elements, mask, relabel, size, z_segment,
)
from .oracle import SupportPattern
from .perms import (
    avoiders_123, avoids_123, bruhat_leq, classify_positions, format_word, longest,
)

__all__ = [
    "n_subsets", "v_word", "u_perm", "meet_with_longest", "member",
    "member_via_blocks", "member_via_juggling", "enumerate_Pw", "P_Kn",
    "Q_family", "q_ground_set", "pattern_Nw", "AffinePermutation",
    "affine_perm", "juggling", "reflect_family", "reflect_set", "star_relabel",
    "catalan_matroid", "alpha_map", "reverse_positroid_by_intervals",
]


@lru_cache(maxsize=None)
def n_subsets(m: int, k: int) -> tuple[int, ...]:
    """All ``k``-subsets of ``[m]`` as masks, lexicographic."""
    return tuple(mask(c) for c in combinations(range(1, m + 1), k))


def _check_half(I, n: int) -> int:
    m = as_mask(I)
    if size(m) != n or m >> (2 * n):
        raise ValueError(f"expected an {n}-subset of [1, {2 * n}], got {elements(m)}")
    return m


def v_word(I, n: int) -> tuple[int, ...]:
    """
    Large elements ``i > n`` sit at position ``i - n``; the small ones fill
    the remaining positions in decreasing order.
    """
    xs = elements(_check_half(I, n))
    word = [0] * n
    for x in xs:
        if x > n:
            word[x - n - 1] = x
    small = iter(sorted((x for x in xs if x <= n), reverse=True))
    return tuple(x if x else next(small) for x in word)


def u_perm(I, n: int) -> tuple[int, ...]:
    """The Bruhat-largest ``w`` in ``S_n`` with ``I`` in ``P_w``."""
    v = v_word(I, n)
    kept = {j: x for j, x in enumerate(v, 1) if x <= n - j + 1}
    rest = iter(sorted(set(range(1, n + 1)) - set(kept.values()), reverse=True))
    return tuple(kept[j] if j in kept else next(rest) for j in range(1, n + 1))


def meet_with_longest(v: Sequence[int]) -> tuple[int, ...]:
    """
    Greatest lower bound of an injective word ``v`` and ``w_0`` in Bruhat
    order, built from the nested sets ``E_j = min(v([j]), w_0([j]))`` taken
    entrywise after sorting.
    """
    n = len(v)
    out, prev = [], set()
    for j in range(1, n + 1):
        b = sorted(v[:j])
        e = {min(b[i], n - j + 1 + i) for i in range(j)}
        new = e - prev
        if len(new) != 1 or not prev <= e:
            raise AssertionError(f"E sets not nested at j={j} for {tuple(v)}")
        out.append(new.pop())
        prev = e
    return tuple(out)


def member(w: Sequence[int], I) -> bool:
    n = len(w)
    return bruhat_leq(w, v_word(I, n))


def member_via_blocks(w: Sequence[int], I) -> bool:
    """``B_j(I) >= w([j])`` for every ``j``, with ``B_j`` read off a rotation of ``I``."""
    n = len(w)
    xs = elements(_check_half(I, n))
    for j in range(1, n + 1):
        rot = sorted((x - n - j - 1) % (2 * n) + 1 for x in xs)
        block = sorted(b - n + j for b in rot[n - j:])
        if any(a < b for a, b in zip(block, sorted(w[:j]))):
            return False
    return True


@dataclass(frozen=True)
class AffinePermutation:
    """``f(i + N) = f(i) + N``, stored as the window ``f(1), ..., f(N)``."""

    window: tuple[int, ...]

    def __post_init__(self):
        N = len(self.window)
        if len({x % N for x in self.window}) != N:
            raise ValueError("window values must be distinct mod the quasiperiod")

    @property
    def quasiperiod(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        N = self.quasiperiod
        q, r = divmod(i - 1, N)
        return self.window[r] + q * N

    def is_bounded(self) -> bool:
        N = self.quasiperiod
        return all(i <= x <= N + i for i, x in enumerate(self.window, 1))

    def __str__(self) -> str:
        return format_word(self.window)


def affine_perm(w: Sequence[int]) -> AffinePermutation:
    n = len(w)
    return AffinePermutation(tuple(range(n + 1, 2 * n + 1)) + tuple(x + 2 * n for x in w))


def juggling(f: AffinePermutation) -> tuple[int, ...]:
    """``J_i = {f(j) - i + 1 : j < i} & N`` for ``i = 1..N``, as masks."""
    N = f.quasiperiod
    out = []
    for i in range(1, N + 1):
        vals = (f(j) - i + 1 for j in range(i - N, i))
        out.append(mask(v for v in vals if v >= 1))
    return tuple(out)


def _gale_geq(a: int, b: int) -> bool:
    return all(x >= y for x, y in zip(elements(a), elements(b)))


def member_via_juggling(w: Sequence[int], I) -> bool:
    """Positroid test ``chi^{-i+1} I >= J_i`` for the juggling sequence of ``f_w``."""
    n = len(w)
    N = 2 * n
    xs = elements(_check_half(I, n))
    for i, J in enumerate(juggling(affine_perm(w)), 1):
        rotated = mask((x - i) % N + 1 for x in xs)
        if not _gale_geq(rotated, J):
            return False
    return True


def enumerate_Pw(w: Sequence[int], strategy: str = "filter") -> SetFamily:
    """
    Bases of ``P_w``. ``"filter"`` tests every ``n``-subset through ``v_I``;
    ``"qunion"`` unions the pieces ``Q_v`` over 123-avoiding ``v >= w``.
    """
    n = len(w)
    require(n, bounds().enumerate_max_n, "n")
    if strategy == "filter":
        return SetFamily(2 * n, frozenset(I for I in n_subsets(2 * n, n) if member(w, I)))
    if strategy == "qunion":
        out: frozenset[int] = frozenset()
        for v in avoiders_123(n):
            if bruhat_leq(w, v):
                out |= Q_family(v).members
        return SetFamily(2 * n, out)
    raise ValueError(f"unknown strategy {strategy!r}")


def _interval(K) -> tuple[int, int]:
    if isinstance(K, tuple) and len(K) == 2 and K[0] <= K[1]:
        return K
    xs = sorted(K)
    if not xs or xs != list(range(xs[0], xs[-1] + 1)):
        raise ValueError(f"{K} is not a nonempty interval")
    return xs[0], xs[-1]


@lru_cache(maxsize=None)
def _P_reverse(k: int) -> frozenset[int]:
    return enumerate_Pw(longest(k)).members


def P_Kn(K, n: int) -> SetFamily:
    """The Catalan piece ``P_k`` (``k = #K``) carried increasingly onto ``Z_k K``."""
    a, b = _interval(K)
    if not 1 <= a <= b <= n:
        raise ValueError(f"interval [{a}, {b}] not inside [1, {n}]")
    k = b - a + 1
    target = elements(z_segment(mask(range(a, b + 1)), k, n))
    return SetFamily(2 * n, frozenset(relabel(I, target) for I in _P_reverse(k)))


def Q_family(v: Sequence[int]) -> SetFamily:
    """
    ``P_{A_1,n} + ... + P_{A_k,n} + {v(L(v))} + {n + R(v)}`` (direct sums) for
    123-avoiding ``v``; empty when ``v`` contains 123.
    """
    n = len(v)
    if not avoids_123(v):
        return SetFamily(2 * n, frozenset())
    pc = classify_positions(v)
    fixed = mask(v[i - 1] for i in pc.L) | mask(n + i for i in pc.R)
    out = SetFamily(2 * n, frozenset({fixed}))
    for run in pc.runs:
        out = direct_sum(out, P_Kn(run, n))
    return out


def q_ground_set(v: Sequence[int]) -> int:
    """``v(L) | (R + n) | Z_{#A} A``: the elements used by the piece ``Q_v``."""
    n = len(v)
    pc = classify_positions(v)
    g = mask(v[i - 1] for i in pc.L) | mask(n + i for i in pc.R)
    if pc.A:
        g |= z_segment(mask(pc.A), len(pc.A), n)
    return g


def pattern_Nw(v: Sequence[int]) -> SupportPattern:
    """Support of a generic matrix whose matroid is ``Q_v`` (123-avoiding ``v``)."""
    if not avoids_123(v):
        raise DomainError(f"{tuple(v)} contains 123")
    n = len(v)
    pc = classify_positions(v)
    rows = [0] * n
    for i in pc.L:
        rows[i - 1] = 1 << (v[i - 1] - 1)
    for i in pc.R:
        rows[i - 1] = 1 << (n + i - 1)
    for a, b in pc.runs:
        ell = b - a + 1
        cols = elements(z_segment(mask(range(a, b + 1)), ell, n))
        for t in range(1, ell + 1):
            # row t of the reverse-permutation pattern of size ell
            rows[a + t - 2] = mask(cols[q - 1] for q in range(ell - t + 1, ell + t + 1))
    return SupportPattern(tuple(rows), 2 * n)


def reflect_set(I, n: int) -> int:
    return mask(2 * n + 1 - x for x in elements(as_mask(I)))


def reflect_family(B: SetFamily) -> SetFamily:
    if B.ground % 2:
        raise ValueError("reflection needs a ground set [2n]")
    n = B.ground // 2
    return B.map(lambda m: reflect_set(m, n))


def star_relabel(B: SetFamily) -> SetFamily:
    """Relabel by ``(n+1)...(2n)1...n``, i.e. ``x -> x + n mod 2n``."""
    if B.ground % 2:
        raise ValueError("relabelling needs a ground set [2n]")
    n = B.ground // 2
    images = tuple(range(n + 1, 2 * n + 1)) + tuple(range(1, n + 1))
    return B.map(lambda m: relabel(m, images))


def catalan_matroid(k: int) -> SetFamily:
    """Up-step sets of the Dyck paths of length ``2k``."""
    return SetFamily(2 * k, frozenset(word_to_upsteps(d) for d in dyck_words(k)))


def alpha_map(n: int) -> dict[int, int]:
    """``2, 3, 4, 5, ..., 2n, 2n+1 -> n+1, n, n+2, n-1, ..., 2n, 1``."""
    out = {}
    for t in range(1, n + 1):
        out[2 * t] = n + t
        out[2 * t + 1] = n - t + 1
    return out


def reverse_positroid_by_intervals(n: int) -> SetFamily:
    """``n``-subsets with ``#(I & [n-j+1, n+j]) >= j`` for all ``j``."""
    tests = [(mask(range(n - j + 1, n + j + 1)), j) for j in range(1, n + 1)]
    return SetFamily(
        2 * n,
        frozenset(I for I in n_subsets(2 * n, n) if all(size(I & t) >= j for t, j in tests)),
    )

