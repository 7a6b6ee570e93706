"""
Permutations and injective words in one-line notation.

Everything is one-indexed: a permutation of ``[n]`` is a tuple ``w`` with
``w[i-1]`` the value ``w(i)``.

>>> classify_positions((6, 4, 5, 3, 1, 2))
PositionClasses(L=frozenset({2, 5}), R=frozenset({3, 6}), A=frozenset({1, 4}), runs=((1, 1), (4, 4)))
>>> g_stat((6, 4, 5, 3, 1, 2))
4
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import comb
from typing import Iterable, Iterator, Sequence

from .config import bounds

__all__ = [
    "Perm", "PositionClasses",
    "check_perm", "parse_perm", "format_word", "identity", "longest", "inverse",
    "compose", "length", "all_perms", "bruhat_leq", "contains_pattern",
    "avoids_123", "avoiders_123", "classify_positions", "anti_fixed_runs",
    "g_stat", "catalan", "bruhat_upper", "bruhat_lower",
]

# a permutation (or injective word) in one-line notation
Perm = tuple[int, ...]


def check_perm(w: Sequence[int]) -> Perm:
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of [1, {len(w)}]: {w}")
    return w


_TOKEN = re.compile(r"\((\d+)\)|(\d)")


def parse_perm(text: str) -> Perm:
    """
    Read a one-line word such as ``"645312"``, ``"(10)9643(15)"`` or ``"3,1,2"``.
    """
    text = text.strip()
    if "," in text or " " in text:
        parts = [p for p in re.split(r"[,\s]+", text) if p]
        if not all(p.isdigit() for p in parts):
            raise ValueError(f"malformed permutation word: {text!r}")
        return check_perm(int(p) for p in parts)
    if not text or _TOKEN.sub("", text):
        raise ValueError(f"malformed permutation word: {text!r}")
    values = [int(a or b) for a, b in _TOKEN.findall(text)]
    return check_perm(values)


def format_word(w: Iterable[int]) -> str:
    """One-line word with multi-digit entries parenthesised, e.g. ``5678(10)9``."""
    return "".join(str(x) if x < 10 else f"({x})" for x in w)


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def longest(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def inverse(w: Sequence[int]) -> Perm:
    inv = [0] * len(w)
    for i, x in enumerate(w, 1):
        inv[x - 1] = i
    return tuple(inv)


def compose(u: Sequence[int], v: Sequence[int]) -> Perm:
    """The product ``u v``, i.e. ``i -> u(v(i))``."""
    return tuple(u[x - 1] for x in v)


def length(w: Sequence[int]) -> int:
    """Number of inversions."""
    return sum(1 for i, j in combinations(range(len(w)), 2) if w[i] > w[j])


def all_perms(n: int) -> Iterator[Perm]:
    """All of S_n in lexicographic order."""
    return permutations(range(1, n + 1))


def bruhat_leq(u: Sequence[int], v: Sequence[int]) -> bool:
    """
    Tableau criterion: ``u <= v`` iff for every ``j`` the sorted values of
    ``u[:j]`` are componentwise at most those of ``v[:j]``.

    Works for injective words of equal length, not only permutations.
    """
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} != {len(v)}")
    su: list[int] = []
    sv: list[int] = []
    for a, b in zip(u, v):
        _insort(su, a)
        _insort(sv, b)
        if any(x > y for x, y in zip(su, sv)):
            return False
    return True


def _insort(xs: list[int], x: int) -> None:
    i = len(xs)
    xs.append(x)
    while i and xs[i - 1] > x:
        xs[i] = xs[i - 1]
        i -= 1
    xs[i] = x


def contains_pattern(w: Sequence[int], p: Sequence[int]) -> bool:
    """True if some subsequence of ``w`` is order-isomorphic to ``p``."""
    k = len(p)
    if k > len(w):
        raise ValueError("pattern longer than the word")
    if k == 0:
        return True

    # extend a partial embedding position by position, checking relative
    # order against every entry already placed
    def extend(start: int, chosen: list[int]) -> bool:
        t = len(chosen)
        if t == k:
            return True
        for pos in range(start, len(w) - (k - t) + 1):
            x = w[pos]
            if all((x > w[c]) == (p[t] > p[s]) for s, c in enumerate(chosen)):
                chosen.append(pos)
                if extend(pos + 1, chosen):
                    return True
                chosen.pop()
        return False

    return extend(0, [])


def avoids_123(w: Sequence[int]) -> bool:
    # linear scan: track the smallest value seen and the smallest top of an
    # increasing pair
    low = pair_top = None
    for x in w:
        if pair_top is not None and x > pair_top:
            return False
        if low is not None and x > low:
            pair_top = x if pair_top is None else min(pair_top, x)
        low = x if low is None else min(low, x)
    return True


@lru_cache(maxsize=None)
def avoiders_123(n: int) -> tuple[Perm, ...]:
    """All 123-avoiding permutations of ``[n]`` in lexicographic order."""
    out: list[Perm] = []
    word: list[int] = []
    used = [False] * (n + 1)

    # same invariants as avoids_123, so only avoiding prefixes are extended
    def grow(low: int, pair_top: int) -> None:
        if len(word) == n:
            out.append(tuple(word))
            return
        for x in range(1, min(pair_top, n + 1)):
            if used[x]:
                continue
            used[x] = True
            word.append(x)
            grow(min(low, x), min(pair_top, x) if x > low else pair_top)
            word.pop()
            used[x] = False

    grow(n + 1, n + 2)
    return tuple(out)


@dataclass(frozen=True)
class PositionClasses:
    L: frozenset[int]
    R: frozenset[int]
    A: frozenset[int]
    runs: tuple[tuple[int, int], ...]


def _ltr_minima(w: Sequence[int]) -> set[int]:
    out, low = set(), None
    for i, x in enumerate(w, 1):
        if low is None or x < low:
            out.add(i)
            low = x
    return out


def _rtl_maxima(w: Sequence[int]) -> set[int]:
    out, high = set(), None
    for i in range(len(w), 0, -1):
        x = w[i - 1]
        if high is None or x > high:
            out.add(i)
            high = x
    return out


def anti_fixed_runs(anti: Iterable[int]) -> tuple[tuple[int, int], ...]:
    """Maximal intervals ``(start, end)`` of a set of positions."""
    runs: list[list[int]] = []
    for a in sorted(anti):
        if runs and runs[-1][1] == a - 1:
            runs[-1][1] = a
        else:
            runs.append([a, a])
    return tuple((a, b) for a, b in runs)


def classify_positions(w: Sequence[int]) -> PositionClasses:
    n = len(w)
    lmin, rmax = _ltr_minima(w), _rtl_maxima(w)
    anti = frozenset(i for i in range(1, n + 1) if w[i - 1] == n - i + 1)
    return PositionClasses(
        L=frozenset(lmin - rmax),
        R=frozenset(rmax - lmin),
        A=anti,
        runs=anti_fixed_runs(anti),
    )


def catalan(k: int) -> int:
    if k < 0:
        raise ValueError("catalan number of a negative index")
    if k <= bounds().catalan_cache:
        return _catalan_cached(k)
    return comb(2 * k, k) // (k + 1)


@lru_cache(maxsize=None)
def _catalan_cached(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def g_stat(w: Sequence[int]) -> int:
    """Product of ``C_{l+1}`` over the lengths ``l`` of the anti-fixed runs."""
    out = 1
    for a, b in classify_positions(w).runs:
        out *= catalan(b - a + 2)
    return out


def bruhat_upper(w: Sequence[int], pool: Iterable[Perm] | None = None) -> list[Perm]:
    """Elements of ``pool`` (default all of S_n) that are ``>= w``."""
    pool = all_perms(len(w)) if pool is None else pool
    return [v for v in pool if bruhat_leq(w, v)]


def bruhat_lower(w: Sequence[int], pool: Iterable[Perm] | None = None) -> list[Perm]:
    pool = all_perms(len(w)) if pool is None else pool
    return [v for v in pool if bruhat_leq(v, w)]
