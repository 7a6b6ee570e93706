"""
Rothe diagrams, diagram matroids ``DM_w`` and the composite shift relating
them to ``P_w``, plus batch checkers that report on the conjectured
relations between the two.

>>> sorted(rothe_diagram((3, 1, 5, 2, 4)))
[(1, 1), (1, 2), (3, 2), (3, 4)]
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .config import bounds, require
from .families import SetFamily, elements, mask, shift_family
from .oracle import (
    SupportPattern, enumerate_bases, find_isomorphism, shift_pattern, tutte_by_rank,
)
from .perms import (
    all_perms, avoiders_123, bruhat_leq, contains_pattern, format_word, g_stat,
)
from .positroid import enumerate_Pw
from .tutte import tutte_Pw

__all__ = [
    "rothe_diagram", "pattern_DMw", "shift_w_pattern", "shift_w_family",
    "CONJECTURES", "check_conjectures", "conjecture_limit",
]

CONJECTURES = ("basis-count", "isomorphism", "tutte", "shift")
ISO_PATTERN = (2, 1, 3, 5, 4)


def rothe_diagram(w: Sequence[int]) -> frozenset[tuple[int, int]]:
    """Cells ``(i, w(j))`` with ``i < j`` and ``w(i) > w(j)``."""
    n = len(w)
    return frozenset(
        (i, w[j - 1])
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if w[i - 1] > w[j - 1]
    )


def pattern_DMw(w: Sequence[int]) -> SupportPattern:
    """``[A | I_n]`` with ``A`` zero exactly on the Rothe diagram."""
    n = len(w)
    D = rothe_diagram(w)
    rows = []
    for i in range(1, n + 1):
        left = mask(j for j in range(1, n + 1) if (i, j) not in D)
        rows.append(left | 1 << (n + i - 1))
    return SupportPattern(tuple(rows), 2 * n)


def _steps(w: Sequence[int]) -> list[tuple[int, int]]:
    # n+1 -> w(1) is applied first, 2n -> w(n) last
    n = len(w)
    return [(n + k, w[k - 1]) for k in range(1, n + 1)]


def shift_w_pattern(w: Sequence[int], S: SupportPattern) -> SupportPattern:
    if S.cols != 2 * len(w):
        raise ValueError(f"pattern has {S.cols} columns, expected {2 * len(w)}")
    for i, j in _steps(w):
        S = shift_pattern(i, j, S)
    return S


def shift_w_family(w: Sequence[int], F: SetFamily) -> SetFamily:
    if F.ground != 2 * len(w):
        raise ValueError(f"family lives on [{F.ground}], expected [{2 * len(w)}]")
    for i, j in _steps(w):
        F = shift_family(i, j, F)
    return F


def conjecture_limit(which: str) -> int:
    suite = bounds().suite_max_n
    if which == "isomorphism":
        return suite.get("isomorphism", 5)
    return suite.get("conjectures", 6)


def _sets(ms: Iterable[int]) -> list[list[int]]:
    return sorted(list(elements(m)) for m in ms)


def _check_one(which: str, w: tuple[int, ...], cache: dict) -> tuple[bool, dict]:
    def dm() -> SetFamily:
        if "dm" not in cache:
            cache["dm"] = enumerate_bases(pattern_DMw(w))
        return cache["dm"]

    def pw() -> SetFamily:
        if "pw" not in cache:
            cache["pw"] = enumerate_Pw(w)
        return cache["pw"]

    if which == "basis-count":
        expected = sum(g_stat(v) for v in avoiders_123(len(w)) if bruhat_leq(w, v))
        got = len(dm())
        return got == expected, {"diagram_bases": got, "expected": expected}
    if which == "tutte":
        a, b = tutte_by_rank(pattern_DMw(w)), tutte_Pw(w)
        return a == b, {"diagram": str(a), "positroid": str(b)}
    if which == "shift":
        shifted = shift_w_family(w, pw()).members
        d = dm().members
        return shifted == d, {
            "only_shifted": _sets(shifted - d)[:5],
            "only_diagram": _sets(d - shifted)[:5],
        }
    if which == "isomorphism":
        sigma = find_isomorphism(pw(), dm())
        avoids = len(w) < len(ISO_PATTERN) or not contains_pattern(w, ISO_PATTERN)
        info = {"isomorphic": sigma is not None, "avoids_21354": avoids}
        if sigma is not None:
            info["bijection"] = list(sigma)
        return (sigma is not None) == avoids, info
    raise ValueError(f"unknown conjecture {which!r}")


def check_conjectures(n: int, which: str | Sequence[str] = "all") -> list[dict]:
    """
    One entry ``{n, conjecture, permutation, status, witness?}`` per
    conjecture and permutation of ``[n]``, permutations in lexicographic
    order. A failing entry carries the differing objects as its witness;
    the isomorphism entries always record both the search outcome and the
    pattern test.
    """
    names = CONJECTURES if which == "all" else ((which,) if isinstance(which, str) else tuple(which))
    for name in names:
        if name not in CONJECTURES:
            raise ValueError(f"unknown conjecture {name!r}")
        require(n, conjecture_limit(name), f"n for {name}")
    report = []
    for w in all_perms(n):
        cache: dict = {}
        for name in names:
            ok, info = _check_one(name, w, cache)
            entry = {
                "n": n,
                "conjecture": name,
                "permutation": format_word(w),
                "status": "PASS" if ok else "FAIL",
            }
            if not ok or name == "isomorphism":
                entry["witness"] = info
            report.append(entry)
    return report
