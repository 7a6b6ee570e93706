"""
Lattice paths, Dyck paths, standardization and the 123-avoiding bijection.

An n-subset ``I`` of ``[2n]`` is read as a path whose step ``i`` is up when
``i`` is in ``I`` and down otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import DomainError
from .families import as_mask, mask
from .perms import avoids_123, catalan

__all__ = [
    "LatticePath", "subset_to_path", "path_to_word", "word_to_upsteps",
    "is_dyck", "dyck_words", "standardize", "krattenthaler", "half_saw_lengths",
    "first_peak_height", "axis_returns", "standardization_fiber_size",
]


@dataclass(frozen=True)
class LatticePath:
    steps: str  # "U"/"D" per step
    heights: tuple[int, ...]  # height after each step
    peaks: tuple[tuple[int, int], ...]  # (step index, height)
    below: tuple[tuple[int, int], ...]  # maximal below-axis excursions, first/last step
    saws: tuple[int, ...] | None  # saw lengths in steps; None unless a Dyck path

    @property
    def is_dyck(self) -> bool:
        return not self.below and (not self.heights or self.heights[-1] == 0)


def path_to_word(I, length: int) -> str:
    m = as_mask(I)
    return "".join("U" if m >> i & 1 else "D" for i in range(length))


def word_to_upsteps(word: str) -> int:
    return mask(i for i, s in enumerate(word, 1) if s == "U")


def is_dyck(word: str) -> bool:
    h = 0
    for s in word:
        h += 1 if s == "U" else -1
        if h < 0:
            return False
    return h == 0


def _saws(word: str, peaks: Sequence[tuple[int, int]]) -> tuple[int, ...]:
    saws: list[int] = []
    prev = None
    for pos, h in peaks:
        if h != 1:
            prev = None
            continue
        if prev is not None and pos == prev + 2:
            saws[-1] += 2
        else:
            saws.append(2)
        prev = pos
    return tuple(saws)


def subset_to_path(I, n: int) -> LatticePath:
    word = path_to_word(I, 2 * n)
    heights, h = [], 0
    for s in word:
        h += 1 if s == "U" else -1
        heights.append(h)
    peaks = tuple(
        (i, heights[i - 1])
        for i in range(1, len(word))
        if word[i - 1] == "U" and word[i] == "D"
    )
    below, start = [], None
    for i, s in enumerate(word, 1):
        before = heights[i - 2] if i > 1 else 0
        if start is None and before == 0 and s == "D":
            start = i
        if start is not None and heights[i - 1] == 0:
            below.append((start, i))
            start = None
    if start is not None:
        below.append((start, len(word)))
    dyck = not below and h == 0
    return LatticePath(
        steps=word,
        heights=tuple(heights),
        peaks=peaks,
        below=tuple(below),
        saws=_saws(word, peaks) if dyck else None,
    )


def standardize(I, n: int) -> int:
    """Replace every below-axis excursion of ``I`` by a saw of the same length."""
    m = as_mask(I)
    if bin(m).count("1") != n or m >> (2 * n):
        raise ValueError(f"expected an {n}-subset of [1, {2 * n}]")
    path = subset_to_path(m, n)
    steps = list(path.steps)
    for a, b in path.below:
        for i in range(a, b + 1):
            steps[i - 1] = "U" if (i - a) % 2 == 0 else "D"
    return word_to_upsteps("".join(steps))


def half_saw_lengths(word: str) -> tuple[int, ...]:
    n = len(word) // 2
    path = subset_to_path(word_to_upsteps(word), n)
    if path.saws is None:
        raise ValueError("not a Dyck path")
    return tuple(s // 2 for s in path.saws)


def standardization_fiber_size(word: str) -> int:
    out = 1
    for ell in half_saw_lengths(word):
        out *= catalan(ell + 1)
    return out


def krattenthaler(w: Sequence[int]) -> str:
    """
    Dyck word of a 123-avoiding permutation, built from its left-to-right
    minima ``i_1 < ... < i_k``::

        U^{w(i_0)-w(i_1)} D^{i_2-i_1} ... U^{w(i_{k-1})-w(i_k)} D^{i_{k+1}-i_k}

    with ``w(i_0) = i_{k+1} = n + 1``.
    """
    if not avoids_123(w):
        raise DomainError(f"{tuple(w)} contains 123")
    n = len(w)
    minima, low = [], n + 1
    for i, x in enumerate(w, 1):
        if x < low:
            minima.append(i)
            low = x
    values = [n + 1] + [w[i - 1] for i in minima]
    positions = minima + [n + 1]
    parts = []
    for t in range(len(minima)):
        parts.append("U" * (values[t] - values[t + 1]))
        parts.append("D" * (positions[t + 1] - positions[t]))
    return "".join(parts)


def dyck_words(n: int) -> Iterator[str]:
    """All Dyck words of length ``2n`` in lexicographic order (``D < U``)."""

    def rec(prefix: str, up: int, down: int) -> Iterator[str]:
        if up == n and down == n:
            yield prefix
            return
        if down < up:
            yield from rec(prefix + "D", up, down + 1)
        if up < n:
            yield from rec(prefix + "U", up + 1, down)

    yield from rec("", 0, 0)


def first_peak_height(word: str) -> int:
    return word.index("D") if "D" in word else len(word)


def axis_returns(word: str) -> int:
    """Times the path touches height 0 after the start."""
    h = count = 0
    for s in word:
        h += 1 if s == "U" else -1
        count += h == 0
    return count
